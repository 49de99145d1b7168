"""Non-contractibility certificates for orbit-bounding loops.

A LoopSpec describes a loop gamma_0 = prod_i eta^n B_i O_i C_i in the
surface group, where C_i = phi(B_{sigma(i)}^{-1}) is derived from the
monodromy, never stored.  The certificate computes the signed sum C of
long eta-block exponents in the reduced word and checks the accounting
bound C >= p(n - 6d) > 0; every positive verdict is cross-checked against
the independent reduction oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import count_long_exponent_sum, eta_power_decompose
from .words import Automorphism, SurfaceGroup, Word, is_trivial


class ParameterError(ValueError):
    """A certificate precondition (N >= 5, dfrak >= r_phi) is violated."""


@dataclass(frozen=True)
class LoopSpec:
    """Data of the loop: block counts p, winding n, based arcs B_i and
    bounded closing arcs O_i, and the permutation sigma pairing B's with
    the monodromy images C_i = phi(B_{sigma(i)}^{-1})."""

    p: int
    n: int
    B: tuple[Word, ...]
    O: tuple[Word, ...]
    sigma: tuple[int, ...]
    o_length_bound: int = 64

    def __post_init__(self) -> None:
        object.__setattr__(self, "B", tuple(self.B))
        object.__setattr__(self, "O", tuple(self.O))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        if self.p < 1 or self.n < 1:
            raise ValueError("p and n must be positive")
        if len(self.B) != self.p or len(self.O) != self.p:
            raise ValueError("need exactly p arcs B_i and O_i")
        if sorted(self.sigma) != list(range(1, self.p + 1)):
            raise ValueError("sigma must be a permutation of 1..p")
        for o in self.O:
            if len(o.reduced()) > self.o_length_bound:
                raise ValueError("closing arc O_i exceeds its declared length bound")


@dataclass(frozen=True)
class Certificate:
    """Outcome record of the long-block accounting."""

    C: int
    dfrak: int
    r_phi: int
    N: int
    bound: int
    verdict: bool
    oracle_agrees: bool
    p: int = 0
    n: int = 0
    gamma0_length: int = 0
    oracle_trivial: bool = field(default=False)


def build_gamma0(spec: LoopSpec, phi: Automorphism, group: SurfaceGroup) -> Word:
    """reduce( prod_{i=1..p} eta^n B_i O_i phi(B_{sigma(i)}^{-1}) )."""
    eta_n = group.eta ** spec.n
    out = Word()
    for i in range(spec.p):
        c_i = phi.apply(spec.B[spec.sigma[i] - 1].inverse())
        out = out * eta_n * spec.B[i] * spec.O[i] * c_i
    return out


def estimate_dfrak(spec: LoopSpec, phi: Automorphism, group: SurfaceGroup) -> int:
    """Smallest d such that every B_i and C_i has at most two blocks with
    |exponent| >= d (the two largest are exempt) and every O_i has none.

    Convention: d = 1 + (largest remaining |exponent| after dropping the
    two largest per B_i/C_i), minimum 1, matching the strict inequality
    -d < k < d of the accounting.
    """
    d = 1
    bc_words = list(spec.B) + [phi.apply(b.inverse()) for b in spec.B]
    for w in bc_words:
        exps = sorted((abs(b.exponent)
                       for b in eta_power_decompose(w.reduced(), group)),
                      reverse=True)
        if len(exps) > 2:
            d = max(d, exps[2] + 1)
    for w in spec.O:
        exps = [abs(b.exponent)
                for b in eta_power_decompose(w.reduced(), group)]
        if exps:
            d = max(d, max(exps) + 1)
    return d


def certify_noncontractible(spec: LoopSpec, phi: Automorphism,
                            group: SurfaceGroup, dfrak: int, r_phi: int,
                            N: int = 5) -> Certificate:
    """Emit the (C, d, r_phi, verdict) certificate for gamma_0.

    Preconditions are reported, never silently repaired:  N >= 5 and
    dfrak >= r_phi.  verdict is True iff C >= p(n - 6d) and that bound is
    positive; oracle_agrees records the cross-check against is_trivial.
    """
    if N < 5:
        raise ParameterError(f"threshold multiplier N={N} below 5")
    if dfrak < r_phi:
        raise ParameterError(f"dfrak={dfrak} below r_phi={r_phi}")
    if dfrak < 1:
        raise ParameterError("dfrak must be a positive integer")

    gamma0 = build_gamma0(spec, phi, group)
    C = count_long_exponent_sum(gamma0, dfrak, N, group)
    bound = spec.p * (spec.n - 6 * dfrak)
    verdict = bound > 0 and C >= bound
    trivial = is_trivial(gamma0)
    oracle_agrees = (not verdict) or (not trivial)
    return Certificate(C=C, dfrak=dfrak, r_phi=r_phi, N=N, bound=bound,
                       verdict=verdict, oracle_agrees=oracle_agrees,
                       p=spec.p, n=spec.n, gamma0_length=len(gamma0),
                       oracle_trivial=trivial)


def eta_blocks_via_crossings(w: Word, group: SurfaceGroup) -> list[int]:
    """Experimental Cayley-tree oracle for block exponents.

    Walks the reduced word through the Cayley tree and groups signed
    traversals of the first generator by the coset of the eta-cyclic
    stabilizer they occur in; each group's signed total recovers a block
    exponent up to the +-1 ambiguity of the boundary-line indexing.  Kept
    as a cross-check only; no certificate relies on it.
    """
    w = w.reduced()
    eta = group.eta
    period = len(eta)
    counts: dict[tuple[int, ...], int] = {}
    prefix: list[int] = []
    for pos, letter in enumerate(w.letters):
        if abs(letter) == 1:
            # coset key: the prefix with its maximal eta-power tail removed
            head = tuple(prefix)
            while len(head) >= period and (head[-period:] == eta.letters
                                           or head[-period:] == eta.inverse().letters):
                head = head[:-period]
            counts[head] = counts.get(head, 0) + (1 if letter > 0 else -1)
        prefix.append(letter)
    return sorted(counts.values(), reverse=True)
