"""Free-group words over the generators of a once-bounded surface group.

A word is a sequence of signed generator indices: letter ``+i`` is the i-th
generator, ``-i`` its inverse (i = 1..2g).  This is also the wire format
(arrays of signed ints), e.g. ``[1, 2, -1, -2]`` is the boundary class for
genus 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence (stack cancellation of x x^-1)."""
    out: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("letter 0 is not a generator")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """An element of the free group, stored as a (not necessarily reduced)
    letter sequence.  All algebraic operations return reduced words."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(x == 0 for x in self.letters):
            raise ValueError("letter 0 is not a generator")

    @property
    def is_reduced(self) -> bool:
        return all(self.letters[i] != -self.letters[i + 1]
                   for i in range(len(self.letters) - 1))

    def reduced(self) -> "Word":
        return self if self.is_reduced else Word(reduce_letters(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(reduce_letters(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self.reduced() if n > 0 else self.inverse().reduced()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        names = "abcdefghijklmnopqrstuvwxyz"

        def sym(x: int) -> str:
            s = names[abs(x) - 1] if abs(x) <= 26 else f"x{abs(x)}"
            return s if x > 0 else s.upper() if abs(x) <= 26 else f"X{abs(x)}"

        return "".join(sym(x) for x in self.letters)


def word(*letters: int) -> Word:
    return Word(tuple(letters))


def reduce(w: Word) -> Word:
    """Reduced representative of the same group element."""
    return w.reduced()


def is_trivial(w: Word) -> bool:
    """True iff w reduces to the empty word.  This is the reduction oracle
    every certificate is cross-checked against."""
    return not w.reduced().letters


def canonical_eta_letters(genus: int) -> tuple[int, ...]:
    out: list[int] = []
    for k in range(genus):
        a, b = 2 * k + 1, 2 * k + 2
        out.extend((a, b, -a, -b))
    return tuple(out)


@dataclass(frozen=True)
class SurfaceGroup:
    """pi_1 of the compact genus-g surface with one boundary component: free
    on 2g generators, with the boundary class eta = [a1,a2]...[a_{2g-1},a_{2g}]."""

    genus: int
    eta: Word = field(init=False)

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        eta = Word(canonical_eta_letters(self.genus))
        if not eta.is_reduced or len(eta) != 4 * self.genus:
            raise AssertionError("canonical boundary word must be reduced of length 4g")
        object.__setattr__(self, "eta", eta)

    @property
    def generator_count(self) -> int:
        return 2 * self.genus

    def contains(self, w: Word) -> bool:
        return w.max_index() <= self.generator_count


class InvalidAutomorphism(ValueError):
    """Raised when images/inverse_images fail the round-trip check."""


@dataclass(frozen=True)
class Automorphism:
    """A free-group automorphism given by generator images together with the
    images under the inverse.  The composition check is run at construction:
    nothing is taken on faith."""

    rank: int
    images: tuple[Word, ...]
    inverse_images: tuple[Word, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank or len(self.inverse_images) != self.rank:
            raise InvalidAutomorphism("need one image per generator")
        for i in range(1, self.rank + 1):
            back = self.apply(self.inverse_images[i - 1])
            if back.letters != (i,):
                raise InvalidAutomorphism(f"phi(phi^-1(x{i})) != x{i}")
            forth = self._apply(self.inverse_images, self.images[i - 1])
            if forth.letters != (i,):
                raise InvalidAutomorphism(f"phi^-1(phi(x{i})) != x{i}")

    def _apply(self, table: tuple[Word, ...], w: Word) -> Word:
        out: list[int] = []
        for letter in w.letters:
            img = table[abs(letter) - 1]
            segment = img.letters if letter > 0 else img.inverse().letters
            for x in segment:
                if out and out[-1] == -x:
                    out.pop()
                else:
                    out.append(x)
        return Word(tuple(out))

    def apply(self, w: Word) -> Word:
        """Homomorphic action; result is reduced."""
        if w.max_index() > self.rank:
            raise ValueError("word uses a generator outside this automorphism's rank")
        return self._apply(self.images, w)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.rank, self.inverse_images, self.images)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self.compose(other))(w) = self(other(w))."""
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        images = tuple(self.apply(img) for img in other.images)
        inverse_images = tuple(self._apply(other.inverse_images, w)
                               for w in self.inverse_images)
        return Automorphism(self.rank, images, inverse_images)

    def fixes(self, w: Word) -> bool:
        return self.apply(w).letters == w.reduced().letters


def identity_automorphism(rank: int) -> Automorphism:
    gens = tuple(Word((i,)) for i in range(1, rank + 1))
    return Automorphism(rank, gens, gens)


def _twist_pair(rank: int, target: int, inserted: int) -> Automorphism:
    """x_target -> x_target * x_inserted, all other generators fixed."""
    images = [Word((i,)) for i in range(1, rank + 1)]
    inv = [Word((i,)) for i in range(1, rank + 1)]
    images[target - 1] = Word((target, inserted))
    inv[target - 1] = Word((target, -inserted))
    return Automorphism(rank, tuple(images), tuple(inv))


def _conjugation(rank: int, by: Word, moved: Sequence[int]) -> Automorphism:
    images = [Word((i,)) for i in range(1, rank + 1)]
    inv = [Word((i,)) for i in range(1, rank + 1)]
    for i in moved:
        images[i - 1] = by * Word((i,)) * by.inverse()
        inv[i - 1] = by.inverse() * Word((i,)) * by
    return Automorphism(rank, tuple(images), tuple(inv))


@dataclass(frozen=True)
class Monodromy:
    """A named boundary-fixing mapping class: an automorphism fixing the
    boundary class eta exactly, plus the conservative exponent-drift bound
    r_phi used by certificates (heuristic except for the identity)."""

    name: str
    automorphism: Automorphism
    r_phi: int
    twist_count: int


def twist_registry(group: SurfaceGroup) -> dict[str, Monodromy]:
    """Registry of monodromies for the once-bounded genus-g surface.

    Entries: the identity, core handle twists t_ak / t_bk, handle-separating
    twists (conjugation by a commutator prefix of eta), the boundary twist,
    and curated compositions of at most three of these.  Every entry fixes
    eta on the nose, which is asserted here.
    """
    g = group.genus
    rank = 2 * g
    eta = group.eta

    singles: dict[str, tuple[Automorphism, int]] = {}
    for k in range(g):
        a, b = 2 * k + 1, 2 * k + 2
        # twist along the a_k core curve: b_k -> b_k a_k (word length 1)
        singles[f"ta{k + 1}"] = (_twist_pair(rank, b, a), 4 + 1)
        # twist along the b_k core curve: a_k -> a_k b_k
        singles[f"tb{k + 1}"] = (_twist_pair(rank, a, b), 4 + 1)
    for k in range(1, g):
        prefix = Word(canonical_eta_letters(k))
        moved = list(range(1, 2 * k + 1))
        singles[f"tsep{k}"] = (_conjugation(rank, prefix, moved), 4 + len(prefix))
    singles["tbdy"] = (_conjugation(rank, eta, list(range(1, rank + 1))), 4 + len(eta))

    registry: dict[str, Monodromy] = {
        "id": Monodromy("id", identity_automorphism(rank), 0, 0)
    }
    for name, (auto, r) in singles.items():
        registry[name] = Monodromy(name, auto, r, 1)

    def compose_named(names: tuple[str, ...]) -> Monodromy:
        auto = identity_automorphism(rank)
        r = 4
        for n in names:
            base, _ = singles[n]
            auto = auto.compose(base)
            r += singles[n][1] - 4
        return Monodromy("*".join(names), auto, r, len(names))

    pair_names = [("ta1", "tb1"), ("tb1", "ta1")]
    triple_names = [("ta1", "tb1", "ta1")]
    if g >= 2:
        pair_names += [("ta1", "ta2"), ("tb1", "tsep1")]
        triple_names += [("ta1", "tb2", "tsep1"), ("ta2", "tb1", "ta1")]
    if g >= 3:
        pair_names += [("ta3", "tb1")]
        triple_names += [("ta1", "ta2", "ta3")]
    for names in pair_names + triple_names:
        m = compose_named(names)
        registry[m.name] = m

    for m in registry.values():
        if not m.automorphism.fixes(eta):
            raise AssertionError(f"registry monodromy {m.name} does not fix eta")
    return registry
