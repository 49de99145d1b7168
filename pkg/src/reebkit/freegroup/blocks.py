"""Maximal boundary-power blocks inside reduced words.

A block is a maximal literal run of eta^{+-1} copies inside the reduced
letter sequence.  Blocks drive the long-block exponent accounting behind
the non-contractibility certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import SurfaceGroup, Word


@dataclass(frozen=True)
class EtaBlock:
    """A maximal eta^exponent subword occupying letters [start, end)."""

    exponent: int
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.exponent == 0:
            # exponent-0 groupings only arise on unreduced input, which the
            # pipeline never feeds here (all words are reduced first)
            raise ValueError("blocks of reduced words have nonzero exponent")


def eta_power_decompose(w: Word, group: SurfaceGroup) -> list[EtaBlock]:
    """Greedy left-to-right scan for maximal literal runs of eta^{+-1}.

    Ties between overlapping candidate runs are broken leftmost-longest:
    the scan consumes the longest run starting at the earliest position.
    """
    if not w.is_reduced:
        raise ValueError("eta_power_decompose expects a reduced word")
    letters = w.letters
    eta = group.eta.letters
    eta_inv = group.eta.inverse().letters
    period = len(eta)
    n = len(letters)
    blocks: list[EtaBlock] = []
    i = 0
    while i + period <= n:
        chunk = letters[i:i + period]
        if chunk == eta:
            pattern, sign = eta, 1
        elif chunk == eta_inv:
            pattern, sign = eta_inv, -1
        else:
            i += 1
            continue
        k = 1
        while letters[i + k * period:i + (k + 1) * period] == pattern:
            k += 1
        blocks.append(EtaBlock(sign * k, i, i + k * period))
        i += k * period
    return blocks


def reassemble(w: Word, blocks: list[EtaBlock], group: SurfaceGroup) -> tuple[int, ...]:
    """Re-expand blocks and inter-block text; must reproduce w exactly."""
    out: list[int] = []
    cursor = 0
    for b in blocks:
        out.extend(w.letters[cursor:b.start])
        out.extend((group.eta ** b.exponent).letters)
        cursor = b.end
    out.extend(w.letters[cursor:])
    return tuple(out)


def count_long_exponent_sum(w: Word, dfrak: int, threshold_multiplier: int,
                            group: SurfaceGroup) -> int:
    """Sum of exponents over blocks with exponent >= N*dfrak.

    Only positive long blocks are summed (the accounting tracks powers of
    eta itself, not its inverse).
    """
    if dfrak < 1 or threshold_multiplier < 1:
        raise ValueError("dfrak and the threshold multiplier must be positive")
    cutoff = threshold_multiplier * dfrak
    return sum(b.exponent for b in eta_power_decompose(w, group)
               if b.exponent >= cutoff)
