"""Minimal intersection counts via linking of lifts in the universal cover.

The universal cover of the disk-with-bands surface is a planar tree of
disks; its boundary points are totally ordered by the contour traversal
rooted at the base disk.  Two lifted arcs cross (exactly once) iff their
endpoint pairs interleave in that order, so minimal intersection numbers
reduce to counting linked translates whose tree paths meet.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..freegroup.words import reduce_letters
from .ribbon import FatGraphSurface

Vertex = tuple[int, ...]          # reduced word labelling a disk lift
BoundaryPoint = tuple[Vertex, int, Fraction]   # (disk, window slot, offset)


def contour_address(surface: FatGraphSurface, point: BoundaryPoint) -> tuple:
    """Lexicographic key realising the contour order of boundary points.

    Walking the tree path from the root, each step through a region
    contributes (relative slot, 1); the terminal window contributes
    (relative slot, 0, offset).  Relative slots are counted ccw from the
    entry region (windows sit before their region, so type 0 < type 1).
    """
    vertex, window_slot, offset = point
    n = surface.n_slots
    keys: list[tuple] = []
    entry: int | None = None    # entry region slot at the current disk
    for letter in vertex:
        out_slot = surface.slot_of_letter(letter)
        if entry is None:
            keys.append((out_slot + 1, 1))
        else:
            rel = (out_slot - entry) % n
            keys.append((rel, 1))
        entry = surface.slot_of_letter(-letter)
    if entry is None:
        keys.append((window_slot + 1, 0, offset))
    else:
        rel_w = (window_slot - entry - 1) % n + 1
        keys.append((rel_w, 0, offset))
    return tuple(keys)


def _linked(addresses: Sequence[tuple]) -> bool:
    """addresses = (a1, a2, b1, b2), all distinct: do {a} and {b} interleave?"""
    a1, a2, b1, b2 = addresses
    lo, hi = min(a1, a2), max(a1, a2)
    inside = (lo < b1 < hi) + (lo < b2 < hi)
    return inside == 1


class ArcPath:
    """A lift skeleton: reduced crossing letters plus endpoint data."""

    __slots__ = ("surface", "letters", "start", "end")

    def __init__(self, surface: FatGraphSurface, letters: tuple[int, ...],
                 start_pos: Fraction, end_pos: Fraction):
        self.surface = surface
        self.letters = letters
        self.start = surface.position_to_window(start_pos)
        self.end = surface.position_to_window(end_pos)

    def prefixes(self) -> list[Vertex]:
        out: list[Vertex] = [()]
        for letter in self.letters:
            out.append(out[-1] + (letter,))
        return out

    def endpoints(self, base: Vertex) -> tuple[BoundaryPoint, BoundaryPoint]:
        tail = reduce_letters(base + self.letters)
        return ((base, self.start[0], self.start[1]),
                (tail, self.end[0], self.end[1]))


def _translates(a: ArcPath, b: ArcPath) -> set[Vertex]:
    """Deck elements g for which path(g.b) can meet path(a): g = u v^-1
    over tree vertices u of a and v of b."""
    out: set[Vertex] = set()
    b_inverses = [tuple(-x for x in reversed(v)) for v in b.prefixes()]
    for u in a.prefixes():
        for v_inv in b_inverses:
            out.add(reduce_letters(u + v_inv))
    return out


def crossing_translates(a: ArcPath, b: ArcPath) -> list[Vertex]:
    """All deck elements g with lift(a) linked against g.lift(b)."""
    surface = a.surface
    a1, a2 = a.endpoints(())
    addr_a = (contour_address(surface, a1), contour_address(surface, a2))
    found = []
    for g in _translates(a, b):
        b1, b2 = b.endpoints(g)
        addrs = addr_a + (contour_address(surface, b1),
                          contour_address(surface, b2))
        if len(set(addrs)) != 4:
            raise ValueError("lifted endpoints coincide; arcs share an endpoint")
        if _linked(addrs):
            found.append(g)
    return found


def pair_crossing_count(a: ArcPath, b: ArcPath) -> int:
    return len(crossing_translates(a, b))


def self_crossing_count(a: ArcPath) -> int:
    """Minimal self-intersections: linked nontrivial translates, halved
    (each base crossing is seen at g and at g^-1)."""
    surface = a.surface
    a1, a2 = a.endpoints(())
    addr_a = (contour_address(surface, a1), contour_address(surface, a2))
    linked = 0
    for g in _translates(a, a):
        if not g:
            continue
        b1, b2 = a.endpoints(g)
        addrs = addr_a + (contour_address(surface, b1),
                          contour_address(surface, b2))
        if len(set(addrs)) != 4:
            raise ValueError("translate shares an endpoint; degenerate arc")
        if _linked(addrs):
            linked += 1
    if linked % 2:
        raise AssertionError("translate linking must pair up g with g^-1")
    return linked // 2


def crossing_details(a: ArcPath, b: ArcPath) -> list[tuple[int, int, Vertex]]:
    """Crossings as (j_a, j_b, g): the switch disk prefix_a[j_a] equals
    g * prefix_b[j_b]; the smallest such index pair is reported."""
    out = []
    pa = a.prefixes()
    for g in crossing_translates(a, b):
        hit = None
        pb = [reduce_letters(g + v) for v in b.prefixes()]
        for ja, u in enumerate(pa):
            for jb, v in enumerate(pb):
                if u == v:
                    hit = (ja, jb, g)
                    break
            if hit:
                break
        if hit is None:
            raise AssertionError("linked lifts must share a tree vertex")
        out.append(hit)
    return out
