"""Properly embedded oriented arcs with endpoints on the boundary circle.

An arc is (start position, reduced crossing word, end position); the class
rel endpoints is exactly this data, so equality of records is equality of
isotopy classes.  Mapping classes fixing the boundary pointwise act through
their free-group automorphism via boundary-prefix conjugation: with P, Q
the boundary paths from the origin to the endpoints, the based loop of the
arc is P w Q^{-1} and the image arc's word is P^{-1} phi(P w Q^{-1}) Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..freegroup.words import Automorphism, Word
from .intersections import (ArcPath, crossing_details, pair_crossing_count,
                            self_crossing_count)
from .ribbon import FatGraphSurface


class ArcError(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    surface: FatGraphSurface
    start: Fraction
    end: Fraction
    word: Word = Word()

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", Fraction(self.start) % 1)
        object.__setattr__(self, "end", Fraction(self.end) % 1)
        object.__setattr__(self, "word", self.word.reduced())
        if self.start == self.end:
            raise ArcError("arc endpoints must be distinct boundary positions")
        if self.word.max_index() > self.surface.rank:
            raise ArcError("crossing word uses a band the surface lacks")
        # both must sit strictly inside windows
        self.surface.position_to_window(self.start)
        self.surface.position_to_window(self.end)

    def path(self) -> ArcPath:
        return ArcPath(self.surface, self.word.letters, self.start, self.end)

    def reverse(self) -> "Arc":
        return Arc(self.surface, self.end, self.start, self.word.inverse())

    def endpoints(self) -> tuple[Fraction, Fraction]:
        return self.start, self.end

    def self_intersections(self) -> int:
        return self_crossing_count(self.path())

    @property
    def embedded(self) -> bool:
        return self.self_intersections() == 0

    def loop_class(self) -> Word:
        """Based loop: boundary to start, the arc, boundary back."""
        p = self.surface.boundary_prefix(self.start)
        q = self.surface.boundary_prefix(self.end)
        return p * self.word * q.inverse()


def geometric_intersection(a: Arc, b: Arc) -> int:
    """Minimal crossing number over isotopy rel boundary (endpoints pinned)."""
    if a.surface is not b.surface and a.surface != b.surface:
        raise ArcError("arcs live on different surfaces")
    if {a.start, a.end} & {b.start, b.end}:
        raise ArcError("arcs share an endpoint")
    return pair_crossing_count(a.path(), b.path())


def intersection_points(a: Arc, b: Arc) -> list[tuple[int, int, tuple[int, ...]]]:
    """Crossings as (index along a's word, index along b's word, translate)."""
    if {a.start, a.end} & {b.start, b.end}:
        raise ArcError("arcs share an endpoint")
    return crossing_details(a.path(), b.path())


def disjoint(a: Arc, b: Arc) -> bool:
    return not ({a.start, a.end} & {b.start, b.end}) and geometric_intersection(a, b) == 0


def apply_monodromy(phi: Automorphism, arc: Arc) -> Arc:
    """Image of the arc class under a boundary-fixing mapping class."""
    surf = arc.surface
    if phi.rank != surf.rank:
        raise ArcError("automorphism rank does not match the surface")
    if not phi.fixes(surf.boundary_word):
        raise ArcError("monodromies must fix the boundary word exactly")
    p = surf.boundary_prefix(arc.start)
    q = surf.boundary_prefix(arc.end)
    new_word = p.inverse() * phi.apply(p * arc.word * q.inverse()) * q
    return Arc(surf, arc.start, arc.end, new_word)


def parallel(a: Arc, b: Arc) -> bool:
    """Unoriented parallelism: isotopic after sliding endpoints along the
    boundary (the arcs cobound a rectangle with two boundary segments)."""
    surf = a.surface
    for cand in (b, b.reverse()):
        for d1 in (1, -1):
            for d2 in (1, -1):
                bridge_in = surf.boundary_path_element(cand.start, a.start, d1)
                bridge_out = surf.boundary_path_element(a.end, cand.end, d2)
                if (bridge_in * a.word * bridge_out).letters == cand.word.letters:
                    return True
    return False


def boundary_parallel(a: Arc) -> bool:
    """True iff the arc is isotopic (sliding endpoints) to a boundary segment."""
    surf = a.surface
    for d in (1, -1):
        if (surf.boundary_path_element(a.start, a.end, d)).letters == a.word.letters:
            return True
    return False
