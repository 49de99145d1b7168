"""The once-bounded surface as a disk with bands (one-vertex fat graph).

The disk carries 4g attaching regions in counterclockwise (rotation) order,
separated by 4g boundary windows.  Region slots for handle k are

    4k: x_{2k+1}+    4k+1: x_{2k+2}-    4k+2: x_{2k+1}-    4k+3: x_{2k+2}+

a rotation word chosen so that the boundary is a single cycle whose crossing
word is exactly the canonical commutator product eta.  Conventions (used
throughout the arc machinery):

              W1
         R0 ------ R1            * regions R_j occupy arcs of the disk
       /              \\            boundary, windows W_j sit before R_j
     W0                W2          in ccw order;
       \\              /          * crossing OUT through region x_i^s
         R3 ------ R2              multiplies the cover position by i^s;
              W3                 * the surface boundary is parametrised by
                                   its traversal order: the k-th visited
                                   window covers [k/4g, (k+1)/4g).

Positions on the boundary circle are exact rationals; arc endpoints must sit
strictly inside windows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..freegroup.words import SurfaceGroup, Word, canonical_eta_letters


def _once_bounded_rotation(genus: int) -> tuple[int, ...]:
    slots: list[int] = []
    for k in range(genus):
        a, b = 2 * k + 1, 2 * k + 2
        slots.extend((a, -b, -a, b))
    return tuple(slots)


@dataclass(frozen=True)
class FatGraphSurface:
    """One-vertex fat graph thickening: genus g, one boundary circle.

    ``rotation`` lists, per region slot in ccw order, the signed generator a
    path applies when crossing out through that slot.  Boundary cycles,
    genus and the boundary crossing word are derived, and the one-boundary
    and Euler-characteristic invariants are asserted.
    """

    rotation: tuple[int, ...]
    genus: int = field(init=False)
    window_visit_order: tuple[int, ...] = field(init=False)
    boundary_word: Word = field(init=False)

    def __post_init__(self) -> None:
        rot = tuple(self.rotation)
        object.__setattr__(self, "rotation", rot)
        letters = sorted(abs(x) for x in rot)
        edge_count = len(rot) // 2
        if len(rot) % 2 or letters != sorted(list(range(1, edge_count + 1)) * 2):
            raise ValueError("rotation must list each band's two signed ends")
        if any(rot.count(i) != 1 or rot.count(-i) != 1 for i in range(1, edge_count + 1)):
            raise ValueError("each band needs one positive and one negative end")
        cycles = self._boundary_cycles()
        if len(cycles) != 1:
            raise ValueError(f"surface has {len(cycles)} boundary cycles, need exactly 1")
        # chi = V - E = 1 - 2g for the one-boundary case
        if edge_count % 2:
            raise ValueError("odd band count cannot give one boundary component")
        object.__setattr__(self, "genus", edge_count // 2)
        visits, word = cycles[0]
        object.__setattr__(self, "window_visit_order", tuple(visits))
        object.__setattr__(self, "boundary_word", Word(tuple(word)))

    @classmethod
    def once_bounded(cls, genus: int) -> "FatGraphSurface":
        surf = cls(_once_bounded_rotation(genus))
        if surf.boundary_word.letters != canonical_eta_letters(genus):
            raise AssertionError("canonical rotation must trace eta exactly")
        return surf

    # -- derived structure ------------------------------------------------

    @property
    def n_slots(self) -> int:
        return len(self.rotation)

    @property
    def rank(self) -> int:
        return self.n_slots // 2

    def group(self) -> SurfaceGroup:
        return SurfaceGroup(self.genus)

    def slot_of_letter(self, letter: int) -> int:
        return self.rotation.index(letter)

    def partner_slot(self, slot: int) -> int:
        return self.rotation.index(-self.rotation[slot])

    def _boundary_cycles(self) -> list[tuple[list[int], list[int]]]:
        """Traverse window -> band side -> window; one (windows, letters)
        record per boundary cycle.  Window j precedes region slot j ccw;
        leaving window j the traversal crosses the band at slot j and
        resurfaces at window (partner+1) mod 4g."""
        n = len(self.rotation)
        seen: set[int] = set()
        cycles = []
        for start in range(n):
            if start in seen:
                continue
            windows: list[int] = []
            letters: list[int] = []
            w = start
            while w not in seen:
                seen.add(w)
                windows.append(w)
                letters.append(self.rotation[w])
                w = (self.rotation.index(-self.rotation[w]) + 1) % n
            cycles.append((windows, letters))
        return cycles

    # -- boundary parametrisation -----------------------------------------

    def window_rank(self, window_slot: int) -> int:
        return self.window_visit_order.index(window_slot)

    def window_interval(self, window_slot: int) -> tuple[Fraction, Fraction]:
        k = self.window_rank(window_slot)
        n = self.n_slots
        return Fraction(k, n), Fraction(k + 1, n)

    def position_to_window(self, pos: Fraction) -> tuple[int, Fraction]:
        """Global boundary position -> (window slot, local offset in (0,1))."""
        pos = Fraction(pos) % 1
        n = self.n_slots
        k = int(pos * n)
        local = pos * n - k
        if local == 0:
            raise ValueError(f"position {pos} sits on a window boundary")
        return self.window_visit_order[k], local

    def window_position(self, window_slot: int, local: Fraction) -> Fraction:
        if not 0 < local < 1:
            raise ValueError("local offset must be in (0,1)")
        lo, hi = self.window_interval(window_slot)
        return lo + (hi - lo) * local

    def boundary_prefix(self, pos: Fraction) -> Word:
        """Crossing word of the boundary path from the origin to pos
        (positive direction): a prefix of the boundary word."""
        k = int((Fraction(pos) % 1) * self.n_slots)
        return Word(self.boundary_word.letters[:k])

    def boundary_path_element(self, src: Fraction, dst: Fraction,
                              direction: int = 1) -> Word:
        """Class of the boundary path src -> dst in the given direction."""
        src, dst = Fraction(src) % 1, Fraction(dst) % 1
        if direction == 1:
            p, q = self.boundary_prefix(src), self.boundary_prefix(dst)
            if dst > src:
                return p.inverse() * q
            return p.inverse() * self.boundary_word * q
        return self.boundary_path_element(dst, src, 1).inverse()
