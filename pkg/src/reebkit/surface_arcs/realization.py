"""Explicit normal-position realizations of arc families.

Every arc crossing of a band is a strand; strands through one band are
sorted by the contour address of the arc's continuation on the far side of
the band (the geodesic-like normal position), then pinned to explicit
rational offsets, ccw-increasing at the band's positive end, mirrored at
the negative end.  Each arc then becomes a sequence of chords of the base
disk with exact circle coordinates:

  * chord crossings are endpoint interleavings (the lift-and-count oracle);
  * for pairwise-disjoint families the chords are non-crossing, and the
    faces of the chord diagram glued through band gaps give the components
    of the complement (union-find), plus which component sits on each side
    of each arc and which contains any boundary point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..freegroup.words import reduce_letters
from .arcs import Arc
from .intersections import contour_address
from .ribbon import FatGraphSurface

# circle key: (2*slot, offset) for window points, (2*slot+1, offset) for
# region points, ordered ccw around the base disk
CircleKey = tuple[int, Fraction]


def _window_key(surface: FatGraphSurface, pos: Fraction) -> CircleKey:
    slot, local = surface.position_to_window(pos)
    return (2 * slot, local)


@dataclass
class Realization:
    surface: FatGraphSurface
    arcs: list[Arc]
    chords: list[list[tuple[CircleKey, CircleKey]]]   # per arc, in order
    strand_offsets: dict[tuple[int, int], Fraction]   # (arc idx, letter idx) -> ccw offset at its positive-end region
    band_strands: dict[int, list[tuple[int, int]]]    # band -> strands sorted across width

    def chord_crossings(self, i: int, j: int) -> int:
        """Interleaved chord pairs between arcs i and j (their crossings)."""
        count = 0
        for c1 in self.chords[i]:
            lo, hi = min(c1), max(c1)
            for c2 in self.chords[j]:
                inside = (lo < c2[0] < hi) + (lo < c2[1] < hi)
                if inside == 1:
                    count += 1
        return count

    def self_chord_crossings(self, i: int) -> int:
        cs = self.chords[i]
        count = 0
        for a in range(len(cs)):
            lo, hi = min(cs[a]), max(cs[a])
            for b in range(a + 1, len(cs)):
                inside = (lo < cs[b][0] < hi) + (lo < cs[b][1] < hi)
                if inside == 1:
                    count += 1
        return count


def realize(surface: FatGraphSurface, arcs: list[Arc]) -> Realization:
    for a in arcs:
        if a.surface != surface:
            raise ValueError("arc on a different surface")
    # 1. sort strands per band by far-side continuation address
    band_strands: dict[int, list[tuple[int, int]]] = {}
    keyed: dict[int, list[tuple[tuple, tuple[int, int]]]] = {}
    for idx, arc in enumerate(arcs):
        letters = arc.word.letters
        for j, letter in enumerate(letters):
            band = abs(letter)
            prefix = letters[:j]
            inv_prefix = tuple(-x for x in reversed(prefix))
            if letter > 0:
                base = inv_prefix
                far_vertex = reduce_letters(base + letters)
                slot, local = surface.position_to_window(arc.end)
                far_point = (far_vertex, slot, local)
            else:
                base = reduce_letters((band,) + inv_prefix)
                slot, local = surface.position_to_window(arc.start)
                far_point = (base, slot, local)
            addr = contour_address(surface, far_point)
            keyed.setdefault(band, []).append((addr, (idx, j)))
    strand_offsets: dict[tuple[int, int], Fraction] = {}
    for band, entries in keyed.items():
        entries.sort(key=lambda e: e[0])
        if len({e[0] for e in entries}) != len(entries):
            raise AssertionError("far-side addresses of band strands must be distinct")
        m = len(entries)
        band_strands[band] = [s for _, s in entries]
        for k, (_, strand) in enumerate(entries):
            strand_offsets[strand] = Fraction(k + 1, m + 1)

    # 2. chords with exact circle keys
    all_chords: list[list[tuple[CircleKey, CircleKey]]] = []
    for idx, arc in enumerate(arcs):
        pts: list[CircleKey] = [_window_key(surface, arc.start)]
        for j, letter in enumerate(arc.word.letters):
            off = strand_offsets[(idx, j)]
            out_slot = surface.slot_of_letter(letter)
            in_slot = surface.slot_of_letter(-letter)
            pos_slot = surface.slot_of_letter(abs(letter))
            # ccw offset at the positive end is `off`; mirrored at the other
            out_off = off if out_slot == pos_slot else 1 - off
            in_off = off if in_slot == pos_slot else 1 - off
            pts.append((2 * out_slot + 1, out_off))
            pts.append((2 * in_slot + 1, in_off))
        pts.append(_window_key(surface, arc.end))
        all_chords.append([(pts[k], pts[k + 1]) for k in range(0, len(pts), 2)])
    return Realization(surface, list(arcs), all_chords, strand_offsets, band_strands)


@dataclass
class ComplementComponents:
    """Faces of the chord diagram glued through band gaps (union-find)."""

    realization: Realization
    face_of_interval: list[int]        # face id per circle interval
    interval_starts: list[CircleKey]   # interval k runs from starts[k] to starts[k+1]
    parent: list[int]

    def _find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def component_at(self, key: CircleKey) -> int:
        """Component of the boundary just ccw of this circle key."""
        starts = self.interval_starts
        n = len(starts)
        lo, hi = 0, n - 1
        if key < starts[0] or key >= starts[-1]:
            k = n - 1
        else:
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if starts[mid] <= key:
                    lo = mid
                else:
                    hi = mid
            k = lo
        return self._find(self.face_of_interval[k])

    def component_count(self) -> int:
        return len({self._find(f) for f in self.face_of_interval})

    def sides_of_arc(self, arc_index: int) -> tuple[int, int]:
        """(left, right) component of the oriented arc: the faces just ccw
        of the first chord's head and tail."""
        p, q = self.realization.chords[arc_index][0]
        return self.component_at(q), self.component_at(p)


def complement_components(surface: FatGraphSurface, arcs: list[Arc]) -> ComplementComponents:
    real = realize(surface, arcs)
    chords = [c for per_arc in real.chords for c in per_arc]
    for i in range(len(chords)):
        lo, hi = min(chords[i]), max(chords[i])
        for j in range(i + 1, len(chords)):
            inside = (lo < chords[j][0] < hi) + (lo < chords[j][1] < hi)
            if inside == 1:
                raise ValueError("complement requested for a crossing family")

    # circle intervals between consecutive chord endpoints
    endpoints = sorted({p for c in chords for p in c})
    if not endpoints:
        comps = ComplementComponents(real, [0], [(0, Fraction(0))], [0])
        _glue_bands(surface, real, comps)
        return comps
    other = {}
    for c in chords:
        other[c[0]] = c[1]
        other[c[1]] = c[0]
    index = {p: k for k, p in enumerate(endpoints)}
    n = len(endpoints)

    # interval k starts at endpoints[k]; face walk: interval ending at e
    # continues past the chord to the interval starting at other[e]
    face_of_interval = [-1] * n
    face = 0
    for k0 in range(n):
        if face_of_interval[k0] != -1:
            continue
        k = k0
        while face_of_interval[k] == -1:
            face_of_interval[k] = face
            e = endpoints[(k + 1) % n]     # interval k ends at this endpoint
            k = index[other[e]]
        face += 1

    parent = list(range(face))
    comps = ComplementComponents(real, face_of_interval, endpoints, parent)
    _glue_bands(surface, real, comps)
    return comps


def _glue_bands(surface: FatGraphSurface, real: Realization,
                comps: ComplementComponents) -> None:
    def union(a: int, b: int) -> None:
        ra, rb = comps._find(a), comps._find(b)
        if ra != rb:
            comps.parent[ra] = rb

    for band in range(1, surface.rank + 1):
        strands = real.band_strands.get(band, [])
        m = len(strands)
        pos_slot = surface.slot_of_letter(band)
        neg_slot = surface.slot_of_letter(-band)
        for gap in range(m + 1):
            w = Fraction(2 * gap + 1, 2 * (m + 1))
            union(comps.component_at((2 * pos_slot + 1, w)),
                  comps.component_at((2 * neg_slot + 1, 1 - w)))


def non_separating(arc: Arc) -> bool:
    return complement_components(arc.surface, [arc]).component_count() == 1


# -- brute-force lift-and-count oracle ------------------------------------
#
# Independent of the address comparator: boundary points of the universal
# cover get explicit rational angles by recursive subdivision of the circle
# (each disk's contour items share its slice equally), lifts become straight
# chords between their endpoint angles, and crossings are counted by
# interval interleaving over all translates whose tree paths meet.

def _boundary_angle(surface: FatGraphSurface, vertex: tuple[int, ...],
                    window_slot: int, offset: Fraction) -> Fraction:
    n = surface.n_slots
    lo, width = Fraction(0), Fraction(1)
    entry: int | None = None
    for letter in vertex:
        out_slot = surface.slot_of_letter(letter)
        if entry is None:
            items = 2 * n          # W0 R0 W1 R1 ...
            idx = 2 * out_slot + 1
        else:
            items = 2 * n - 1      # W_{e+1} R_{e+1} ... R_{e-1} W_e
            idx = 2 * ((out_slot - entry) % n) - 1
        lo += width * Fraction(idx, items)
        width /= items
        entry = surface.slot_of_letter(-letter)
    if entry is None:
        idx = Fraction(2 * window_slot)
    else:
        idx = Fraction(2 * (((window_slot - entry - 1) % n) + 1) - 2)
    items = 2 * n if entry is None else 2 * n - 1
    return lo + width * (idx + offset) / items


def _lift_angles(surface: FatGraphSurface, arc: Arc,
                 base: tuple[int, ...]) -> tuple[Fraction, Fraction]:
    s_slot, s_loc = surface.position_to_window(arc.start)
    e_slot, e_loc = surface.position_to_window(arc.end)
    tail = reduce_letters(base + arc.word.letters)
    return (_boundary_angle(surface, base, s_slot, s_loc),
            _boundary_angle(surface, tail, e_slot, e_loc))


def _oracle_translates(a: Arc, b: Arc) -> set[tuple[int, ...]]:
    pa: list[tuple[int, ...]] = [()]
    for x in a.word.letters:
        pa.append(pa[-1] + (x,))
    pb_inv: list[tuple[int, ...]] = [()]
    acc: tuple[int, ...] = ()
    for x in b.word.letters:
        acc = acc + (x,)
        pb_inv.append(tuple(-y for y in reversed(acc)))
    return {reduce_letters(u + v) for u in pa for v in pb_inv}


def _chords_cross(c1: tuple[Fraction, Fraction], c2: tuple[Fraction, Fraction]) -> bool:
    lo, hi = min(c1), max(c1)
    return ((lo < c2[0] < hi) + (lo < c2[1] < hi)) == 1


def oracle_intersection(a: Arc, b: Arc) -> int:
    """Brute-force lift oracle in the polygon model: count straight-chord
    crossings between the fixed lift of a and every meeting translate of b."""
    surface = a.surface
    chord_a = _lift_angles(surface, a, ())
    count = 0
    for g in _oracle_translates(a, b):
        chord_b = _lift_angles(surface, b, g)
        if len({chord_a[0], chord_a[1], chord_b[0], chord_b[1]}) != 4:
            raise ValueError("oracle: lifted endpoints coincide")
        if _chords_cross(chord_a, chord_b):
            count += 1
    return count


def oracle_self_intersection(a: Arc) -> int:
    surface = a.surface
    chord_a = _lift_angles(surface, a, ())
    linked = 0
    for g in _oracle_translates(a, a):
        if not g:
            continue
        chord_b = _lift_angles(surface, a, g)
        if _chords_cross(chord_a, chord_b):
            linked += 1
    assert linked % 2 == 0
    return linked // 2
