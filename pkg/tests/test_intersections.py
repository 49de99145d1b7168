"""Geometric intersection numbers: primary linking count vs the explicit
lift-and-count oracle, plus invariance properties."""

import random
from fractions import Fraction

import pytest

from reebkit.freegroup import SurfaceGroup, Word, twist_registry
from reebkit.surface_arcs.arcs import (Arc, ArcError, apply_monodromy,
                                       boundary_parallel, disjoint,
                                       geometric_intersection, parallel)
from reebkit.surface_arcs.realization import (complement_components,
                                              non_separating,
                                              oracle_intersection,
                                              oracle_self_intersection)
from reebkit.surface_arcs.ribbon import FatGraphSurface

F = Fraction


@pytest.fixture(scope="module")
def torus():
    return FatGraphSurface.once_bounded(1)


@pytest.fixture(scope="module")
def genus2():
    return FatGraphSurface.once_bounded(2)


def test_canonical_surfaces():
    for g in (1, 2, 3):
        s = FatGraphSurface.once_bounded(g)
        assert s.genus == g
        assert s.boundary_word.letters == SurfaceGroup(g).eta.letters
        assert len(s.window_visit_order) == 4 * g


def test_two_boundary_rotation_rejected():
    # a b a^-1 b^-1 ordering of ends a+, a-, b+, b- gives several boundaries
    with pytest.raises(ValueError):
        FatGraphSurface((1, -1, 2, -2))


def test_chords_in_one_window(torus):
    a = Arc(torus, F(1, 100), F(5, 100))
    b = Arc(torus, F(3, 100), F(8, 100))
    c = Arc(torus, F(6, 100), F(9, 100))
    assert geometric_intersection(a, b) == 1
    assert geometric_intersection(a, c) == 0
    assert oracle_intersection(a, b) == 1
    assert oracle_intersection(a, c) == 0


def test_parallel_copy_disjoint(torus):
    # push-off displaces the endpoints to opposite sides of the arc
    a = Arc(torus, F(1, 8), F(7, 8), Word((1,)))
    b = Arc(torus, F(1, 8) - F(1, 1000), F(7, 8) + F(1, 1000), Word((1,)))
    assert a.embedded and b.embedded
    assert geometric_intersection(a, b) == 0
    assert oracle_intersection(a, b) == 0
    assert parallel(a, b)


def test_same_side_shift_crosses(torus):
    # shifting both endpoints the same way forces one crossing
    a = Arc(torus, F(1, 8), F(7, 8), Word((1,)))
    b = Arc(torus, F(1, 8) + F(1, 1000), F(7, 8) + F(1, 1000), Word((1,)))
    assert geometric_intersection(a, b) == 1
    assert oracle_intersection(a, b) == 1


def test_boundary_parallel_arc_separates(torus):
    # word (1) from window 0 to window 3 retraces the boundary prefix
    a = Arc(torus, F(1, 8), F(3, 8), Word((1,)))
    assert boundary_parallel(a)
    assert not non_separating(a)
    comps = complement_components(torus, [a])
    assert comps.component_count() == 2


def test_meridian_is_nonseparating(torus):
    m = Arc(torus, F(1, 8), F(7, 8), Word((1,)))
    assert not boundary_parallel(m)
    assert non_separating(m)


def test_meridian_vs_twist(torus):
    """Once-punctured torus: meridian arc against its Dehn-twist image,
    endpoints pushed off; efficient position has exactly one crossing."""
    reg = twist_registry(SurfaceGroup(1))
    m = Arc(torus, F(1, 8), F(7, 8), Word((1,)))
    t = apply_monodromy(reg["tb1"].automorphism, m)
    assert t.word.letters == (1, 2)
    counts = []
    for ds in (F(1, 1000), -F(1, 1000)):
        for de in (F(1, 1000), -F(1, 1000)):
            shifted = Arc(torus, t.start + ds, t.end + de, t.word)
            got = geometric_intersection(m, shifted)
            assert got == oracle_intersection(m, shifted)
            counts.append(got)
    # endpoint resolutions absorb or add boundary crossings; the transverse
    # mixed resolutions realize the single essential crossing
    assert counts == [0, 1, 1, 2]


def test_shared_endpoint_rejected(torus):
    a = Arc(torus, F(1, 8), F(7, 8), Word((1,)))
    b = Arc(torus, F(1, 8), F(3, 8))
    with pytest.raises(ArcError):
        geometric_intersection(a, b)


def random_arc(rng, surface):
    rank = surface.rank
    n = 4 * surface.genus
    while True:
        pos = []
        while len(pos) < 2:
            p = F(rng.randrange(1, 16 * n), 16 * n)
            if (p * n) % 1 != 0 and p not in pos:
                pos.append(p)
        w = Word(tuple(rng.choice([i for i in range(-rank, rank + 1) if i])
                       for _ in range(rng.randrange(0, 5)))).reduced()
        try:
            return Arc(surface, pos[0], pos[1], w)
        except ArcError:
            continue


def test_primary_matches_oracle_fuzz(torus, genus2):
    rng = random.Random(777)
    for surface in (torus, genus2):
        for _ in range(60):
            a, b = random_arc(rng, surface), random_arc(rng, surface)
            if {a.start, a.end} & {b.start, b.end}:
                continue
            assert geometric_intersection(a, b) == oracle_intersection(a, b)
            assert geometric_intersection(a, b) == geometric_intersection(b, a)
            assert a.self_intersections() == oracle_self_intersection(a)


def test_twist_invariance_of_intersections(genus2):
    rng = random.Random(31)
    reg = twist_registry(SurfaceGroup(2))
    monos = [reg[k] for k in ("ta1", "tb2", "tsep1", "ta1*tb2*tsep1", "tbdy")]
    for _ in range(25):
        a, b = random_arc(rng, genus2), random_arc(rng, genus2)
        if {a.start, a.end} & {b.start, b.end}:
            continue
        base = geometric_intersection(a, b)
        for mono in monos:
            fa = apply_monodromy(mono.automorphism, a)
            fb = apply_monodromy(mono.automorphism, b)
            assert geometric_intersection(fa, fb) == base
            assert fa.self_intersections() == a.self_intersections()


def test_monodromy_invertible_on_arcs(genus2):
    rng = random.Random(13)
    reg = twist_registry(SurfaceGroup(2))
    for name in ("ta1", "tsep1", "tbdy", "ta2*tb1*ta1"):
        mono = reg[name]
        inv = mono.automorphism.inverse()
        for _ in range(10):
            a = random_arc(rng, genus2)
            image = apply_monodromy(mono.automorphism, a)
            back = apply_monodromy(inv, image)
            assert back == a


def test_disjoint_helper(torus):
    a = Arc(torus, F(1, 100), F(5, 100))
    c = Arc(torus, F(6, 100), F(9, 100))
    assert disjoint(a, c)
