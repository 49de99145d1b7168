"""Word reduction, surface groups, automorphisms and the twist registry."""

import random

import pytest

from reebkit.freegroup import (InvalidAutomorphism, SurfaceGroup, Word,
                               identity_automorphism, is_trivial, reduce,
                               twist_registry, word)


def random_word(rng, rank, length):
    return Word(tuple(rng.choice([i for i in range(-rank, rank + 1) if i])
                      for _ in range(length)))


def test_single_cancellation():
    assert reduce(word(1, -1)).letters == ()
    assert reduce(word(1, 2, -2, 3)).letters == (1, 3)


def test_eta_sandwich_reduces_to_eta():
    # eta * eta^-1 * eta for genus 1, reduced by hand: a b a^-1 b^-1
    g = SurfaceGroup(1)
    w = g.eta * g.eta.inverse() * g.eta
    assert w.letters == (1, 2, -1, -2)


def test_reduce_idempotent_fuzz():
    rng = random.Random(20240511)
    for _ in range(200):
        w = random_word(rng, 4, rng.randrange(0, 400))
        r = reduce(w)
        assert r.is_reduced
        assert reduce(r).letters == r.letters


def test_reduce_long_word():
    rng = random.Random(7)
    w = random_word(rng, 6, 10_000)
    r = reduce(w)
    assert r.is_reduced


def test_reduce_respects_multiplication():
    rng = random.Random(99)
    for _ in range(200):
        u = random_word(rng, 4, rng.randrange(0, 60))
        v = random_word(rng, 4, rng.randrange(0, 60))
        lhs = reduce(Word(u.letters + v.letters))
        rhs = reduce(u) * reduce(v)
        assert lhs.letters == rhs.letters
        assert is_trivial((u * v) * (v.inverse() * u.inverse()))


def test_is_trivial():
    assert is_trivial(Word())
    assert not is_trivial(SurfaceGroup(2).eta)


def test_surface_group_eta_canonical():
    for genus in (1, 2, 3):
        g = SurfaceGroup(genus)
        assert len(g.eta) == 4 * genus
        assert g.eta.is_reduced
    assert SurfaceGroup(1).eta.letters == (1, 2, -1, -2)


def test_identity_automorphism():
    phi = identity_automorphism(4)
    w = word(3, -1, 2, 2)
    assert phi.apply(w).letters == reduce(w).letters


def test_genus1_twist_matches_convention():
    # T: a -> a, b -> b a; applied to b gives b a
    reg = twist_registry(SurfaceGroup(1))
    t = reg["ta1"].automorphism
    assert t.apply(word(2)).letters == (2, 1)
    # T applied to eta: a (ba) a^-1 (ba)^-1 reduces back to eta
    eta = SurfaceGroup(1).eta
    assert t.apply(eta).letters == eta.letters


def test_registry_fixes_eta_and_inverts():
    rng = random.Random(5)
    for genus in (1, 2, 3):
        group = SurfaceGroup(genus)
        reg = twist_registry(group)
        assert "id" in reg and reg["id"].r_phi == 0
        for m in reg.values():
            assert m.automorphism.fixes(group.eta)
            inv = m.automorphism.inverse()
            for _ in range(5):
                w = random_word(rng, group.generator_count, 20)
                assert inv.apply(m.automorphism.apply(w)).letters == reduce(w).letters


def test_twist_homomorphic():
    rng = random.Random(11)
    reg = twist_registry(SurfaceGroup(2))
    phi = reg["ta1*tb2*tsep1"].automorphism
    for _ in range(50):
        u = random_word(rng, 4, 15)
        v = random_word(rng, 4, 15)
        assert phi.apply(u * v).letters == (phi.apply(u) * phi.apply(v)).letters


def test_invalid_automorphism_rejected():
    from reebkit.freegroup import Automorphism
    with pytest.raises(InvalidAutomorphism):
        Automorphism(2, (word(1), word(1)), (word(1), word(2)))
