"""Loop construction and the non-contractibility certificate."""

import random

import pytest

from reebkit.freegroup import (LoopSpec, ParameterError, SurfaceGroup, Word,
                               build_gamma0, certify_noncontractible,
                               estimate_dfrak, eta_blocks_via_crossings,
                               identity_automorphism, is_trivial,
                               twist_registry, word)


def id_spec(p, n, B, O=None, sigma=None):
    O = O or tuple(Word() for _ in range(p))
    sigma = sigma or tuple(range(1, p + 1))
    return LoopSpec(p=p, n=n, B=tuple(B), O=tuple(O), sigma=sigma)


def test_gamma0_pure_power():
    g = SurfaceGroup(1)
    phi = identity_automorphism(2)
    spec = id_spec(1, 2, [Word()])
    assert build_gamma0(spec, phi, g).letters == (g.eta ** 2).letters


def test_gamma0_cancelling_pair():
    # B_1 = a3 cancels C_1 = phi(B_1^-1) when phi = id and sigma = id
    g = SurfaceGroup(2)
    phi = identity_automorphism(4)
    spec = id_spec(1, 10, [word(3)])
    assert build_gamma0(spec, phi, g).letters == (g.eta ** 10).letters


def test_gamma0_two_blocks_swap():
    g = SurfaceGroup(2)
    phi = identity_automorphism(4)
    spec = id_spec(2, 3, [word(3), word(4)], sigma=(2, 1))
    got = build_gamma0(spec, phi, g)
    eta3 = g.eta ** 3
    expected = eta3 * word(3) * word(-4) * eta3 * word(4) * word(-3)
    assert got.letters == expected.letters
    assert not is_trivial(got)


def test_certify_eta10():
    g = SurfaceGroup(2)
    phi = identity_automorphism(4)
    spec = id_spec(1, 10, [word(3)])
    cert = certify_noncontractible(spec, phi, g, dfrak=1, r_phi=0, N=5)
    assert cert.verdict and cert.oracle_agrees
    assert cert.C == 10 and cert.bound == 4


def test_certify_vacuous_bound_still_emits():
    g = SurfaceGroup(1)
    phi = identity_automorphism(2)
    spec = id_spec(1, 5, [Word()])  # n = 5 <= 6*dfrak
    cert = certify_noncontractible(spec, phi, g, dfrak=1, r_phi=0)
    assert not cert.verdict
    assert cert.bound <= 0
    assert cert.oracle_agrees


def test_certify_parameter_errors():
    g = SurfaceGroup(1)
    phi = identity_automorphism(2)
    spec = id_spec(1, 10, [Word()])
    with pytest.raises(ParameterError):
        certify_noncontractible(spec, phi, g, dfrak=1, r_phi=0, N=4)
    with pytest.raises(ParameterError):
        certify_noncontractible(spec, phi, g, dfrak=2, r_phi=3)


def test_estimate_dfrak_examples():
    g4 = SurfaceGroup(2)
    phi = identity_automorphism(4)
    assert estimate_dfrak(id_spec(1, 7, [Word()]), phi, g4) == 1
    assert estimate_dfrak(id_spec(1, 7, [word(3)]), phi, g4) == 1
    b = (g4.eta ** 2) * word(3) * (g4.eta ** 3) * word(4) * (g4.eta ** 4)
    assert estimate_dfrak(id_spec(1, 7, [b]), phi, g4) == 3


def random_loop_spec(rng, group, registry):
    rank = group.generator_count
    mono = rng.choice(list(registry.values()))
    p = rng.randrange(1, 5)
    B = []
    for _ in range(p):
        parts = []
        for _ in range(rng.randrange(0, 4)):
            if rng.random() < 0.4:
                parts.extend((group.eta ** rng.randrange(-4, 5)).letters)
            else:
                parts.append(rng.choice([i for i in range(-rank, rank + 1) if i]))
        B.append(Word(tuple(parts)).reduced())
    O = [Word(tuple(rng.choice([i for i in range(-rank, rank + 1) if i])
                    for _ in range(rng.randrange(0, 5)))).reduced()
         for _ in range(p)]
    sigma = list(range(1, p + 1))
    rng.shuffle(sigma)
    return LoopSpec(p=p, n=1, B=tuple(B), O=tuple(O), sigma=tuple(sigma)), mono


def test_soundness_randomized():
    """Verdict=true must imply the oracle sees a nontrivial loop, always."""
    rng = random.Random(1234)
    groups = {g: (SurfaceGroup(g), twist_registry(SurfaceGroup(g))) for g in (1, 2, 3)}
    true_verdicts = 0
    for _ in range(300):
        group, registry = groups[rng.choice([1, 2, 3])]
        spec0, mono = random_loop_spec(rng, group, registry)
        dfrak = max(estimate_dfrak(spec0, mono.automorphism, group), mono.r_phi, 1)
        n = 6 * dfrak + rng.randrange(1, 21)
        spec = LoopSpec(p=spec0.p, n=n, B=spec0.B, O=spec0.O, sigma=spec0.sigma)
        cert = certify_noncontractible(spec, mono.automorphism, group, dfrak,
                                       mono.r_phi, N=5)
        assert cert.oracle_agrees
        if cert.verdict:
            true_verdicts += 1
            assert not is_trivial(build_gamma0(spec, mono.automorphism, group))
    assert true_verdicts > 0


def test_crossing_count_oracle_small_scale():
    # the Cayley-tree crossing count recovers block exponents on eta powers
    g = SurfaceGroup(1)
    w = (g.eta ** 4) * word(2) * (g.eta ** 2)
    got = eta_blocks_via_crossings(w, g)
    assert got[0] >= 3  # dominant group within +-1 of the exponent 4
