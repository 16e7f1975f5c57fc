import pytest
from hypothesis import given, settings, strategies as st

from conftest import rng_for, seeds
from dkcoalg.chain import ChainMap, disk, identity_map, point, sphere, zero_complex, zero_map
from dkcoalg.exactlinalg import GF, QQ, Matrix
from dkcoalg.generators import random_chain_map, random_complex, random_injection
from dkcoalg.lifting import (
    LiftingError,
    LiftingSquare,
    brute_force_lift_exists,
    brute_force_llp,
    characterize,
    cokernel,
    commuting_squares,
    family_maps,
    find_lift,
    has_llp,
    pushout_instance,
)


def _unit(F, S, T, n):
    """The map ``S -> T`` that is the identity of K in degree ``n`` and zero elsewhere."""
    return ChainMap(S, T, tuple(Matrix.identity(F, 1) if m == n else Matrix.zeros(F, T.dims[m], S.dims[m])
                                for m in range(S.D + 1)))


def test_iso_square_lifts():
    X = random_complex(rng_for(1), QQ, 3, 2)
    Y = random_complex(rng_for(2), QQ, 3, 2)
    p = random_chain_map(rng_for(3), X, Y)
    i = identity_map(X)
    L = find_lift(LiftingSquare(i, p, identity_map(X), p))
    assert L is not None and all(a == b for a, b in zip(L.f, identity_map(X).f))


@pytest.mark.parametrize("F", [QQ, GF(2)], ids=lambda F: F.label())
def test_circle_does_not_lift_through_disk(F):
    D = 3
    S, Dk, Z = sphere(1, D, F), disk(1, D, F), zero_complex(F, D)
    sq = LiftingSquare(zero_map(Z, S), _unit(F, Dk, S, 1), zero_map(Z, Dk), identity_map(S))
    assert find_lift(sq) is None
    if F.mod:
        assert not brute_force_lift_exists(sq)


def test_square_must_commute():
    F, D = QQ, 3
    S = sphere(1, D, F)
    with pytest.raises(LiftingError, match="degree 1"):
        LiftingSquare(identity_map(S), identity_map(S), identity_map(S), zero_map(S, S))


def test_family_generators():
    assert len(family_maps("Q", 3, QQ)) == 3
    assert len(family_maps("P", 3, QQ)) == 6
    assert len(family_maps("P", 3, QQ, bound=1)) == 2
    with pytest.raises(LiftingError):
        family_maps("P", 3, QQ, bound=4)
    with pytest.raises(LiftingError):
        family_maps("R", 3, QQ)


def test_llp_needs_room_at_the_top():
    S = sphere(3, 3, QQ)
    with pytest.raises(LiftingError):
        has_llp(identity_map(S), "Q")


@pytest.mark.parametrize("F", [QQ, GF(2)], ids=lambda F: F.label())
def test_characterization_examples(F):
    D = 4
    S1, D1, D2 = sphere(1, D, F), disk(1, D, F), disk(2, D, F)
    s = characterize(identity_map(S1))
    assert (s.injective, s.quasi_iso, s.llp_q, s.llp_p) == (True, True, True, True)
    # the boundary inclusion is injective but kills the class of the circle
    s = characterize(_unit(F, S1, D2, 1))
    assert (s.injective, s.quasi_iso, s.llp_q, s.llp_p) == (True, False, True, False)
    assert s.p_ok
    s = characterize(_unit(F, D1, S1, 1))
    assert (s.injective, s.llp_q, s.llp_p) == (False, False, False)
    assert s.q_ok and s.p_ok


def test_degree_zero_defect():
    """``0 -> K[0]`` lifts against P although it is not a quasi-isomorphism."""
    F, D = QQ, 3
    f = zero_map(zero_complex(F, D), point(D, F))
    s = characterize(f)
    assert s.injective and not s.quasi_iso
    assert s.llp_p and s.coker_acyclic_positive
    assert not s.p_ok
    assert s.p_corrected_ok


@settings(max_examples=15)
@given(seeds)
def test_random_injections_match_characterization(seed):
    rng = rng_for(seed)
    A = random_complex(rng, QQ, 4, 2, top=3)
    R = random_complex(rng, QQ, 4, 2, top=3, acyclic=rng.random() < 0.5)
    s = characterize(random_injection(rng, A, R))
    assert s.injective and s.llp_q
    assert s.p_corrected_ok


@settings(max_examples=15)
@given(seeds, st.sampled_from(["Q", "P"]))
def test_solver_agrees_with_brute_force_gf2(seed, fam):
    rng = rng_for(seed)
    F, D = GF(2), 3
    A = random_complex(rng, F, D, 1, top=2)
    B = random_complex(rng, F, D, 1, top=2)
    f = random_chain_map(rng, A, B)
    assert has_llp(f, fam) == all(brute_force_llp(f, g) for g in family_maps(fam, D, F))


@settings(max_examples=10)
@given(seeds)
def test_find_lift_agrees_with_brute_force_on_squares(seed):
    rng = rng_for(seed)
    F, D = GF(2), 3
    A, B = random_complex(rng, F, D, 1), random_complex(rng, F, D, 1)
    X, Y = random_complex(rng, F, D, 1), random_complex(rng, F, D, 1)
    f, p = random_chain_map(rng, A, B), random_chain_map(rng, X, Y)
    for h, k in commuting_squares(f, p)[:4]:
        sq = LiftingSquare(f, p, h, k)
        assert (find_lift(sq) is not None) == brute_force_lift_exists(sq)


def test_cokernel_and_pushout():
    F, D = QQ, 4
    f = _unit(F, sphere(1, D, F), disk(2, D, F), 1)
    C, q = cokernel(f)
    assert C.dims == (0, 0, 1, 0, 0)
    r = pushout_instance(identity_map(sphere(1, D, F)))
    assert r.f_in_p_proj and r.pushout_in_p_proj and r.consistent
