import pytest
from hypothesis import given, settings

from conftest import fields, rng_for, seeds
from dkcoalg.chain import homology, point, sphere
from dkcoalg.coalg import (
    CoalgebraAxiomError,
    check_coalgebra_axioms,
    check_simplicial_coalgebra_axioms,
    constant_coalgebra,
    counit_is_coalgebra_iso,
    eta_square,
    gamma_tilde,
    gamma_tilde_map,
    is_dg_coalgebra_map,
    is_simplicial_coalgebra_map,
    lemma_square_check,
    mutate_comult,
    n_tilde,
    n_tilde_map,
    eta_square_counterexample,
    unit_coalgebra,
)
from dkcoalg.connected.simplicial import simplicial_tensor_coalgebra
from dkcoalg.connected.tensor import tensor_coalgebra
from dkcoalg.doldkan import gamma
from dkcoalg.exactlinalg import GF, QQ, Matrix, is_invertible
from dkcoalg.generators import random_complex, random_connected_coalgebra, random_connected_coalgebra_map


def test_unit_and_cofree_coalgebras_satisfy_axioms():
    assert check_coalgebra_axioms(unit_coalgebra(4, QQ)).ok
    assert check_coalgebra_axioms(tensor_coalgebra(sphere(1, 4, QQ))).ok


def test_mutated_comultiplication_breaks_an_axiom():
    C = tensor_coalgebra(sphere(1, 3, QQ))
    # degree 2 holds the word x⊗x; send it to a wrong pair of factors
    M = C.comult[2]
    bad = mutate_comult(C, 2, M.nrows - 1, 0, QQ(1) + (M[M.nrows - 1, 0] or 0))
    rep = check_coalgebra_axioms(bad)
    assert not rep.ok
    assert "degree 2" in str(rep)
    with pytest.raises(CoalgebraAxiomError):
        type(bad)(bad.carrier, bad.comult, bad.counit)


def test_n_tilde_of_constant_is_unit():
    C = n_tilde(constant_coalgebra(4, QQ))
    assert C.dims == (1, 0, 0, 0, 0)
    assert C.comult[0] == Matrix.identity(QQ, 1)
    assert C.counit == Matrix.identity(QQ, 1)


def test_gamma_tilde_of_unit_is_constant():
    A = gamma_tilde(unit_coalgebra(4, QQ))
    I = constant_coalgebra(4, QQ)
    assert A.carrier.dims == I.carrier.dims
    assert all(a == b for a, b in zip(A.comult, I.comult))
    assert all(a == b for a, b in zip(A.counit, I.counit))


@pytest.mark.parametrize("F", [QQ, GF(2), GF(3)], ids=lambda F: F.label())
def test_n_tilde_of_simplicial_tensor_on_circle(F):
    D = 3
    T = simplicial_tensor_coalgebra(gamma(sphere(1, D, F))).coalgebra
    C = n_tilde(T)
    assert check_coalgebra_axioms(C).ok
    # one class in each degree below D (the carrier itself is larger)
    assert homology(C.carrier).dims == (1,) * D
    assert sum(C.dims) > D


def test_gamma_tilde_of_circle_cofree():
    B = tensor_coalgebra(sphere(1, 4, QQ))
    A = gamma_tilde(B)
    assert check_simplicial_coalgebra_axioms(A).ok
    assert counit_is_coalgebra_iso(B)


@given(seeds, fields)
def test_counit_iso_on_random_connected_coalgebras(seed, F):
    B = random_connected_coalgebra(rng_for(seed), F, 3, 1)
    assert counit_is_coalgebra_iso(B)
    assert check_coalgebra_axioms(n_tilde(gamma_tilde(B))).ok


@given(seeds, fields)
def test_induced_functors_preserve_coalgebra_maps(seed, F):
    g = random_connected_coalgebra_map(rng_for(seed), F, 3, 1)
    Gs, Gt = gamma_tilde(g.source), gamma_tilde(g.target)
    G = gamma_tilde_map(g)
    assert is_simplicial_coalgebra_map(Gs, Gt, G)
    assert is_dg_coalgebra_map(n_tilde(Gs), n_tilde(Gt), n_tilde_map(G))


@pytest.mark.parametrize("F", [QQ, GF(5)], ids=lambda F: F.label())
def test_eta_square_fails_for_gamma_circle(F):
    r = eta_square_counterexample(3, F)
    assert r.lower_composite_level1.is_zero()
    assert r.right_map_level1.shape == (1, 1) and is_invertible(r.right_map_level1)
    assert not r.commutes and r.reproduces


def test_eta_square_commutes_for_constant():
    I = constant_coalgebra(3, QQ).carrier
    assert eta_square(I, I).commutes


def test_counterexample_needs_level_two():
    with pytest.raises(ValueError):
        eta_square_counterexample(1, QQ)


def test_comonoidal_square_examples():
    for X, Y in [(point(3, QQ), point(3, QQ)), (sphere(1, 3, QQ), sphere(1, 3, QQ)),
                 (sphere(1, 3, GF(2)), sphere(2, 3, GF(2)))]:
        assert lemma_square_check(X, Y)


@settings(max_examples=15)
@given(seeds, fields)
def test_comonoidal_square_random(seed, F):
    rng = rng_for(seed)
    assert lemma_square_check(random_complex(rng, F, 3, 2), random_complex(rng, F, 3, 2))
