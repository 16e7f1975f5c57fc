import pytest
from hypothesis import given, settings

from conftest import fields, rng_for, seeds, small_fields
from dkcoalg.chain import cone, direct_sum, induced_homology_map, sphere, zero_complex
from dkcoalg.coalg import (
    check_coalgebra_axioms,
    constant_coalgebra,
    counit_map,
    identity_coalgebra_map,
    unit_coalgebra,
)
from dkcoalg.connected.algebras import algebra_coproduct, algebra_product, dual_algebra, dual_coalgebra
from dkcoalg.connected.cofree import iso_chain_dims, product_with_cofree
from dkcoalg.connected.colimits import coequalizer, coproduct, simplicial_coproduct
from dkcoalg.connected.factorization import (
    cofree_witness,
    factor_cof_then_acyclic_fib,
    lift_against_projection,
    primitive_coalgebra,
    retract_of_cofree,
    transport_coalgebra,
)
from dkcoalg.connected.quillen import connected_dold_kan_equivalence, rcom_on_cofree, rcom_on_cofree_and_hovey
from dkcoalg.connected.simplicial import count_dg_adjunction, count_simplicial_adjunction, simplicial_tensor_coalgebra
from dkcoalg.connected.tensor import coaugmentation_quotient, tensor_coalgebra
from dkcoalg.doldkan import gamma
from dkcoalg.exactlinalg import GF, QQ
from dkcoalg.generators import (
    coaugmentation,
    constant_map,
    random_complex,
    random_connected_coalgebra,
    random_connected_coalgebra_map,
    random_sparse_invertible,
)
from dkcoalg.lifting import zero_map


# --- cofree coalgebras -------------------------------------------------------


def test_tensor_coalgebra_dims():
    assert tensor_coalgebra(sphere(1, 4, QQ)).dims == (1, 1, 1, 1, 1)
    assert tensor_coalgebra(zero_complex(QQ, 4)).dims == (1, 0, 0, 0, 0)
    V = random_complex(rng_for(0), QQ, 4, dims=(0, 2, 0, 0, 0))
    assert tensor_coalgebra(V).dims == (1, 2, 4, 8, 16)


def test_tensor_coalgebra_rejects_degree_zero():
    with pytest.raises(ValueError):
        tensor_coalgebra(sphere(0, 3, QQ))


def test_simplicial_tensor_coalgebra_dims():
    T = simplicial_tensor_coalgebra(gamma(sphere(1, 2, QQ))).coalgebra
    assert T.carrier.dims == (1, 3, 7)
    T0 = simplicial_tensor_coalgebra(gamma(zero_complex(QQ, 3))).coalgebra
    I = constant_coalgebra(3, QQ)
    assert T0.carrier.dims == I.carrier.dims
    assert all(a == b for a, b in zip(T0.comult, I.comult))


def test_coaugmentation_quotient():
    C = tensor_coalgebra(sphere(1, 3, QQ))
    assert coaugmentation_quotient(C).dims == (0, 1, 1, 1)
    assert coaugmentation_quotient(unit_coalgebra(3, QQ)).dims == (0, 0, 0, 0)


def test_dg_adjunction_counts_over_gf2():
    F = GF(2)
    S = sphere(1, 3, F)
    assert count_dg_adjunction(tensor_coalgebra(S), S) == (2, 2)
    n = count_dg_adjunction(primitive_coalgebra(S), direct_sum(S, S).total)
    assert n[0] == n[1] == 4


def test_simplicial_adjunction_counts_over_gf2():
    F = GF(2)
    W = gamma(sphere(1, 2, F))
    C = simplicial_tensor_coalgebra(W).coalgebra
    assert count_simplicial_adjunction(C, W) == (2, 2)
    assert count_simplicial_adjunction(constant_coalgebra(2, F), W) == (1, 1)


# --- colimits and duals ------------------------------------------------------


def test_coproduct_with_unit_is_identity():
    C = tensor_coalgebra(sphere(1, 3, QQ))
    U = coproduct(unit_coalgebra(3, QQ), C)
    assert U.coalgebra.dims == C.dims
    assert check_coalgebra_axioms(U.coalgebra).ok


def test_coproduct_of_circles():
    C = tensor_coalgebra(sphere(1, 4, QQ))
    U = coproduct(C, C)
    assert U.coalgebra.dims == (1, 2, 2, 2, 2)
    # the universal map out of C ⊔ C built from two identities is the fold
    fold = U.mediating(identity_coalgebra_map(C), identity_coalgebra_map(C))
    for inc in U.inclusions:
        assert all(a == b for a, b in zip((fold @ inc).f, identity_coalgebra_map(C).f))


def test_coequalizer_of_equal_maps_is_target():
    f = counit_map(tensor_coalgebra(sphere(1, 3, QQ)))
    Q = coequalizer(f, f)
    assert Q.coalgebra.dims == f.target.dims


def test_simplicial_coproduct_of_constants():
    I = constant_coalgebra(3, QQ)
    A, i, j = simplicial_coproduct(I, I)
    assert A.carrier.dims == I.carrier.dims


@given(seeds, small_fields)
def test_random_coproducts_satisfy_axioms(seed, F):
    rng = rng_for(seed)
    C = random_connected_coalgebra(rng, F, 3, 1)
    E = random_connected_coalgebra(rng, F, 3, 1)
    U = coproduct(C, E).coalgebra
    assert check_coalgebra_axioms(U).ok
    assert U.dims == tuple(1 if n == 0 else C.dims[n] + E.dims[n] for n in range(4))


def test_duals():
    assert dual_algebra(unit_coalgebra(3, QQ)).dims == (1, 0, 0, 0)
    C = tensor_coalgebra(sphere(1, 3, QQ))
    A = dual_algebra(C)
    assert A.dims == C.dims and A.cohomological
    CC = dual_coalgebra(A)
    assert CC.dims == C.dims and check_coalgebra_axioms(CC).ok


def test_algebra_product_and_coproduct():
    A = dual_algebra(tensor_coalgebra(sphere(1, 3, QQ)))
    P, _, _ = algebra_product(A, A)
    Cp, _, _ = algebra_coproduct(A, A)
    assert P.dims[1] == 2 and Cp.dims[1] == 2
    # free product of two polynomial rings on degree-one generators: x², y², xy, yx
    assert Cp.dims[2] == 4


# --- products with cofree coalgebras -----------------------------------------


def test_product_of_unit_with_cofree():
    V = sphere(1, 3, QQ)
    P = product_with_cofree(unit_coalgebra(3, QQ), V)
    assert P.coalgebra.dims == tensor_coalgebra(V).dims
    assert check_coalgebra_axioms(P.coalgebra).ok


@pytest.mark.parametrize("seed", range(4))
def test_product_dims_agree_along_isomorphisms(seed):
    rng = rng_for(seed)
    C = random_connected_coalgebra(rng, QQ, 3, 1)
    V = random_complex(rng, QQ, 3, 1, connected=True)
    dims = iso_chain_dims(C, V)
    assert len(set(dims.values())) == 1, dims


@settings(max_examples=10)
@given(seeds, small_fields)
def test_projection_from_product_with_acyclic_cofree(seed, F):
    rng = rng_for(seed)
    C = random_connected_coalgebra(rng, F, 3, 1)
    V = cone(random_complex(rng, F, 3, 1, connected=True))
    P = product_with_cofree(C, V)
    assert induced_homology_map(P.to_C.map).is_iso
    # identity squares lift, with the lift equal to the top map
    h = P.mediating(identity_coalgebra_map(C), zero_map(coaugmentation_quotient(C), V))
    res = lift_against_projection(P, identity_coalgebra_map(C), h, identity_coalgebra_map(C))
    assert res.ok


def test_lift_from_unit_into_acyclic_cofree():
    F = QQ
    C = tensor_coalgebra(sphere(1, 3, F))
    V = cone(sphere(1, 3, F))
    P = product_with_cofree(C, V)
    B = tensor_coalgebra(V)
    j, k = coaugmentation(B), constant_map(B, C)
    h = P.mediating(k @ j, zero_map(coaugmentation_quotient(j.source), V))
    assert lift_against_projection(P, j, h, k).ok


# --- factorization and retracts ----------------------------------------------


@pytest.mark.parametrize("make", ["identity", "counit", "constant"])
def test_factorization_examples(make):
    C = tensor_coalgebra(sphere(1, 3, QQ))
    f = {"identity": identity_coalgebra_map(C), "counit": counit_map(C),
         "constant": constant_map(C, primitive_coalgebra(sphere(2, 3, QQ)))}[make]
    fac = factor_cof_then_acyclic_fib(f)
    assert fac.composite_ok() and fac.i_injective() and fac.p_homology_iso()


@settings(max_examples=10)
@given(seeds, small_fields)
def test_factorization_random(seed, F):
    f = random_connected_coalgebra_map(rng_for(seed), F, 3, 1)
    fac = factor_cof_then_acyclic_fib(f)
    assert fac.composite_ok() and fac.i_injective() and fac.p_homology_iso()


def test_retract_with_cofree_witness():
    V = sphere(1, 3, QQ)
    rep = retract_of_cofree(tensor_coalgebra(V), cofree_witness(V))
    assert rep.found and rep.retract_ok


def test_retract_of_unit_and_transported_cofree():
    assert retract_of_cofree(unit_coalgebra(3, QQ)).retract_ok
    rng = rng_for(7)
    C = tensor_coalgebra(sphere(1, 3, QQ))
    gs = [random_sparse_invertible(rng, QQ, k) for k in C.dims]
    Ct = transport_coalgebra(C, [a for a, _ in gs], [b for _, b in gs])
    assert check_coalgebra_axioms(Ct).ok
    assert retract_of_cofree(Ct).retract_ok


def test_retract_search_reports_degree_for_primitive():
    rep = retract_of_cofree(primitive_coalgebra(sphere(1, 3, QQ)))
    assert not rep.found
    assert rep.failed_degree == 2


# --- comparison on homology --------------------------------------------------


@pytest.mark.parametrize("F", [QQ, GF(2)], ids=lambda F: F.label())
def test_comparison_on_circle(F):
    r = rcom_on_cofree(sphere(1, 3, F))
    assert r.ok and r.dims_normalized == (1, 1, 1)


def test_comparison_hovey_cases():
    S = sphere(1, 3, QQ)
    a = rcom_on_cofree_and_hovey(cone(S))
    z = rcom_on_cofree_and_hovey(zero_complex(QQ, 3))
    assert a.case == "acyclic" and a.ok
    assert z.case == "zero" and z.ok


def test_comparison_independent_of_word_cap():
    V = random_complex(rng_for(3), QQ, 3, 2, connected=True)
    a, b = rcom_on_cofree(V, 3), rcom_on_cofree(V, 2)
    assert a.ok and b.ok and a.dims_normalized == b.dims_normalized


@settings(max_examples=10)
@given(seeds, fields)
def test_connected_dold_kan(seed, F):
    V = random_complex(rng_for(seed), F, 3, 2, connected=True)
    assert connected_dold_kan_equivalence(V).ok
    assert connected_dold_kan_equivalence(gamma(V)).ok
