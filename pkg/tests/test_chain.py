import pytest
from hypothesis import given

from conftest import fields, rng_for, seeds
from dkcoalg.chain import (
    ChainComplex,
    ChainComplexError,
    ChainMap,
    ModelVariantError,
    associator,
    basic_complex,
    cone,
    desuspend,
    direct_sum,
    disk,
    hom_complex,
    homology,
    homology_retraction,
    identity_map,
    induced_homology_map,
    is_acyclic,
    model_predicates,
    point,
    sphere,
    symmetry,
    tensor,
    zero_complex,
    zero_map,
)
from dkcoalg.exactlinalg import QQ, Matrix, is_invertible
from dkcoalg.generators import random_chain_map, random_complex


def test_basic_complexes():
    S = sphere(2, 4, QQ)
    assert S.dims == (0, 0, 1, 0, 0) and all(d.is_zero() for d in S.d)
    Dk = disk(1, 3, QQ)
    assert Dk.dims == (1, 1, 0, 0) and Dk.d[0] == Matrix.identity(QQ, 1)
    assert point(2, QQ).dims == (1, 0, 0)
    assert basic_complex("sphere", 1, 2, QQ).dims == (0, 1, 0)


def test_tensor_examples():
    S1 = sphere(1, 3, QQ)
    assert tensor(S1, S1).dims == sphere(2, 3, QQ).dims
    Y = random_complex(rng_for(1), QQ, 3, 2)
    assert tensor(point(3, QQ), Y).dims == Y.dims
    D1 = disk(1, 2, QQ)
    assert tensor(D1, D1).dims == (1, 2, 1)


def test_homology_examples():
    for n in (1, 2, 3):
        assert homology(disk(n, 4, QQ)).dims == (0, 0, 0, 0)
        assert homology(sphere(n, 4, QQ)).dims == tuple(int(k == n) for k in range(4))
    S1 = sphere(1, 3, QQ)
    X = direct_sum(tensor(S1, S1), disk(2, 3, QQ)).total
    assert homology(X).dims == (0, 0, 1)


def test_degree_D_is_flagged():
    h = homology(sphere(3, 3, QQ))
    assert h.dims == (0, 0, 0) and h.top == 1 and h.boundary_incomplete


def test_induced_homology_examples():
    Dn = disk(2, 3, QQ)
    assert induced_homology_map(identity_map(Dn)).is_iso
    assert induced_homology_map(zero_map(Dn, zero_complex(QQ, 3))).is_iso
    S = sphere(2, 3, QQ)
    assert not induced_homology_map(zero_map(zero_complex(QQ, 3), S)).is_iso


def test_cone_and_desuspend():
    C = cone(sphere(1, 2, QQ))
    assert C.dims == (0, 1, 1) and is_acyclic(C)
    assert desuspend(sphere(2, 3, QQ)).dims == sphere(1, 2, QQ).dims
    assert cone(zero_complex(QQ, 3)).dims == (0, 0, 0, 0)
    with pytest.raises(ChainComplexError):
        desuspend(disk(1, 2, QQ))


def test_model_predicates_examples():
    D = 3
    for n in (1, 2):
        Sn1, Dn = sphere(n - 1, D, QQ), disk(n, D, QQ)
        inc = ChainMap(Sn1, Dn, tuple(Matrix.identity(QQ, 1) if k == n - 1 else Matrix.zeros(QQ, Dn.dims[k], Sn1.dims[k])
                                      for k in range(D + 1)))
        v = model_predicates(inc)
        assert v.is_cofibration and not v.is_fibration
        assert model_predicates(zero_map(zero_complex(QQ, D), Dn)).is_acyclic_cofibration
        assert model_predicates(zero_map(Dn, zero_complex(QQ, D))).is_acyclic_fibration
    with pytest.raises(ModelVariantError):
        model_predicates(identity_map(disk(1, 2, QQ)), "DGVct_c")


def test_hom_complex_examples():
    Y = random_complex(rng_for(3), QQ, 3, 2)
    H = hom_complex(point(3, QQ), Y)
    assert [H.dim(n) for n in range(4)] == list(Y.dims)
    S1 = sphere(1, 3, QQ)
    assert hom_complex(S1, S1).dim(0) == 1
    assert all(v == 0 for v in hom_complex(disk(1, 3, QQ), point(3, QQ)).homology().values())


def test_constructor_rejects_nonzero_square():
    one = Matrix.identity(QQ, 1)
    with pytest.raises(ChainComplexError, match="degree 2"):
        ChainComplex(QQ, (1, 1, 1), (one, one))


# --- properties


@given(fields, seeds)
def test_kunneth(F, seed):
    rng = rng_for(seed)
    X, Y = random_complex(rng, F, 4, 3), random_complex(rng, F, 4, 3)
    hx, hy, hxy = homology(X).dims, homology(Y).dims, homology(tensor(X, Y)).dims
    assert all(hxy[n] == sum(hx[p] * hy[n - p] for p in range(n + 1)) for n in range(4))


@given(fields, seeds)
def test_tensor_associative_and_unital(F, seed):
    rng = rng_for(seed)
    X, Y, Z = (random_complex(rng, F, 3, 2) for _ in range(3))
    a = associator(X, Y, Z)  # checked to be a chain map on construction
    assert all(is_invertible(m) for m in a.f)
    s = symmetry(X, Y)
    assert all(is_invertible(m) for m in s.f)
    U = point(3, F)
    assert tensor(U, X).dims == X.dims == tensor(X, U).dims


@given(fields, seeds)
def test_homology_additive(F, seed):
    rng = rng_for(seed)
    X, Y = random_complex(rng, F, 4, 3), random_complex(rng, F, 4, 3)
    S = direct_sum(X, Y).total
    assert homology(S).dims == tuple(a + b for a, b in zip(homology(X).dims, homology(Y).dims))


@given(fields, seeds)
def test_induced_homology_functorial(F, seed):
    rng = rng_for(seed)
    X, Y, Z = (random_complex(rng, F, 3, 2) for _ in range(3))
    f, g = random_chain_map(rng, X, Y), random_chain_map(rng, Y, Z)
    Hf, Hg, Hgf = induced_homology_map(f), induced_homology_map(g), induced_homology_map(g @ f)
    assert all(Hgf.maps[n] == Hg.maps[n] @ Hf.maps[n] for n in range(3))


@given(fields, seeds)
def test_random_constructors_square_to_zero(F, seed):
    rng = rng_for(seed)
    X = random_complex(rng, F, 4, 3)
    for Y in (cone(X), tensor(X, X), hom_complex(X, X).complex):
        assert all((Y.d[n - 1] @ Y.d[n]).is_zero() for n in range(1, Y.D))


@given(fields, seeds)
def test_homology_retraction_is_chain_level_left_inverse(F, seed):
    from dkcoalg.chain import homology_basis

    X = random_complex(rng_for(seed), F, 3, 3)
    for n in range(3):
        hb = homology_basis(X, n)
        r = homology_retraction(X, n, hb)
        assert r @ hb.reps == Matrix.identity(F, hb.dim)
        if n + 1 <= X.D:
            assert (r @ X.d[n]).is_zero()
