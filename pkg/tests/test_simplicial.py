import pytest
from hypothesis import given

from conftest import fields, rng_for, seeds
from dkcoalg.chain import ChainMap, disk, sphere
from dkcoalg.doldkan import gamma, gamma_map, normalize
from dkcoalg.exactlinalg import QQ, Matrix
from dkcoalg.generators import random_simplicial
from dkcoalg.simplicial import (
    SimplicialIdentityError,
    SimplicialMap,
    SimplicialVectorSpace,
    constant_unit,
    level_swap,
    level_tensor,
    svct_predicates,
    zero_simplicial,
)


def test_constant_unit():
    X = constant_unit(3, QQ)
    assert X.dims == (1, 1, 1, 1)
    one = Matrix.identity(QQ, 1)
    assert all(m == one for fs in X.faces for m in fs) and all(m == one for ss in X.degens for m in ss)
    assert normalize(X).dims == (1, 0, 0, 0)


def test_level_tensor_examples():
    X = random_simplicial(rng_for(0), QQ, 3, 2)
    I = constant_unit(3, QQ)
    assert level_tensor(I, X).dims == X.dims
    assert level_tensor(I, I).dims == I.dims
    G = gamma(sphere(1, 3, QQ))
    assert level_tensor(G, G).dims[1] == 1
    A = SimplicialVectorSpace(QQ, (1, 2), [[Matrix.from_dense(QQ, [[1, 1]]), Matrix.from_dense(QQ, [[1, 1]])]],
                              [[Matrix.from_dense(QQ, [[1], [0]])]])
    B = SimplicialVectorSpace(QQ, (1, 3), [[Matrix.from_dense(QQ, [[1, 0, 0]])] * 2],
                              [[Matrix.from_dense(QQ, [[1], [0], [0]])]])
    assert level_tensor(A, B).dims == (1, 6)


def test_identities_are_checked():
    bad = Matrix.from_dense(QQ, [[0]])
    with pytest.raises(SimplicialIdentityError, match="d_j s_j"):
        SimplicialVectorSpace(QQ, (1, 1), [[Matrix.identity(QQ, 1), bad]], [[Matrix.identity(QQ, 1)]])


def test_identity_is_acyclic_cofibration():
    X = random_simplicial(rng_for(2), QQ, 3, 2)
    I = SimplicialMap(X, X, tuple(Matrix.identity(QQ, k) for k in X.dims))
    assert svct_predicates(I).is_acyclic_cofibration


def test_svct_predicates_examples():
    D = 3
    for n in (1, 2):
        Dn = disk(n, D, QQ)
        zero = SimplicialMap(zero_simplicial(D, QQ), gamma(Dn),
                             tuple(Matrix.zeros(QQ, k, 0) for k in gamma(Dn).dims))
        assert svct_predicates(zero).is_acyclic_cofibration
        Sn1 = sphere(n - 1, D, QQ)
        inc = ChainMap(Sn1, Dn, tuple(Matrix.identity(QQ, 1) if k == n - 1 else Matrix.zeros(QQ, Dn.dims[k], Sn1.dims[k])
                                      for k in range(D + 1)))
        v = svct_predicates(gamma_map(inc))
        assert v.is_cofibration and not v.is_weak_equivalence


@given(fields, seeds)
def test_level_tensor_symmetric(F, seed):
    rng = rng_for(seed)
    X, Y = random_simplicial(rng, F, 3, 2), random_simplicial(rng, F, 3, 2)
    s = level_swap(X, Y)  # a simplicial map by construction check
    back = level_swap(Y, X)
    assert all((b @ a) == Matrix.identity(F, a.ncols) for a, b in zip(s.f, back.f))
