from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import fields, rng_for, seeds, small_fields
from dkcoalg.exactlinalg import (
    GF,
    QQ,
    FieldError,
    FieldSpec,
    Matrix,
    Term,
    complement,
    image_basis,
    induced_map_on_quotient,
    intersection,
    inverse,
    kernel_basis,
    quotient,
    rank,
    solution_space,
    solve_affine,
    span_contains,
)
from dkcoalg.generators import random_matrix


def M(F, rows, ncols=None):
    return Matrix.from_dense(F, rows, ncols=ncols)


# --- examples


def test_rank_examples():
    assert rank(Matrix.identity(QQ, 2)) == 2
    assert rank(Matrix.zeros(QQ, 3, 4)) == 0
    assert rank(M(QQ, [[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 3)).ncols == 0
    assert kernel_basis(Matrix.zeros(QQ, 3, 3)).ncols == 3
    F = GF(5)
    K = kernel_basis(M(F, [[1, 1]]))
    assert K.shape == (2, 1)
    # proportional to (1, 4)
    a, b = K[0, 0], K[1, 0]
    assert a != 0 and b * pow(int(a), -1, 5) % 5 == 4


def test_solve_affine_examples():
    X = {"X": (1, 1)}
    sol = solve_affine(QQ, X, [([Term("X", Matrix.zeros(QQ, 1, 1))], Matrix.zeros(QQ, 1, 1))])
    assert sol["X"] == Matrix.zeros(QQ, 1, 1)
    cons = [([Term("X")], M(QQ, [[1]])), ([Term("X")], M(QQ, [[2]]))]
    assert solve_affine(QQ, X, cons) is None


def test_subspace_examples():
    e1 = M(QQ, [[1], [0]])
    assert span_contains(intersection(e1, e1), e1) and intersection(e1, e1).ncols == 1
    C = complement(e1)
    assert C.ncols == 1 and rank(Matrix.from_dense(QQ, [[1, C[0, 0]], [0, C[1, 0]]])) == 2
    q = quotient(e1, 2)
    assert induced_map_on_quotient(Matrix.identity(QQ, 2), q, q) == Matrix.identity(QQ, 1)


def test_field_validation():
    with pytest.raises(FieldError):
        GF(4)
    with pytest.raises(FieldError):
        FieldSpec.parse("R")
    assert FieldSpec.parse("GFp:7") == GF(7)
    assert QQ("3/6") == QQ(1) / 2
    assert GF(5)("1/2") == 3


# --- properties


@given(fields, seeds, st.integers(0, 5), st.integers(0, 5))
def test_rank_nullity(F, seed, r, c):
    A = random_matrix(rng_for(seed), F, r, c, density=0.6)
    K = kernel_basis(A)
    assert rank(A) + K.ncols == c
    assert (A @ K).is_zero()
    assert rank(K) == K.ncols


@given(fields, seeds, st.integers(0, 5), st.integers(0, 5))
def test_image_basis_spans_columns(F, seed, r, c):
    A = random_matrix(rng_for(seed), F, r, c, density=0.6)
    B = image_basis(A)
    assert B.ncols == rank(A) == rank(B)
    assert span_contains(B, A) and span_contains(A, B)


@given(small_fields, seeds, st.integers(1, 3), st.integers(1, 3))
def test_kernel_size_matches_brute_force(F, seed, r, c):
    """Independent oracle: count the vectors killed by A over GF(p)."""
    A = random_matrix(rng_for(seed), F, r, c)
    count = sum(1 for v in product(range(F.p), repeat=c)
                if (A @ Matrix.from_dense(F, [[x] for x in v], ncols=1)).is_zero())
    assert count == F.p ** kernel_basis(A).ncols


@given(fields, seeds, st.integers(1, 4))
def test_inverse_roundtrip(F, seed, n):
    A = random_matrix(rng_for(seed), F, n, n)
    if rank(A) < n:
        with pytest.raises(ZeroDivisionError):
            inverse(A)
    else:
        assert A @ inverse(A) == Matrix.identity(F, n)


@given(fields, seeds)
def test_solve_affine_solutions_satisfy_constraints(F, seed):
    rng = rng_for(seed)
    L, R = random_matrix(rng, F, 3, 2), random_matrix(rng, F, 2, 3)
    X0 = random_matrix(rng, F, 2, 2)
    P = random_matrix(rng, F, 2, 3)
    cons = [([Term("X", L, R), Term("Y")], L @ X0 @ R),
            ([Term("X", P.T)], P.T @ X0)]
    unknowns = {"X": (2, 2), "Y": (3, 3)}
    sol = solve_affine(F, unknowns, cons)
    assert sol is not None  # X0 with Y = 0 is a solution
    assert L @ sol["X"] @ R + sol["Y"] == L @ X0 @ R
    assert P.T @ sol["X"] == P.T @ X0
    for s in solution_space(F, unknowns, cons):
        assert (L @ s["X"] @ R + s["Y"]).is_zero() and (P.T @ s["X"]).is_zero()
