"""Normalization ``N``, its inverse ``Γ``, the natural isomorphisms, and the
Alexander-Whitney / shuffle maps."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .chain import ChainComplex, ChainMap, _assemble, tensor, tensor_layout
from .exactlinalg import (
    Matrix,
    inverse,
    kernel_basis,
    kron,
    kron_matmul,
    left_inverse,
    vstack,
)
from .simplicial import SimplicialMap, SimplicialVectorSpace, level_tensor


# ---------------------------------------------------------------------------
# Normalization


@dataclass(frozen=True, eq=False)
class Normalization:
    """``N(X)`` with its inclusion into ``X`` and the projection killing degenerate elements.

    ``incl[n]`` has columns forming a basis of ``N_n = ∩_{i<n} ker d_i``;
    ``proj[n]`` maps ``X_n`` to coordinates in that basis and vanishes on degenerate elements.
    """

    source: SimplicialVectorSpace
    complex: ChainComplex
    incl: tuple[Matrix, ...]
    proj: tuple[Matrix, ...]


def degenerate_killer(X: SimplicialVectorSpace, n: int) -> Matrix:
    """The idempotent ``(1 - s_{n-1} d_{n-1}) ... (1 - s_0 d_0)`` on ``X_n``.

    Its image is ``N_n`` and its kernel is the degenerate subspace.
    """
    F = X.field
    P = Matrix.identity(F, X.dims[n])
    for j in range(n):  # rightmost factor (j = 0) is applied first
        P = P - X.degen(n - 1, j) @ (X.face(n, j) @ P)
    return P


@lru_cache(maxsize=256)
def _normalize_cached(X: SimplicialVectorSpace) -> Normalization:
    F = X.field
    incl, proj = [], []
    for n in range(X.D + 1):
        if n == 0:
            K = Matrix.identity(F, X.dims[0])
        else:
            K = kernel_basis(vstack(F, [X.face(n, i) for i in range(n)], ncols=X.dims[n]))
        incl.append(K)
        proj.append(left_inverse(K) @ degenerate_killer(X, n) if K.ncols else Matrix.zeros(F, 0, X.dims[n]))
    ds = []
    for n in range(1, X.D + 1):
        m = left_inverse(incl[n - 1]) @ (X.face(n, n) @ incl[n]) if incl[n - 1].ncols else \
            Matrix.zeros(F, 0, incl[n].ncols)
        ds.append(-m if n % 2 else m)
    C = ChainComplex(F, tuple(K.ncols for K in incl), tuple(ds))
    return Normalization(X, C, tuple(incl), tuple(proj))


def normalization(X: SimplicialVectorSpace) -> Normalization:
    return _normalize_cached(X)


def normalize(X: SimplicialVectorSpace) -> ChainComplex:
    return normalization(X).complex


def normalize_map(g: SimplicialMap, source: Normalization | None = None,
                  target: Normalization | None = None) -> ChainMap:
    NX = source or normalization(g.source)
    NY = target or normalization(g.target)
    mats = tuple(NY.proj[n] @ (g.f[n] @ NX.incl[n]) for n in range(g.source.D + 1))
    return ChainMap(NX.complex, NY.complex, mats, check=False)


def moore_complex(X: SimplicialVectorSpace) -> ChainComplex:
    """The unnormalized complex with ``d = Σ (-1)^i d_i``."""
    ds = []
    for n in range(1, X.D + 1):
        acc = Matrix.zeros(X.field, X.dims[n - 1], X.dims[n])
        for i in range(n + 1):
            acc = acc - X.face(n, i) if i % 2 else acc + X.face(n, i)
        ds.append(acc)
    return ChainComplex(X.field, X.dims, tuple(ds))


# ---------------------------------------------------------------------------
# Γ


@lru_cache(maxsize=None)
def surjections(n: int) -> tuple[tuple[int, ...], ...]:
    """Monotone surjections ``[n] ->> [k]`` as value tuples, ordered by ``k`` then jump positions."""
    out = []
    for k in range(n + 1):
        for jumps in combinations(range(1, n + 1), k):
            eta, v = [0], 0
            for j in range(1, n + 1):
                if j in jumps:
                    v += 1
                eta.append(v)
            out.append(tuple(eta))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class GammaLayout:
    """Summand offsets of ``Γ(V)_n``: ``summands[n]`` lists ``(η, k, offset)``."""

    dims: tuple[int, ...]
    summands: tuple[tuple[tuple[tuple[int, ...], int, int], ...], ...]
    index: tuple[dict, ...]

    @classmethod
    def of(cls, vdims: Sequence[int]) -> "GammaLayout":
        D = len(vdims) - 1
        summ, index, dims = [], [], []
        for n in range(D + 1):
            row, idx, off = [], {}, 0
            for eta in surjections(n):
                k = eta[-1]
                row.append((eta, k, off))
                idx[eta] = (k, off)
                off += vdims[k]
            summ.append(tuple(row))
            index.append(idx)
            dims.append(off)
        return cls(tuple(dims), tuple(summ), tuple(index))


def _gamma_operator(V: ChainComplex, lay: GammaLayout, theta: tuple[int, ...], n: int) -> Matrix:
    """``θ^* : Γ(V)_n -> Γ(V)_m`` for monotone ``θ : [m] -> [n]``."""
    m = len(theta) - 1
    blocks = []
    for eta, k, off in lay.summands[n]:
        if not V.dims[k]:
            continue
        g = tuple(eta[t] for t in theta)
        S = sorted(set(g))
        pos = {v: i for i, v in enumerate(S)}
        eta2 = tuple(pos[v] for v in g)
        _, off2 = lay.index[m][eta2]
        if len(S) == k + 1:
            blocks.append((off2, off, Matrix.identity(V.field, V.dims[k])))
        elif len(S) == k and S[-1] == k - 1:
            # the mono misses only the last vertex: (-1)^k d_k
            B = V.d[k - 1]
            blocks.append((off2, off, -B if k % 2 else B))
    return _assemble(V.field, lay.dims[m], lay.dims[n], blocks)


def _coface(n: int, i: int) -> tuple[int, ...]:
    return tuple(j if j < i else j + 1 for j in range(n))


def _codegen(n: int, i: int) -> tuple[int, ...]:
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


@dataclass(frozen=True, eq=False)
class GammaObject:
    complex: ChainComplex
    layout: GammaLayout
    space: SimplicialVectorSpace


@lru_cache(maxsize=256)
def gamma_object(V: ChainComplex, check: bool = True) -> GammaObject:
    lay = GammaLayout.of(V.dims)
    faces = [[_gamma_operator(V, lay, _coface(n, i), n) for i in range(n + 1)] for n in range(1, V.D + 1)]
    degens = [[_gamma_operator(V, lay, _codegen(n, i), n) for i in range(n + 1)] for n in range(V.D)]
    return GammaObject(V, lay, SimplicialVectorSpace(V.field, lay.dims, faces, degens, check=check))


def gamma(V: ChainComplex) -> SimplicialVectorSpace:
    """``Γ(V)_n = ⊕_{η:[n]->>[k]} V_k``."""
    return gamma_object(V).space


def gamma_map(f: ChainMap) -> SimplicialMap:
    """``Γ(f)``: ``f_k`` on every summand indexed by a surjection onto ``[k]``."""
    A, B = gamma_object(f.source), gamma_object(f.target)
    mats = []
    for n in range(f.source.D + 1):
        blocks = []
        for (eta, k, off), (_, _, off2) in zip(A.layout.summands[n], B.layout.summands[n]):
            blocks.append((off2, off, f.f[k]))
        mats.append(_assemble(f.field, B.layout.dims[n], A.layout.dims[n], blocks))
    return SimplicialMap(A.space, B.space, tuple(mats), check=False)


# ---------------------------------------------------------------------------
# Natural isomorphisms


def epsilon(V: ChainComplex) -> ChainMap:
    """``ε_V : NΓV -> V``: read off the summand of the identity surjection."""
    G = gamma_object(V)
    NG = normalization(G.space)
    mats = []
    for n in range(V.D + 1):
        eta_id = tuple(range(n + 1))
        _, off = G.layout.index[n][eta_id]
        sel = Matrix.identity(V.field, V.dims[n]).embed(V.dims[n], G.layout.dims[n], col_off=off)
        mats.append(sel @ NG.incl[n])
    return ChainMap(NG.complex, V, tuple(mats))


def epsilon_inverse(V: ChainComplex) -> ChainMap:
    e = epsilon(V)
    return ChainMap(V, e.source, tuple(inverse(m) for m in e.f), check=False)


def phi(X: SimplicialVectorSpace) -> SimplicialMap:
    """``ΓNX -> X``: the summand of ``η : [n] ->> [k]`` maps by ``η^*`` restricted to ``N_k``."""
    NX = normalization(X)
    G = gamma_object(NX.complex)
    mats = []
    for n in range(X.D + 1):
        cols = []
        for eta, k, off in G.layout.summands[n]:
            cols.append((0, off, X.operator_to(eta, k) @ NX.incl[k]))
        mats.append(_assemble(X.field, X.dims[n], G.layout.dims[n], cols))
    return SimplicialMap(G.space, X, tuple(mats))


def eta(X: SimplicialVectorSpace) -> SimplicialMap:
    """``η_X : X -> ΓNX``, the inverse of :func:`phi`."""
    p = phi(X)
    return SimplicialMap(X, p.source, tuple(inverse(m) for m in p.f), check=False)


# ---------------------------------------------------------------------------
# Alexander-Whitney and shuffle


def _front(n: int, p: int) -> tuple[int, ...]:
    return tuple(range(p + 1))


def _back(n: int, q: int) -> tuple[int, ...]:
    return tuple(range(n - q, n + 1))


def aw_component(A: SimplicialVectorSpace, B: SimplicialVectorSpace, n: int, V: Matrix,
                 NA: Normalization | None = None, NB: Normalization | None = None) -> Matrix:
    """Apply the AW formula to columns ``V`` of ``A_n ⊗ B_n`` (assumed normalized).

    Returns coordinates in ``(NA ⊗ NB)_n``.
    """
    NA = NA or normalization(A)
    NB = NB or normalization(B)
    parts = []
    for p in range(n + 1):
        q = n - p
        P = NA.proj[p] @ A.operator_to(_front(n, p), n)
        Q = NB.proj[q] @ B.operator_to(_back(n, q), n)
        parts.append(kron_matmul(P, Q, V))
    return vstack(A.field, parts, ncols=V.ncols)


def alexander_whitney(A: SimplicialVectorSpace, B: SimplicialVectorSpace,
                      M: SimplicialVectorSpace | None = None) -> ChainMap:
    """``AW : N(A ⊗̂ B) -> NA ⊗ NB``."""
    M = M or level_tensor(A, B)
    NM = normalization(M)
    NA, NB = normalization(A), normalization(B)
    tgt = tensor(NA.complex, NB.complex)
    mats = tuple(aw_component(A, B, n, NM.incl[n], NA, NB) for n in range(A.D + 1))
    return ChainMap(NM.complex, tgt, mats)


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """``(μ, ν, sign)`` for all (p,q)-shuffles of ``{0..p+q-1}``; sign of the permutation ``(μ, ν)``."""
    out = []
    for mu in combinations(range(p + q), p):
        ms = set(mu)
        nu = tuple(i for i in range(p + q) if i not in ms)
        inv = sum(1 for a in mu for b in nu if a > b)
        out.append((mu, nu, -1 if inv % 2 else 1))
    return tuple(out)


def _degen_chain(X: SimplicialVectorSpace, start: int, idx: Sequence[int]) -> Matrix:
    """``s_{i_r} ... s_{i_1}`` starting at level ``start`` (``i_1`` applied first)."""
    M = Matrix.identity(X.field, X.dims[start])
    lvl = start
    for i in idx:
        M = X.degen(lvl, i) @ M
        lvl += 1
    return M


def shuffle_raw(A: SimplicialVectorSpace, B: SimplicialVectorSpace, n: int,
                NA: Normalization | None = None, NB: Normalization | None = None) -> Matrix:
    """``(NA ⊗ NB)_n -> A_n ⊗ B_n``: ``Σ sign(μ,ν) s_ν a ⊗ s_μ b`` on each ``(p, q)`` summand."""
    F = A.field
    NA = NA or normalization(A)
    NB = NB or normalization(B)
    dA, dB = NA.complex.dims, NB.complex.dims
    cols = []
    for p, off, size in tensor_layout(dA, dB, n):
        q = n - p
        acc = Matrix.zeros(F, A.dims[n] * B.dims[n], size)
        if size:
            for mu, nu, sgn in shuffles(p, q):
                a = _degen_chain(A, p, nu) @ NA.incl[p]
                b = _degen_chain(B, q, mu) @ NB.incl[q]
                t = kron(a, b)
                acc = acc - t if sgn < 0 else acc + t
        cols.append(acc)
    from .exactlinalg import hstack

    return hstack(F, cols, nrows=A.dims[n] * B.dims[n])


def shuffle(A: SimplicialVectorSpace, B: SimplicialVectorSpace,
            M: SimplicialVectorSpace | None = None) -> ChainMap:
    """``∇ : NA ⊗ NB -> N(A ⊗̂ B)``."""
    M = M or level_tensor(A, B)
    NM = normalization(M)
    NA, NB = normalization(A), normalization(B)
    src = tensor(NA.complex, NB.complex)
    mats = tuple(NM.proj[n] @ shuffle_raw(A, B, n, NA, NB) for n in range(A.D + 1))
    return ChainMap(src, NM.complex, mats)


# ---------------------------------------------------------------------------
# ψ


@dataclass(frozen=True, eq=False)
class Psi:
    """``ψ_{X,Y} : Γ(X ⊗ Y) -> ΓX ⊗̂ ΓY`` as level matrices (target kept implicit)."""

    X: ChainComplex
    Y: ChainComplex
    source: GammaObject
    GX: GammaObject
    GY: GammaObject
    f: tuple[Matrix, ...]

    def as_map(self, check: bool = True) -> SimplicialMap:
        tgt = level_tensor(self.GX.space, self.GY.space, check=check)
        return SimplicialMap(self.source.space, tgt, self.f, check=check)


def psi(X: ChainComplex, Y: ChainComplex) -> Psi:
    """``η^{-1}_{ΓX⊗̂ΓY} ∘ Γ(∇_{ΓX,ΓY}) ∘ Γ(ε_X^{-1} ⊗ ε_Y^{-1})``.

    ``η^{-1}`` is evaluated as ``ΓN(M) -> M`` on each summand, and ``∇`` is composed with
    the inclusion of ``N(M)`` so ``M = ΓX ⊗̂ ΓY`` never has to be normalized.
    """
    F = X.field
    GX, GY = gamma_object(X), gamma_object(Y)
    NX, NY = normalization(GX.space), normalization(GY.space)
    XY = tensor(X, Y)
    src = gamma_object(XY)
    eiX, eiY = epsilon_inverse(X), epsilon_inverse(Y)
    # (ε^{-1} ⊗ ε^{-1})_k followed by ∇_k, landing in (ΓX ⊗̂ ΓY)_k
    nab = []
    for k in range(X.D + 1):
        blocks = []
        lay_t = {p: off for p, off, _ in tensor_layout(NX.complex.dims, NY.complex.dims, k)}
        for p, off, _ in tensor_layout(X.dims, Y.dims, k):
            blocks.append((lay_t[p], off, kron(eiX.f[p], eiY.f[k - p])))
        e = _assemble(F, tensor_layout_dim(NX.complex.dims, NY.complex.dims, k), XY.dims[k], blocks)
        nab.append(shuffle_raw(GX.space, GY.space, k, NX, NY) @ e)
    mats = []
    for n in range(X.D + 1):
        cols = []
        for eta_, k, off in src.layout.summands[n]:
            if not XY.dims[k]:
                continue
            a = GX.space.operator_to(eta_, k)
            b = GY.space.operator_to(eta_, k)
            cols.append((0, off, kron_matmul(a, b, nab[k])))
        mats.append(_assemble(F, GX.layout.dims[n] * GY.layout.dims[n], src.layout.dims[n], cols))
    return Psi(X, Y, src, GX, GY, tuple(mats))


def tensor_layout_dim(dx, dy, n) -> int:
    return sum(s for _, _, s in tensor_layout(dx, dy, n))
