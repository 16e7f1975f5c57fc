"""The cofree connected coalgebra ``T′_d(V)``, the coaugmentation quotient ``I′_d``,
and maps into cofree objects."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Sequence

from ..chain import ChainComplex, ChainMap, is_weak_equivalence
from ..coalg import DGCoalgebra, DGCoalgebraMap
from ..exactlinalg import FieldSpec, Matrix, kron_matmul
from .algebras import ConnectivityError, _chain_diffs, tensor_algebra_basis
from .words import Accumulator, WordBasis, koszul_differential, tensor_square_offsets


def require_connected_complex(V: ChainComplex):
    if not V.is_connected:
        raise ConnectivityError("expected a connected complex (degree 0 is zero)")


def require_connected_coalgebra(C: DGCoalgebra):
    if C.dims[0] != 1 or C.counit.is_zero():
        raise ConnectivityError("expected a connected coalgebra (C_0 = K)")


def deconcatenation(field: FieldSpec, basis: WordBasis, n: int) -> Matrix:
    """``Δ(v_1…v_w) = Σ_r (v_1…v_r) ⊗ (v_{r+1}…v_w)`` on a single-factor word basis."""
    dims = basis.dims
    offs = tensor_square_offsets(dims, n)
    acc = Accumulator(field, sum(dims[p] * dims[n - p] for p in range(n + 1)), dims[n])
    for b in basis.blocks[n]:
        w = len(basis.patterns[b.pattern])
        sizes = basis.block_sizes(basis.patterns[b.pattern], b.degs)
        for r in range(w + 1):
            ld, rd = b.degs[:r], b.degs[r:]
            p = sum(ld)
            bl = basis.block(p, r, ld)
            br = basis.block(n - p, w - r, rd)
            SR = prod(sizes[r:])
            base, dq = offs[p], dims[n - p]
            for idx in range(b.size):
                l, rho = divmod(idx, SR)
                acc.add(base + (bl.offset + l) * dq + br.offset + rho, b.offset + idx, 1)
    return acc.matrix()


@dataclass(frozen=True, eq=False)
class TensorCoalgebra:
    """``T′_d(V)`` together with its word basis."""

    V: ChainComplex
    basis: WordBasis
    coalgebra: DGCoalgebra

    @property
    def dims(self):
        return self.coalgebra.dims


@lru_cache(maxsize=128)
def tensor_coalgebra_object(V: ChainComplex) -> TensorCoalgebra:
    require_connected_complex(V)
    F, D = V.field, V.D
    B = tensor_algebra_basis(V.dims, D)
    d = tuple(koszul_differential(F, B, [_chain_diffs(V)], n) for n in range(1, D + 1))
    carrier = ChainComplex(F, B.dims, d)
    comult = tuple(deconcatenation(F, B, n) for n in range(D + 1))
    counit = Matrix.identity(F, 1)
    return TensorCoalgebra(V, B, DGCoalgebra(carrier, comult, counit))


def tensor_coalgebra(V: ChainComplex) -> DGCoalgebra:
    """``T′_d(V) = ⊕_w V^{⊗w}`` with deconcatenation and ``ε(1) = 1``."""
    return tensor_coalgebra_object(V).coalgebra


def word_length_projection(V: ChainComplex, w: int = 1) -> ChainMap:
    """``T′_d(V) -> V^{⊗w}`` restricted to ``w = 1``: the projection onto ``V``."""
    T = tensor_coalgebra_object(V)
    F = V.field
    mats = []
    for n in range(V.D + 1):
        b = T.basis.block(n, 1, (n,)) if n >= 1 else None
        if b is None:
            mats.append(Matrix.zeros(F, V.dims[n], T.dims[n]))
        else:
            mats.append(Matrix.identity(F, V.dims[n]).embed(V.dims[n], T.dims[n], col_off=b.offset))
    return ChainMap(T.coalgebra.carrier, V, tuple(mats), check=False)


# ---------------------------------------------------------------------------
# I′_d


def coaugmentation_quotient(C: DGCoalgebra) -> ChainComplex:
    """``I′_d(C) = C / K[0]``: degree 0 becomes 0."""
    require_connected_coalgebra(C)
    X = C.carrier
    dims = (0,) + X.dims[1:]
    d = tuple([Matrix.zeros(C.field, 0, dims[1])] + list(X.d[1:])) if X.D else ()
    return ChainComplex(C.field, dims, d)


def coaugmentation_projection(C: DGCoalgebra, target: ChainComplex | None = None) -> ChainMap:
    Q = target or coaugmentation_quotient(C)
    F = C.field
    mats = [Matrix.zeros(F, 0, C.dims[0])] + [Matrix.identity(F, k) for k in C.dims[1:]]
    return ChainMap(C.carrier, Q, tuple(mats), check=False)


# ---------------------------------------------------------------------------
# Iterated comultiplication


class IteratedComult:
    """Evaluates ``(g_1 ⊗ … ⊗ g_m) ∘ Δ^{(m)}`` on a coalgebra, degree by degree.

    Each ``g_i`` is given as a list of matrices indexed by degree (``None`` or a zero-row
    matrix for degrees where it vanishes).  The result is a dict keyed by the tuple of
    degrees of the tensor factors.
    """

    def __init__(self, C: DGCoalgebra):
        self.C = C
        self._blocks: dict[tuple[int, int], Matrix] = {}

    def block(self, n: int, p: int) -> Matrix:
        key = (n, p)
        if key not in self._blocks:
            self._blocks[key] = self.C.block(n, p)
        return self._blocks[key]

    def apply(self, maps: Sequence[Sequence[Matrix | None]], n: int) -> dict[tuple[int, ...], Matrix]:
        memo: dict = {}
        return self._rec(tuple(range(len(maps))), maps, n, memo)

    def _rec(self, idx, maps, n, memo):
        key = (idx, n)
        if key in memo:
            return memo[key]
        C = self.C
        out: dict[tuple[int, ...], Matrix] = {}
        if not idx:
            if n == 0:
                out[()] = C.counit
        elif len(idx) == 1:
            g = maps[idx[0]][n]
            if g is not None and g.nrows:
                out[(n,)] = g
        else:
            g_all = maps[idx[0]]
            for p in range(n + 1):
                g = g_all[p]
                if g is None or not g.nrows:
                    continue
                rest = self._rec(idx[1:], maps, n - p, memo)
                if not rest:
                    continue
                Dp = self.block(n, p)
                for degs, M in rest.items():
                    out[(p,) + degs] = kron_matmul(g, M, Dp)
        memo[key] = out
        return out


def _reduced_map(u: ChainMap | Sequence[Matrix]) -> list[Matrix | None]:
    mats = list(u.f) if isinstance(u, ChainMap) else list(u)
    return [None] + mats[1:]


def map_into_cofree(C: DGCoalgebra, u: ChainMap | Sequence[Matrix], V: ChainComplex,
                    check: bool = True) -> DGCoalgebraMap:
    """The coalgebra map ``C -> T′_d(V)`` adjoint to a chain map ``u : I′_d(C) -> V``.

    Component on words of shape ``(e_1, …, e_k)`` is ``(u ⊗ … ⊗ u) ∘ Δ^{(k)}``.
    """
    require_connected_coalgebra(C)
    T = tensor_coalgebra_object(V)
    F = C.field
    red = _reduced_map(u)
    it = IteratedComult(C)
    mats = []
    for n in range(C.D + 1):
        acc = Accumulator(F, T.dims[n], C.dims[n])
        by_len: dict[int, dict] = {}
        for b in T.basis.blocks[n]:
            w = len(T.basis.patterns[b.pattern])
            if w not in by_len:
                by_len[w] = it.apply([red] * w, n)
            M = by_len[w].get(b.degs)
            if M is not None:
                acc.add_block(M, b.offset, 0)
        mats.append(acc.matrix())
    f = ChainMap(C.carrier, T.coalgebra.carrier, tuple(mats), check=check)
    return DGCoalgebraMap(C, T.coalgebra, f, check=check)


def cofree_adjoint(g: DGCoalgebraMap, V: ChainComplex) -> ChainMap:
    """The chain map ``I′_d(C) -> V`` corresponding to a coalgebra map ``C -> T′_d(V)``."""
    p = word_length_projection(V)
    Q = coaugmentation_quotient(g.source)
    mats = [Matrix.zeros(V.field, V.dims[0], 0)] + [p.f[n] @ g.f[n] for n in range(1, V.D + 1)]
    return ChainMap(Q, V, tuple(mats))


def tensor_coalgebra_map(phi: ChainMap) -> DGCoalgebraMap:
    """``T′_d(φ)``: ``v_1…v_k -> φ(v_1)…φ(v_k)``."""
    S = tensor_coalgebra_object(phi.source)
    u = phi @ word_length_projection(phi.source)
    return map_into_cofree(S.coalgebra, u, phi.target)


def is_cofibration_connected(f: ChainMap) -> bool:
    """Cofibrations of connected coalgebras: injective in degrees ``>= 1``."""
    from ..exactlinalg import is_injective

    return all(is_injective(m) for m in f.f[1:])


def is_weq(f: ChainMap) -> bool:
    return is_weak_equivalence(f)
