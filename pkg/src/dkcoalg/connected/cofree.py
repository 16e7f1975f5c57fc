"""``C ⊓ T′_d(V)``: the product of a connected coalgebra with a cofree one, computed as the
degreewise dual of the relative tensor algebra ``T_{C*}(C* ⊗ V* ⊗ C*)``."""

from __future__ import annotations

from dataclasses import dataclass

from ..chain import ChainComplex, ChainMap
from ..coalg import DGCoalgebra, DGCoalgebraMap
from ..exactlinalg import Matrix
from .algebras import (
    ConnectedDGAlgebra,
    algebra_coproduct,
    dual_algebra,
    dual_coalgebra,
    relative_tensor_algebra,
    tensor_algebra,
)
from .tensor import (
    IteratedComult,
    require_connected_coalgebra,
    require_connected_complex,
    tensor_coalgebra_object,
)
from .words import Accumulator, WordBasis


def dual_complex(V: ChainComplex) -> ChainComplex:
    """``V`` read as the predual of ``V*``: same dims and matrices (transposition is implicit)."""
    return V


@dataclass(frozen=True, eq=False)
class CofreeProduct:
    C: DGCoalgebra
    V: ChainComplex
    algebra: ConnectedDGAlgebra  # T_{C*}(C* ⊗ V* ⊗ C*)
    basis: WordBasis
    coalgebra: DGCoalgebra
    to_C: DGCoalgebraMap
    to_cofree: DGCoalgebraMap

    def mediating(self, a: DGCoalgebraMap, u: ChainMap | list[Matrix], check: bool = True) -> DGCoalgebraMap:
        """The map ``X -> C ⊓ T′_d(V)`` from ``a : X -> C`` and a chain map ``u : I′_d(X) -> V``.

        On words ``c_0 v_1 c_1 … v_k c_k`` it is ``(a ⊗ u ⊗ a ⊗ … ⊗ a) ∘ Δ^{(2k+1)}``.
        """
        X = a.source
        F = X.field
        ua = list(u.f) if isinstance(u, ChainMap) else list(u)
        red = [None] + ua[1:]
        amaps = list(a.f)
        it = IteratedComult(X)
        mats = []
        for n in range(X.D + 1):
            acc = Accumulator(F, self.coalgebra.dims[n], X.dims[n])
            by_pat: dict[int, dict] = {}
            for b in self.basis.blocks[n]:
                pat = self.basis.patterns[b.pattern]
                if b.pattern not in by_pat:
                    maps = [amaps if f == 0 else red for f in pat]
                    by_pat[b.pattern] = it.apply(maps, n)
                M = by_pat[b.pattern].get(b.degs)
                if M is not None:
                    acc.add_block(M, b.offset, 0)
            mats.append(acc.matrix())
        f = ChainMap(X.carrier, self.coalgebra.carrier, tuple(mats), check=check)
        return DGCoalgebraMap(X, self.coalgebra, f, check=check)


def product_with_cofree(C: DGCoalgebra, V: ChainComplex) -> CofreeProduct:
    require_connected_coalgebra(C)
    require_connected_complex(V)
    F, D = C.field, C.D
    A = dual_algebra(C)
    R, W = relative_tensor_algebra(A, dual_complex(V))
    P = dual_coalgebra(R)
    # C* -> R: the words of length zero; dual is the projection to C
    incl = []
    for n in range(D + 1):
        b = W.block(n, 0, (n,))
        off = b.offset if b is not None else 0
        incl.append(Matrix.identity(F, C.dims[n]).embed(W.dims[n], C.dims[n], row_off=off))
    to_C = DGCoalgebraMap(P, C, ChainMap(P.carrier, C.carrier, tuple(m.T for m in incl)))
    # T_d(V*) -> R: w_1 … w_k -> 1 w_1 1 … w_k 1, dual is the projection to T′_d(V)
    T = tensor_coalgebra_object(V)
    e = A.unit[0, 0]
    mats = []
    for n in range(D + 1):
        acc = Accumulator(F, W.dims[n], T.dims[n])
        for b in T.basis.blocks[n]:
            k = len(b.degs)
            degs = [0]
            for x in b.degs:
                degs += [x, 0]
            tb = W.block(n, k, tuple(degs))
            coef = e ** (k + 1) if F.mod is None else pow(int(e), k + 1, F.mod)
            for i in range(b.size):
                acc.add(tb.offset + i, b.offset + i, coef)
        mats.append(acc.matrix())
    to_cofree = DGCoalgebraMap(P, T.coalgebra, ChainMap(P.carrier, T.coalgebra.carrier, tuple(m.T for m in mats)))
    return CofreeProduct(C, V, R, W, P, to_C, to_cofree)


def iso_chain_dims(C: DGCoalgebra, V: ChainComplex) -> dict[str, tuple[int, ...]]:
    """Dimensions along ``[C ⊓ T′_d(V)]* ≅ C* ⊔ [T′_d(V)]* ≅ C* ⊔ T_d(V*) ≅ T_{C*}(C* ⊗ V* ⊗ C*)``."""
    from .algebras import free_product_dims

    A = dual_algebra(C)
    Tdual = dual_algebra(tensor_coalgebra_object(V).coalgebra)
    fp1, _, _ = algebra_coproduct(A, Tdual)
    R, _ = relative_tensor_algebra(A, V)
    return {
        "product": product_with_cofree(C, V).coalgebra.dims,
        "coproduct_with_dual_cofree": fp1.dims,
        "coproduct_with_tensor_algebra": tuple(free_product_dims(A.dims, tensor_algebra(V).dims, C.D)),
        "relative_tensor_algebra": R.dims,
    }
