"""Connected differential graded algebras, degreewise duality, and word algebras
(tensor algebras, free products, relative tensor algebras)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from ..chain import ChainComplex, tensor, tensor_layout
from ..coalg import DGCoalgebra
from ..exactlinalg import FieldSpec, Matrix, kron
from .words import Accumulator, WordBasis, identity_kron, koszul_differential, tensor_square_offsets


class AlgebraAxiomError(ValueError):
    pass


class ConnectivityError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ConnectedDGAlgebra:
    """A connected algebra ``A`` with ``A_0 = K``.

    ``cohomological`` algebras (duals of coalgebras) have differentials raising degree:
    ``d[n-1] : A_{n-1} -> A_n``.  Otherwise ``d[n-1] = d_n : A_n -> A_{n-1}``.
    """

    field: FieldSpec
    dims: tuple[int, ...]
    d: tuple[Matrix, ...]
    mult: tuple[Matrix, ...]  # M_n : (A ⊗ A)_n -> A_n
    unit: Matrix  # K -> A_0
    cohomological: bool = False
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "mult", tuple(self.mult))
        if self.dims[0] != 1 or self.unit.shape != (1, 1) or self.unit.is_zero():
            raise ConnectivityError("a connected algebra has A_0 = K with a nonzero unit")
        for n, m in enumerate(self.mult):
            want = (self.dims[n], sum(s for _, _, s in tensor_layout(self.dims, self.dims, n)))
            if m.shape != want:
                raise AlgebraAxiomError(f"M_{n} has shape {m.shape}, expected {want}")
        if self.check:
            bad = algebra_axiom_failures(self)
            if bad:
                raise AlgebraAxiomError("; ".join(f"{e} fails in degree {n}" for e, n in bad))

    @property
    def D(self) -> int:
        return len(self.dims) - 1

    def predual(self) -> ChainComplex:
        """The chain complex whose degreewise dual carries this algebra's differential."""
        if self.cohomological:
            return ChainComplex(self.field, self.dims, tuple(m.T for m in self.d))
        raise AlgebraAxiomError("predual only exists for cohomological algebras")

    def chain_carrier(self) -> ChainComplex:
        if self.cohomological:
            raise AlgebraAxiomError("cohomological algebra has no chain carrier")
        return ChainComplex(self.field, self.dims, self.d)

    def mult_block(self, p: int, q: int) -> Matrix:
        n = p + q
        off = tensor_square_offsets(self.dims, n)[p]
        return self.mult[n].col_block(off, off + self.dims[p] * self.dims[q])

    def tensor_differential(self, n: int) -> Matrix:
        """Differential of ``A ⊗ A`` leaving degree ``n`` in this algebra's direction."""
        if self.cohomological:
            return tensor(self.predual(), self.predual()).d[n].T  # (A⊗A)_n -> (A⊗A)_{n+1}
        return tensor(self.chain_carrier(), self.chain_carrier()).d[n - 1]

    def __repr__(self):
        kind = "cochain" if self.cohomological else "chain"
        return f"ConnectedDGAlgebra({kind}, dims={self.dims})"


def algebra_axiom_failures(A: ConnectedDGAlgebra) -> list[tuple[str, int]]:
    F, dims = A.field, A.dims
    out: list[tuple[str, int]] = []

    def fail(e, n):
        if not any(x == e for x, _ in out):
            out.append((e, n))

    for k in range(len(A.d) - 1):
        sq = A.d[k + 1] @ A.d[k] if A.cohomological else A.d[k] @ A.d[k + 1]
        if not sq.is_zero():
            fail("d² = 0", k + 2)
    if A.D >= 1 and not A.d[0].is_zero():
        fail("augmentation is a chain map", 1)
    for n in range(A.D + 1):
        for p in range(n + 1):
            for q in range(n - p + 1):
                r = n - p - q
                lhs = A.mult_block(p + q, r) @ kron(A.mult_block(p, q), Matrix.identity(F, dims[r]))
                rhs = A.mult_block(p, q + r) @ kron(Matrix.identity(F, dims[p]), A.mult_block(q, r))
                if lhs != rhs:
                    fail("associativity", n)
        I = Matrix.identity(F, dims[n])
        if A.mult_block(0, n) @ kron(A.unit, I) != I or A.mult_block(n, 0) @ kron(I, A.unit) != I:
            fail("unit", n)
    T = None
    for n in range(1, A.D + 1):
        if A.cohomological:
            T = T or tensor(A.predual(), A.predual())
            # d M = M d_{A⊗A} from degree n-1 to n
            if A.d[n - 1] @ A.mult[n - 1] != A.mult[n] @ T.d[n - 1].T:
                fail("Leibniz rule", n)
        else:
            T = T or tensor(A.chain_carrier(), A.chain_carrier())
            if A.d[n - 1] @ A.mult[n] != A.mult[n - 1] @ T.d[n - 1]:
                fail("Leibniz rule", n)
    return out


@dataclass(frozen=True, eq=False)
class AlgebraMap:
    source: ConnectedDGAlgebra
    target: ConnectedDGAlgebra
    f: tuple[Matrix, ...]


def algebra_map_failure(g: AlgebraMap) -> str | None:
    S, T, f = g.source, g.target, g.f
    for n in range(S.D + 1):
        blocks = []
        for p in range(n + 1):
            blocks.append(kron(f[p], f[n - p]))
        from ..exactlinalg import block_diag

        ff = block_diag(S.field, blocks)
        if T.mult[n] @ ff != f[n] @ S.mult[n]:
            return f"multiplicativity in degree {n}"
    if f[0] @ S.unit != T.unit:
        return "unit"
    for n in range(1, S.D + 1):
        if S.cohomological:
            if T.d[n - 1] @ f[n - 1] != f[n] @ S.d[n - 1]:
                return f"differential in degree {n}"
        elif T.d[n - 1] @ f[n] != f[n - 1] @ S.d[n - 1]:
            return f"differential in degree {n}"
    return None


# ---------------------------------------------------------------------------
# Duality


def dual_algebra(C: DGCoalgebra) -> ConnectedDGAlgebra:
    """Degreewise dual: ``M = Δ^T``, unit ``ε^T``, differential ``d^T`` (raising degree)."""
    if C.dims[0] != 1:
        raise ConnectivityError("dual_algebra needs a connected coalgebra")
    return ConnectedDGAlgebra(C.field, C.dims, tuple(m.T for m in C.carrier.d),
                              tuple(m.T for m in C.comult), C.counit.T, cohomological=True)


def dual_coalgebra(A: ConnectedDGAlgebra) -> DGCoalgebra:
    if not A.cohomological and any(not m.is_zero() for m in A.d):
        raise AlgebraAxiomError("only cochain algebras (or algebras with d = 0) dualize to chain coalgebras")
    carrier = ChainComplex(A.field, A.dims, tuple(m.T for m in A.d))
    return DGCoalgebra(carrier, tuple(m.T for m in A.mult), A.unit.T)


# ---------------------------------------------------------------------------
# Word algebras


def _pattern_lookup(basis: WordBasis) -> dict[tuple[int, ...], int]:
    return {p: i for i, p in enumerate(basis.patterns)}


def word_multiplication(field: FieldSpec, basis: WordBasis, merge: dict[int, ConnectedDGAlgebra], n: int) -> Matrix:
    """Concatenation of words; adjacent letters of a factor listed in ``merge`` are multiplied."""
    dims = basis.dims
    look = _pattern_lookup(basis)
    offs = tensor_square_offsets(dims, n)
    acc = Accumulator(field, dims[n], sum(dims[p] * dims[n - p] for p in range(n + 1)))
    for p in range(n + 1):
        q = n - p
        for bx in basis.blocks[p]:
            px = basis.patterns[bx.pattern]
            for by in basis.blocks[q]:
                py = basis.patterns[by.pattern]
                if not bx.size or not by.size:
                    continue
                col0 = offs[p]
                Sy = by.size

                def cmap(c, bx=bx, by=by, Sy=Sy, col0=col0, dq=dims[q]):
                    ix, iy = divmod(c, Sy)
                    return col0 + (bx.offset + ix) * dq + by.offset + iy

                if px and py and px[-1] == py[0] and px[-1] in merge:
                    f = px[-1]
                    e1, e2 = bx.degs[-1], by.degs[0]
                    pat = px + py[1:]
                    degs = bx.degs[:-1] + (e1 + e2,) + by.degs[1:]
                    if pat not in look:
                        continue
                    tb = basis.block(n, look[pat], degs)
                    if tb is None:
                        continue
                    front = bx.size // basis.factor_dims[f][e1]
                    back = by.size // basis.factor_dims[f][e2]
                    M = identity_kron(field, front, merge[f].mult_block(e1, e2), back)
                    acc.add_block(M, tb.offset, cmap)
                else:
                    pat = px + py
                    if pat not in look:
                        continue
                    tb = basis.block(n, look[pat], bx.degs + by.degs)
                    if tb is None:
                        continue
                    for c in range(bx.size * by.size):
                        acc.add(tb.offset + c, cmap(c), 1)
    return acc.matrix()


def _word_differential(field, basis: WordBasis, factor_chain_d, cohomological: bool) -> tuple[Matrix, ...]:
    ds = tuple(koszul_differential(field, basis, factor_chain_d, n) for n in range(1, basis.D + 1))
    return tuple(m.T for m in ds) if cohomological else ds


def _chain_diffs(C: ChainComplex) -> list[Matrix | None]:
    return [None] + list(C.d)


def _reduced(dims: Sequence[int]) -> tuple[int, ...]:
    return (0,) + tuple(dims[1:])


def tensor_algebra_basis(vdims: Sequence[int], D: int) -> WordBasis:
    return WordBasis([vdims], [(0,) * w for w in range(D + 1)], D)


def tensor_algebra(V: ChainComplex) -> ConnectedDGAlgebra:
    """``T_d(V) = ⊕ V^{⊗n}`` with concatenation."""
    if not V.is_connected:
        raise ConnectivityError("T_d needs a connected complex (V_0 = 0)")
    F, D = V.field, V.D
    B = tensor_algebra_basis(V.dims, D)
    mult = tuple(word_multiplication(F, B, {}, n) for n in range(D + 1))
    d = _word_differential(F, B, [_chain_diffs(V)], False)
    return ConnectedDGAlgebra(F, B.dims, d, mult, Matrix.identity(F, 1))


def augmentation_ideal(A: ConnectedDGAlgebra) -> ChainComplex:
    """``I_d(A) = ker γ_A``: the positive-degree part."""
    if A.cohomological:
        raise AlgebraAxiomError("augmentation ideal is defined here for chain algebras")
    dims = _reduced(A.dims)
    d = [Matrix.zeros(A.field, 0, dims[1])] + list(A.d[1:]) if A.D >= 1 else []
    return ChainComplex(A.field, dims, tuple(d))


def algebra_product(A: ConnectedDGAlgebra, B: ConnectedDGAlgebra) -> tuple[ConnectedDGAlgebra, AlgebraMap, AlgebraMap]:
    """``A ⊓ B = ker(γ_A π_A - γ_B π_B)``: ``K`` in degree 0 and ``A_n ⊕ B_n`` above."""
    from ..exactlinalg import block_diag, vstack

    if A.cohomological != B.cohomological:
        raise AlgebraAxiomError("mixed gradings")
    F, D = A.field, A.D
    dims = (1,) + tuple(A.dims[n] + B.dims[n] for n in range(1, D + 1))
    d = []
    for n in range(1, D + 1):
        if n == 1:
            d.append(Matrix.zeros(F, *((dims[1], 1) if A.cohomological else (1, dims[1]))))
        else:
            d.append(block_diag(F, [A.d[n - 1], B.d[n - 1]]))
    ua, ub = A.unit[0, 0], B.unit[0, 0]
    pa, pb = [Matrix.from_dense(F, [[ua]])], [Matrix.from_dense(F, [[ub]])]
    for n in range(1, D + 1):
        I = Matrix.identity(F, dims[n])
        pa.append(I.row_block(0, A.dims[n]))
        pb.append(I.row_block(A.dims[n], dims[n]))
    mult = [Matrix.identity(F, 1)]
    for n in range(1, D + 1):
        ta = block_diag(F, [kron(pa[p], pa[n - p]) for p in range(n + 1)])
        tb = block_diag(F, [kron(pb[p], pb[n - p]) for p in range(n + 1)])
        mult.append(vstack(F, [A.mult[n] @ ta, B.mult[n] @ tb]))
    P = ConnectedDGAlgebra(F, dims, tuple(d), tuple(mult), Matrix.identity(F, 1), A.cohomological)
    return P, AlgebraMap(P, A, tuple(pa)), AlgebraMap(P, B, tuple(pb))


def free_product_basis(adims: Sequence[int], bdims: Sequence[int], D: int) -> WordBasis:
    pats = [()]
    for w in range(1, D + 1):
        for first in (0, 1):
            pats.append(tuple((first + i) % 2 for i in range(w)))
    return WordBasis([_reduced(adims), _reduced(bdims)], pats, D)


def algebra_coproduct(A: ConnectedDGAlgebra, B: ConnectedDGAlgebra) -> tuple[ConnectedDGAlgebra, AlgebraMap, AlgebraMap]:
    """The free product ``A ⊔ B``: alternating words in ``Ā`` and ``B̄``, merged by the factor products."""
    if A.cohomological != B.cohomological:
        raise AlgebraAxiomError("mixed gradings")
    F, D = A.field, A.D
    W = free_product_basis(A.dims, B.dims, D)
    mult = tuple(word_multiplication(F, W, {0: A, 1: B}, n) for n in range(D + 1))
    if A.cohomological:
        fa, fb = A.predual(), B.predual()
    else:
        fa, fb = A.chain_carrier(), B.chain_carrier()
    d = _word_differential(F, W, [_chain_diffs(fa), _chain_diffs(fb)], A.cohomological)
    P = ConnectedDGAlgebra(F, W.dims, d, mult, Matrix.identity(F, 1), A.cohomological)
    inc = []
    for which, X in ((0, A), (1, B)):
        mats = [Matrix.from_dense(F, [[F.inv(X.unit[0, 0])]])]
        for n in range(1, D + 1):
            b = W.block(n, W.patterns.index((which,)), (n,))
            mats.append(Matrix.identity(F, X.dims[n]).embed(W.dims[n], X.dims[n], row_off=b.offset)
                        if b is not None else Matrix.zeros(F, W.dims[n], X.dims[n]))
        inc.append(AlgebraMap(X, P, tuple(mats)))
    return P, inc[0], inc[1]


def relative_tensor_basis(adims: Sequence[int], vdims: Sequence[int], D: int) -> WordBasis:
    """Words ``a_0 w_1 a_1 … w_k a_k``; factor 0 is ``A``, factor 1 is ``V``."""
    pats = []
    for k in range(D + 1):
        pats.append(tuple([0] + [1, 0] * k))
    return WordBasis([tuple(adims), _reduced(vdims)], pats, D)


def relative_tensor_algebra(A: ConnectedDGAlgebra, V: ChainComplex) -> tuple[ConnectedDGAlgebra, WordBasis]:
    """``T_A(A ⊗ V* ⊗ A)`` for a cochain algebra ``A`` and the dual of a connected complex ``V``."""
    if not A.cohomological:
        raise AlgebraAxiomError("relative tensor algebra is built on the dual (cochain) side")
    if not V.is_connected:
        raise ConnectivityError("V must be connected")
    F, D = A.field, A.D
    W = relative_tensor_basis(A.dims, V.dims, D)
    mult = tuple(word_multiplication(F, W, {0: A}, n) for n in range(D + 1))
    d = _word_differential(F, W, [_chain_diffs(A.predual()), _chain_diffs(V)], True)
    unit = A.unit  # degree 0 is the single block a_0 ∈ A_0
    return ConnectedDGAlgebra(F, W.dims, d, mult, unit, True), W


def hilbert_inverse(dims: Sequence[int], D: int) -> list:
    """Coefficients of ``1 / H(t)`` up to ``t^D`` for ``H(0) = 1``."""
    inv = [0] * (D + 1)
    inv[0] = 1
    for n in range(1, D + 1):
        inv[n] = -sum(dims[k] * inv[n - k] for k in range(1, n + 1))
    return inv


def free_product_dims(adims: Sequence[int], bdims: Sequence[int], D: int) -> list[int]:
    """Dimensions of ``A ⊔ B`` from ``1/H = 1/H_A + 1/H_B - 1`` (independent of the word basis)."""
    ia, ib = hilbert_inverse(adims, D), hilbert_inverse(bdims, D)
    h = [ia[n] + ib[n] for n in range(D + 1)]
    h[0] -= 1
    return hilbert_inverse(h, D)
