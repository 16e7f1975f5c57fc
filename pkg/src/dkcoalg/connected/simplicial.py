"""The simplicial tensor coalgebra ``T′_s`` (with a word-length cap), ``I′_s``, and
hom-set counts for the ``I′ ⊣ T′`` adjunctions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from ..chain import ChainComplex, chain_map_space
from ..coalg import CoalgebraAxiomError, DGCoalgebra, SimplicialCoalgebra, is_simplicial_coalgebra_map
from ..exactlinalg import FieldError, Matrix, Term, block_diag, kernel_basis, left_inverse, solution_space
from ..simplicial import SimplicialMap, SimplicialVectorSpace
from .algebras import ConnectivityError
from .colimits import splitting_vector
from .words import Accumulator


def _power(M: Matrix, w: int) -> Matrix:
    from ..exactlinalg import kron

    out = Matrix.identity(M.field, 1)
    for _ in range(w):
        out = kron(out, M)
    return out


@dataclass(frozen=True, eq=False)
class SimplicialTensorCoalgebra:
    """``T′_s(W)`` with words of length ``<= cap``; ``offsets[n][w]`` locates the ``W_n^{⊗w}`` block."""

    W: SimplicialVectorSpace
    cap: int
    offsets: tuple[tuple[int, ...], ...]
    coalgebra: SimplicialCoalgebra

    @property
    def dims(self):
        return self.coalgebra.dims

    def block(self, n: int, w: int) -> tuple[int, int]:
        m = self.W.dims[n] ** w
        return self.offsets[n][w], m


def _deconcatenation_level(F, m: int, cap: int, offs: list[int], dim: int) -> Matrix:
    acc = Accumulator(F, dim * dim, dim)
    for w in range(cap + 1):
        size = m ** w
        for r in range(w + 1):
            SR = m ** (w - r)
            for idx in range(size):
                l, rho = divmod(idx, SR)
                acc.add((offs[r] + l) * dim + offs[w - r] + rho, offs[w] + idx, 1)
    return acc.matrix()


def simplicial_tensor_coalgebra(W: SimplicialVectorSpace, cap: int | None = None,
                                check: bool = True) -> SimplicialTensorCoalgebra:
    """Levelwise tensor coalgebra on ``W_n``, words of length ``<= cap`` (default ``D``)."""
    if W.dims[0] != 0:
        raise ConnectivityError("T′_s needs a connected simplicial vector space (W_0 = 0)")
    F, D = W.field, W.D
    L = D if cap is None else cap
    offsets, dims = [], []
    for n in range(D + 1):
        m = W.dims[n]
        offs, o = [], 0
        for w in range(L + 1):
            offs.append(o)
            o += m ** w
        offsets.append(tuple(offs))
        dims.append(o)

    faces = [[block_diag(F, [_power(W.face(n, i), w) for w in range(L + 1)]) for i in range(n + 1)]
             for n in range(1, D + 1)]
    degens = [[block_diag(F, [_power(W.degen(n, i), w) for w in range(L + 1)]) for i in range(n + 1)]
              for n in range(D)]
    X = SimplicialVectorSpace(F, tuple(dims), faces, degens, check=check)
    comult = tuple(_deconcatenation_level(F, W.dims[n], L, list(offsets[n]), dims[n]) for n in range(D + 1))
    counit = tuple(Matrix.identity(F, 1).embed(1, dims[n]) for n in range(D + 1))
    C = SimplicialCoalgebra(X, comult, counit, check=check)
    return SimplicialTensorCoalgebra(W, L, tuple(offsets), C)


def word_block_space(W: SimplicialVectorSpace, w: int, levels: int | None = None) -> SimplicialVectorSpace:
    """The simplicial subspace ``W^{⊗̂w}`` of ``T′_s(W)`` (optionally truncated to fewer levels)."""
    F = W.field
    D = W.D if levels is None else levels
    dims = tuple(W.dims[n] ** w for n in range(D + 1))
    faces = [[_power(W.face(n, i), w) for i in range(n + 1)] for n in range(1, D + 1)]
    degens = [[_power(W.degen(n, i), w) for i in range(n + 1)] for n in range(D)]
    return SimplicialVectorSpace(F, dims, faces, degens, check=False)


# ---------------------------------------------------------------------------
# I′_s


@dataclass(frozen=True, eq=False)
class SimplicialSplitting:
    """``C = I(K) ⊕ ker ε`` levelwise; ``quotient`` is ``I′_s(C)`` on the basis of ``ker ε``."""

    unit: tuple[Matrix, ...]  # image of 1 at each level
    kernel: tuple[Matrix, ...]  # basis of ker ε_n
    projection: SimplicialMap  # C -> I′_s(C)
    quotient: SimplicialVectorSpace


def require_connected_simplicial(C: SimplicialCoalgebra):
    if C.dims[0] != 1:
        raise ConnectivityError("expected a connected simplicial coalgebra (level 0 = K)")


def simplicial_coaugmentation_quotient(C: SimplicialCoalgebra) -> SimplicialSplitting:
    require_connected_simplicial(C)
    X, F = C.carrier, C.field
    units, kers, projs = [], [], []
    for n in range(X.D + 1):
        u = splitting_vector(C, n)
        if (C.counit[n] @ u) != Matrix.identity(F, 1):
            raise CoalgebraAxiomError(f"the unit does not split off at level {n}")
        K = kernel_basis(C.counit[n])
        units.append(u)
        kers.append(K)
        idem = Matrix.identity(F, X.dims[n]) - u @ C.counit[n]
        projs.append(left_inverse(K) @ idem if K.ncols else Matrix.zeros(F, 0, X.dims[n]))
    faces = [[projs[n - 1] @ X.face(n, i) @ kers[n] for i in range(n + 1)] for n in range(1, X.D + 1)]
    degens = [[projs[n + 1] @ X.degen(n, i) @ kers[n] for i in range(n + 1)] for n in range(X.D)]
    Q = SimplicialVectorSpace(F, tuple(K.ncols for K in kers), faces, degens)
    return SimplicialSplitting(tuple(units), tuple(kers), SimplicialMap(X, Q, tuple(projs)), Q)


def simplicial_coaugmentation_quotient_space(C: SimplicialCoalgebra) -> SimplicialVectorSpace:
    return simplicial_coaugmentation_quotient(C).quotient


# ---------------------------------------------------------------------------
# Hom-set counts for the adjunctions (brute force over a prime field)


def _enumerate(space: list[dict[str, Matrix]], F):
    if F.mod is None:
        raise FieldError("hom-set enumeration needs a finite field")
    for coeffs in iproduct(range(F.p), repeat=len(space)):
        out = None
        for c, vec in zip(coeffs, space):
            if not c:
                continue
            term = {k: v.scale(c) for k, v in vec.items()}
            out = term if out is None else {k: out[k] + term[k] for k in out}
        yield out


def _level_unknowns(sdims, tdims):
    return {f"f{n}": (tdims[n], sdims[n]) for n in range(len(sdims))}


def simplicial_map_space(X: SimplicialVectorSpace, Y: SimplicialVectorSpace) -> list[dict[str, Matrix]]:
    F = X.field
    unknowns = _level_unknowns(X.dims, Y.dims)
    cons = []
    for n in range(1, X.D + 1):
        for i in range(n + 1):
            cons.append(([Term(f"f{n - 1}", None, X.face(n, i)), Term(f"f{n}", -Y.face(n, i), None)], None))
    for n in range(X.D):
        for i in range(n + 1):
            cons.append(([Term(f"f{n + 1}", None, X.degen(n, i)), Term(f"f{n}", -Y.degen(n, i), None)], None))
    return solution_space(F, unknowns, cons)


def count_dg_adjunction(C: DGCoalgebra, V: ChainComplex) -> tuple[int, int]:
    """``(#coalgebra maps C -> T′_d(V), #chain maps I′_d(C) -> V)`` over ``GF(p)``."""
    from ..chain import ChainMap
    from ..coalg import is_dg_coalgebra_map
    from .tensor import coaugmentation_quotient, tensor_coalgebra

    F = C.field
    T = tensor_coalgebra(V)
    space = [{f"f{n}": m for n, m in enumerate(g.f)} for g in chain_map_space(C.carrier, T.carrier)]
    n_coalg = 0
    for vec in _enumerate(space, F):
        mats = tuple(vec[f"f{n}"] if vec is not None else Matrix.zeros(F, T.dims[n], C.dims[n]) for n in range(C.D + 1))
        if is_dg_coalgebra_map(C, T, ChainMap(C.carrier, T.carrier, mats, check=False)):
            n_coalg += 1
    rhs = F.p ** len(chain_map_space(coaugmentation_quotient(C), V))
    return n_coalg, rhs


def count_simplicial_adjunction(C: SimplicialCoalgebra, W: SimplicialVectorSpace, cap: int | None = None) -> tuple[int, int]:
    """``(#coalgebra maps C -> T′_s(W), #simplicial maps I′_s(C) -> W)`` over ``GF(p)``."""
    F = C.field
    T = simplicial_tensor_coalgebra(W, cap).coalgebra
    space = simplicial_map_space(C.carrier, T.carrier)
    n_coalg = 0
    for vec in _enumerate(space, F):
        mats = tuple(vec[f"f{n}"] if vec is not None else Matrix.zeros(F, T.dims[n], C.dims[n]) for n in range(C.D + 1))
        if is_simplicial_coalgebra_map(C, T, SimplicialMap(C.carrier, T.carrier, mats, check=False)):
            n_coalg += 1
    Q = simplicial_coaugmentation_quotient(C).quotient
    rhs = F.p ** len(simplicial_map_space(Q, W))
    return n_coalg, rhs
