"""Colimits of connected coalgebras: quotients by coideals of direct sums."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..chain import ChainComplex, ChainMap, direct_sum
from ..coalg import (
    CoalgebraAxiomError,
    DGCoalgebra,
    DGCoalgebraMap,
    SimplicialCoalgebra,
    unit_coalgebra,
)
from ..exactlinalg import FieldSpec, Matrix, block_diag, hstack, image_basis, kron, quotient
from ..simplicial import SimplicialMap, SimplicialVectorSpace, level_direct_sum
from .tensor import require_connected_coalgebra


def _tensor_square_map(F: FieldSpec, left: Sequence[Matrix], right_dims_src, n: int) -> Matrix:
    """Block-diagonal ``⊕_p left[p] ⊗ left[n-p]`` between tensor squares."""
    return block_diag(F, [kron(left[p], left[n - p]) for p in range(n + 1)])


def direct_sum_coalgebra(C: DGCoalgebra, D: DGCoalgebra) -> tuple[DGCoalgebra, ChainMap, ChainMap]:
    """``C ⊕ D`` with ``Δ`` and ``ε`` acting on each summand (not connected)."""
    F = C.field
    S = direct_sum(C.carrier, D.carrier)
    ic, id_ = S.inclusions
    comult = []
    for n in range(C.D + 1):
        ec = _tensor_square_map(F, ic.f, None, n)
        ed = _tensor_square_map(F, id_.f, None, n)
        comult.append(hstack(F, [ec @ C.comult[n], ed @ D.comult[n]], nrows=ec.nrows))
    counit = hstack(F, [C.counit, D.counit], nrows=1)
    return DGCoalgebra(S.total, tuple(comult), counit), ic, id_


@dataclass(frozen=True, eq=False)
class QuotientCoalgebra:
    coalgebra: DGCoalgebra
    projection: ChainMap  # C -> C/U
    section: tuple[Matrix, ...]


def quotient_coalgebra(C: DGCoalgebra, U: Sequence[Matrix]) -> QuotientCoalgebra:
    """``C / U`` for a coideal ``U`` (given by spanning columns in each degree)."""
    F, X = C.field, C.carrier
    qs = [quotient(U[n], X.dims[n]) for n in range(X.D + 1)]
    pi = [q.projection for q in qs]
    sec = [q.section for q in qs]
    for n in range(1, X.D + 1):
        if not (pi[n - 1] @ X.d[n - 1] @ U[n]).is_zero():
            raise CoalgebraAxiomError(f"subspace is not closed under d in degree {n}")
    d = tuple(pi[n - 1] @ X.d[n - 1] @ sec[n] for n in range(1, X.D + 1))
    Q = ChainComplex(F, tuple(q.dim for q in qs), d)
    comult = []
    for n in range(X.D + 1):
        pp = _tensor_square_map(F, pi, None, n)
        if not (pp @ C.comult[n] @ U[n]).is_zero():
            raise CoalgebraAxiomError(f"subspace is not a coideal in degree {n}")
        comult.append(pp @ C.comult[n] @ sec[n])
    if not (C.counit @ U[0]).is_zero():
        raise CoalgebraAxiomError("counit does not vanish on the subspace")
    QC = DGCoalgebra(Q, tuple(comult), C.counit @ sec[0])
    return QuotientCoalgebra(QC, ChainMap(X, Q, tuple(pi)), tuple(sec))


def _unit_vector(C: DGCoalgebra) -> Matrix:
    """The coaugmentation ``K -> C_0`` (the element with counit 1)."""
    e = C.counit[0, 0]
    return Matrix.from_dense(C.field, [[C.field.inv(e)]])


@dataclass(frozen=True, eq=False)
class Coproduct:
    coalgebra: DGCoalgebra
    inclusions: tuple[DGCoalgebraMap, DGCoalgebraMap]
    _sum: DGCoalgebra
    _quot: QuotientCoalgebra

    def mediating(self, a: DGCoalgebraMap, b: DGCoalgebraMap) -> DGCoalgebraMap:
        F = self.coalgebra.field
        sec = self._quot.section
        mats = tuple(hstack(F, [a.f[n], b.f[n]], nrows=a.f[n].nrows) @ sec[n] for n in range(len(sec)))
        E = a.target
        return DGCoalgebraMap(self.coalgebra, E, ChainMap(self.coalgebra.carrier, E.carrier, mats))


def coproduct(C: DGCoalgebra, D: DGCoalgebra) -> Coproduct:
    """``C ⊔ D = C ⊕ D / im(i_C φ_C - i_D φ_D)``, identifying the coaugmentations."""
    require_connected_coalgebra(C)
    require_connected_coalgebra(D)
    F = C.field
    S, ic, id_ = direct_sum_coalgebra(C, D)
    U = [ic.f[0] @ _unit_vector(C) - id_.f[0] @ _unit_vector(D)]
    U += [Matrix.zeros(F, S.dims[n], 0) for n in range(1, C.D + 1)]
    q = quotient_coalgebra(S, U)
    incs = tuple(DGCoalgebraMap(X, q.coalgebra, q.projection @ i) for X, i in ((C, ic), (D, id_)))
    return Coproduct(q.coalgebra, incs, S, q)


@dataclass(frozen=True, eq=False)
class Coequalizer:
    coalgebra: DGCoalgebra
    projection: DGCoalgebraMap
    _quot: QuotientCoalgebra

    def mediating(self, g: DGCoalgebraMap) -> DGCoalgebraMap:
        sec = self._quot.section
        mats = tuple(g.f[n] @ sec[n] for n in range(len(sec)))
        E = g.target
        return DGCoalgebraMap(self.coalgebra, E, ChainMap(self.coalgebra.carrier, E.carrier, mats))


def coequalizer(f: DGCoalgebraMap, g: DGCoalgebraMap) -> Coequalizer:
    """``D / im(f - g)``."""
    if f.source is not g.source or f.target is not g.target:
        raise ValueError("coequalizer needs parallel maps")
    Dc = f.target
    U = [image_basis(a - b) for a, b in zip(f.f, g.f)]
    q = quotient_coalgebra(Dc, U)
    return Coequalizer(q.coalgebra, DGCoalgebraMap(Dc, q.coalgebra, q.projection), q)


def initial(D: int, field: FieldSpec) -> DGCoalgebra:
    return unit_coalgebra(D, field)


def connected_colimit(kind: str, *inputs):
    if kind == "coproduct":
        return coproduct(*inputs)
    if kind == "coequalizer":
        return coequalizer(*inputs)
    if kind == "initial":
        return initial(*inputs)
    raise ValueError(f"unknown colimit {kind!r}")


# ---------------------------------------------------------------------------
# Simplicial versions (levelwise)


def simplicial_quotient(A: SimplicialCoalgebra, U: Sequence[Matrix]) -> tuple[SimplicialCoalgebra, SimplicialMap, tuple]:
    X, F = A.carrier, A.field
    qs = [quotient(U[n], X.dims[n]) for n in range(X.D + 1)]
    pi = [q.projection for q in qs]
    sec = [q.section for q in qs]
    faces = [[pi[n - 1] @ X.face(n, i) @ sec[n] for i in range(n + 1)] for n in range(1, X.D + 1)]
    degens = [[pi[n + 1] @ X.degen(n, i) @ sec[n] for i in range(n + 1)] for n in range(X.D)]
    for n in range(1, X.D + 1):
        for i in range(n + 1):
            if not (pi[n - 1] @ X.face(n, i) @ U[n]).is_zero():
                raise CoalgebraAxiomError(f"subspace not closed under d_{i} at level {n}")
    Q = SimplicialVectorSpace(F, tuple(q.dim for q in qs), faces, degens)
    comult = []
    for n in range(X.D + 1):
        pp = kron(pi[n], pi[n])
        if not (pp @ A.comult[n] @ U[n]).is_zero():
            raise CoalgebraAxiomError(f"subspace is not a coideal at level {n}")
        comult.append(pp @ A.comult[n] @ sec[n])
    QA = SimplicialCoalgebra(Q, tuple(comult), tuple(A.counit[n] @ sec[n] for n in range(X.D + 1)))
    return QA, SimplicialMap(X, Q, tuple(pi)), tuple(sec)


def simplicial_coproduct(A: SimplicialCoalgebra, B: SimplicialCoalgebra) -> tuple[SimplicialCoalgebra, SimplicialMap, SimplicialMap]:
    """Levelwise ``A ⊕ B`` modulo the identified copies of ``I(K)``."""
    if A.dims[0] != 1 or B.dims[0] != 1:
        raise CoalgebraAxiomError("connected simplicial coalgebras have level 0 = K")
    F = A.field
    S = level_direct_sum(A.carrier, B.carrier)
    comult, counit, U = [], [], []
    for n in range(A.D + 1):
        a, b = A.dims[n], B.dims[n]
        ia = Matrix.identity(F, a).embed(a + b, a)
        ib = Matrix.identity(F, b).embed(a + b, b, row_off=a)
        comult.append(hstack(F, [kron(ia, ia) @ A.comult[n], kron(ib, ib) @ B.comult[n]], nrows=(a + b) ** 2))
        counit.append(hstack(F, [A.counit[n], B.counit[n]], nrows=1))
        ua = splitting_vector(A, n)
        ub = splitting_vector(B, n)
        U.append(ia @ ua - ib @ ub)
    SC = SimplicialCoalgebra(S, tuple(comult), tuple(counit))
    Q, pi, _ = simplicial_quotient(SC, U)
    ia = SimplicialMap(A.carrier, Q.carrier, tuple(pi.f[n] @ Matrix.identity(F, A.dims[n]).embed(S.dims[n], A.dims[n])
                                                 for n in range(A.D + 1)))
    ib = SimplicialMap(B.carrier, Q.carrier, tuple(pi.f[n] @ Matrix.identity(F, B.dims[n]).embed(S.dims[n], B.dims[n], row_off=A.dims[n])
                                                 for n in range(A.D + 1)))
    return Q, ia, ib


def simplicial_coequalizer(f: SimplicialMap, g: SimplicialMap, target: SimplicialCoalgebra) -> tuple[SimplicialCoalgebra, SimplicialMap]:
    U = [image_basis(a - b) for a, b in zip(f.f, g.f)]
    Q, pi, _ = simplicial_quotient(target, U)
    return Q, pi


def splitting_vector(A: SimplicialCoalgebra, n: int) -> Matrix:
    """The image of ``1 ∈ K`` under the coaugmentation ``I(K) -> A`` at level ``n``: ``s_0^n`` of the unit."""
    F = A.field
    v = Matrix.from_dense(F, [[F.inv(A.counit[0][0, 0])]])
    for k in range(n):
        v = A.carrier.degen(k, 0) @ v
    return v
