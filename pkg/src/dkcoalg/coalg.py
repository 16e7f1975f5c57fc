"""Differential graded and simplicial coalgebras, and the induced functors between them."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .chain import (
    ChainComplex,
    ChainMap,
    _assemble,
    point,
    tensor,
    tensor_layout,
    tensor_maps,
)
from .doldkan import (
    alexander_whitney,
    aw_component,
    epsilon,
    eta,
    gamma_map,
    gamma_object,
    normalization,
    psi,
)
from .exactlinalg import FieldSpec, Matrix, is_invertible, kron, kron_matmul
from .simplicial import SimplicialMap, SimplicialVectorSpace, constant_unit, level_tensor


class CoalgebraAxiomError(ValueError):
    pass


@dataclass
class AxiomReport:
    failures: list[tuple[str, int]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, equation: str, degree: int):
        if not any(e == equation for e, _ in self.failures):
            self.failures.append((equation, degree))

    def __str__(self):
        if self.ok:
            return "all coalgebra axioms hold"
        return "; ".join(f"{e} fails in degree {n}" for e, n in self.failures)


# ---------------------------------------------------------------------------
# DG coalgebras


@dataclass(frozen=True, eq=False)
class DGCoalgebra:
    carrier: ChainComplex
    comult: tuple[Matrix, ...]  # Δ_n : C_n -> (C ⊗ C)_n
    counit: Matrix  # ε_0 : C_0 -> K
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "comult", tuple(self.comult))
        C = self.carrier
        if len(self.comult) != C.D + 1:
            raise CoalgebraAxiomError("one comultiplication matrix per degree")
        for n, m in enumerate(self.comult):
            want = (sum(s for _, _, s in tensor_layout(C.dims, C.dims, n)), C.dims[n])
            if m.shape != want:
                raise CoalgebraAxiomError(f"Δ_{n} has shape {m.shape}, expected {want}")
        if self.counit.shape != (1, C.dims[0]):
            raise CoalgebraAxiomError("counit must be a 1 x dim C_0 matrix")
        if self.check:
            rep = check_coalgebra_axioms(self)
            if not rep.ok:
                raise CoalgebraAxiomError(str(rep))

    @property
    def field(self) -> FieldSpec:
        return self.carrier.field

    @property
    def D(self) -> int:
        return self.carrier.D

    @property
    def dims(self) -> tuple[int, ...]:
        return self.carrier.dims

    def block(self, n: int, p: int) -> Matrix:
        """``Δ^{(p, n-p)} : C_n -> C_p ⊗ C_{n-p}``."""
        for pp, off, s in tensor_layout(self.dims, self.dims, n):
            if pp == p:
                return self.comult[n].row_block(off, off + s)
        raise IndexError(p)

    @property
    def is_connected(self) -> bool:
        return self.dims[0] == 1 and not self.counit.is_zero()

    def __repr__(self):
        return f"DGCoalgebra(dims={self.dims})"


def check_coalgebra_axioms(C: DGCoalgebra) -> AxiomReport:
    rep = AxiomReport()
    X, F = C.carrier, C.field
    CC = tensor(X, X)
    for n in range(1, X.D + 1):
        if CC.d[n - 1] @ C.comult[n] != C.comult[n - 1] @ X.d[n - 1]:
            rep.fail("Δ is a chain map", n)
    if X.D >= 1 and not (C.counit @ X.d[0]).is_zero():
        rep.fail("ε is a chain map", 1)
    for n in range(X.D + 1):
        for p in range(n + 1):
            for q in range(n - p + 1):
                r = n - p - q
                lhs = kron_matmul(C.block(p + q, p), Matrix.identity(F, X.dims[r]), C.block(n, p + q))
                rhs = kron_matmul(Matrix.identity(F, X.dims[p]), C.block(q + r, q), C.block(n, p))
                if lhs != rhs:
                    rep.fail("coassociativity", n)
        I = Matrix.identity(F, X.dims[n])
        if X.dims[0]:
            left = kron_matmul(C.counit, Matrix.identity(F, X.dims[n]), C.block(n, 0))
            right = kron_matmul(Matrix.identity(F, X.dims[n]), C.counit, C.block(n, n))
        else:
            left = right = Matrix.zeros(F, X.dims[n], X.dims[n])
        if left != I:
            rep.fail("(ε⊗id)Δ = id", n)
        if right != I:
            rep.fail("(id⊗ε)Δ = id", n)
    return rep


@dataclass(frozen=True, eq=False)
class DGCoalgebraMap:
    source: DGCoalgebra
    target: DGCoalgebra
    map: ChainMap
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        if self.check:
            bad = coalgebra_map_failure(self)
            if bad:
                raise CoalgebraAxiomError(bad)

    @property
    def f(self) -> tuple[Matrix, ...]:
        return self.map.f

    def __matmul__(self, other: "DGCoalgebraMap") -> "DGCoalgebraMap":
        return DGCoalgebraMap(other.source, self.target, self.map @ other.map, check=False)


def coalgebra_map_failure(g: DGCoalgebraMap) -> str | None:
    S, T, f = g.source, g.target, g.map
    ff = tensor_maps(f, f)
    for n in range(S.D + 1):
        if T.comult[n] @ f.f[n] != ff.f[n] @ S.comult[n]:
            return f"Δ f != (f⊗f) Δ in degree {n}"
    if T.counit @ f.f[0] != S.counit:
        return "ε f != ε"
    return None


def is_dg_coalgebra_map(S: DGCoalgebra, T: DGCoalgebra, f: ChainMap) -> bool:
    return coalgebra_map_failure(DGCoalgebraMap(S, T, f, check=False)) is None


def unit_coalgebra(D: int, field: FieldSpec) -> DGCoalgebra:
    """``K[0]`` with ``Δ(1) = 1⊗1`` and ``ε = id``."""
    X = point(D, field)
    comult = [Matrix.identity(field, 1)] + [Matrix.zeros(field, 0, 0)] * D
    return DGCoalgebra(X, tuple(comult), Matrix.identity(field, 1))


def counit_map(C: DGCoalgebra) -> DGCoalgebraMap:
    """The unique coalgebra map ``C -> K[0]``."""
    U = unit_coalgebra(C.D, C.field)
    mats = [C.counit] + [Matrix.zeros(C.field, 0, k) for k in C.dims[1:]]
    return DGCoalgebraMap(C, U, ChainMap(C.carrier, U.carrier, tuple(mats)))


def identity_coalgebra_map(C: DGCoalgebra) -> DGCoalgebraMap:
    from .chain import identity_map

    return DGCoalgebraMap(C, C, identity_map(C.carrier), check=False)


def mutate_comult(C: DGCoalgebra, n: int, i: int, j: int, value) -> DGCoalgebra:
    """A copy of ``C`` with one comultiplication entry replaced (no axiom check)."""
    M = C.comult[n]
    ent = {(r, c): v for r, row in enumerate(M.rows) for c, v in row.items()}
    ent[(i, j)] = value
    new = list(C.comult)
    new[n] = Matrix.from_entries(C.field, M.nrows, M.ncols, ent)
    return DGCoalgebra(C.carrier, tuple(new), C.counit, check=False)


# ---------------------------------------------------------------------------
# Simplicial coalgebras


@dataclass(frozen=True, eq=False)
class SimplicialCoalgebra:
    carrier: SimplicialVectorSpace
    comult: tuple[Matrix, ...]  # Δ_n : C_n -> C_n ⊗ C_n
    counit: tuple[Matrix, ...]  # ε_n : C_n -> K
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "comult", tuple(self.comult))
        object.__setattr__(self, "counit", tuple(self.counit))
        for n, k in enumerate(self.carrier.dims):
            if self.comult[n].shape != (k * k, k) or self.counit[n].shape != (1, k):
                raise CoalgebraAxiomError(f"structure maps at level {n} have the wrong shape")
        if self.check:
            rep = check_simplicial_coalgebra_axioms(self)
            if not rep.ok:
                raise CoalgebraAxiomError(str(rep))

    @property
    def field(self) -> FieldSpec:
        return self.carrier.field

    @property
    def D(self) -> int:
        return self.carrier.D

    @property
    def dims(self) -> tuple[int, ...]:
        return self.carrier.dims

    def __repr__(self):
        return f"SimplicialCoalgebra(dims={self.dims})"


def check_simplicial_coalgebra_axioms(A: SimplicialCoalgebra) -> AxiomReport:
    rep = AxiomReport()
    X, F = A.carrier, A.field
    Dl, e = A.comult, A.counit
    for n in range(1, X.D + 1):
        for i in range(n + 1):
            d = X.face(n, i)
            if kron_matmul(d, d, Dl[n]) != Dl[n - 1] @ d:
                rep.fail("Δ commutes with faces", n)
            if e[n - 1] @ d != e[n]:
                rep.fail("ε commutes with faces", n)
    for n in range(X.D):
        for i in range(n + 1):
            s = X.degen(n, i)
            if kron_matmul(s, s, Dl[n]) != Dl[n + 1] @ s:
                rep.fail("Δ commutes with degeneracies", n)
            if e[n + 1] @ s != e[n]:
                rep.fail("ε commutes with degeneracies", n)
    for n in range(X.D + 1):
        I = Matrix.identity(F, X.dims[n])
        if kron_matmul(Dl[n], I, Dl[n]) != kron_matmul(I, Dl[n], Dl[n]):
            rep.fail("coassociativity", n)
        if kron_matmul(e[n], I, Dl[n]) != I:
            rep.fail("(ε⊗id)Δ = id", n)
        if kron_matmul(I, e[n], Dl[n]) != I:
            rep.fail("(id⊗ε)Δ = id", n)
    return rep


def constant_coalgebra(D: int, field: FieldSpec) -> SimplicialCoalgebra:
    """``I(K)`` with its unique coalgebra structure."""
    one = Matrix.identity(field, 1)
    return SimplicialCoalgebra(constant_unit(D, field), (one,) * (D + 1), (one,) * (D + 1))


def is_simplicial_coalgebra_map(S: SimplicialCoalgebra, T: SimplicialCoalgebra, f: SimplicialMap) -> bool:
    for n in range(S.D + 1):
        if T.comult[n] @ f.f[n] != kron_matmul(f.f[n], f.f[n], S.comult[n]):
            return False
        if T.counit[n] @ f.f[n] != S.counit[n]:
            return False
    return True


# ---------------------------------------------------------------------------
# Ñ and Γ̃


def n_tilde(A: SimplicialCoalgebra) -> DGCoalgebra:
    """``N(A)`` with ``Δ = AW_{A,A} ∘ N(Δ_A)`` and ``ε = N(ε_A)``."""
    X = A.carrier
    NA = normalization(X)
    comult = []
    for n in range(X.D + 1):
        # Δ_A preserves normalized elements, so the inclusion of N(A ⊗̂ A) is not needed
        comult.append(aw_component(X, X, n, A.comult[n] @ NA.incl[n], NA, NA))
    counit = A.counit[0] @ NA.incl[0]
    return DGCoalgebra(NA.complex, tuple(comult), counit)


def n_tilde_map(f: SimplicialMap) -> ChainMap:
    from .doldkan import normalize_map

    return normalize_map(f)


def gamma_tilde(B: DGCoalgebra, check: bool = True) -> SimplicialCoalgebra:
    """``Γ(B)`` with ``Δ = ψ_{B,B} ∘ Γ(Δ_B)`` and ``ε = Γ(ε_B)``."""
    X, F = B.carrier, B.field
    G = gamma_object(X)
    ps = psi(X, X)
    GBB = ps.source
    comult, counit = [], []
    for n in range(X.D + 1):
        blocks = []
        for (eta_, k, off), (_, _, off2) in zip(G.layout.summands[n], GBB.layout.summands[n]):
            blocks.append((off2, off, B.comult[k]))
        gd = _assemble(F, GBB.layout.dims[n], G.layout.dims[n], blocks)
        comult.append(ps.f[n] @ gd)
        # Γ(K[0])_n is the summand of the constant surjection, i.e. the first block
        counit.append(B.counit.embed(1, G.layout.dims[n]))
    return SimplicialCoalgebra(G.space, tuple(comult), tuple(counit), check=check)


def gamma_tilde_map(f: DGCoalgebraMap) -> SimplicialMap:
    return gamma_map(f.map)


def counit_is_coalgebra_iso(B: DGCoalgebra) -> bool:
    """``ε_B : ÑΓ̃B -> B`` is an isomorphism of coalgebras."""
    NG = n_tilde(gamma_tilde(B))
    e = epsilon(B.carrier)
    if not all(is_invertible(m) for m in e.f):
        return False
    return is_dg_coalgebra_map(NG, B, e)


# ---------------------------------------------------------------------------
# The comonoidality square and its failure for η


def lemma_square_check(X: ChainComplex, Y: ChainComplex) -> bool:
    """``(ε_X ⊗ ε_Y) ∘ AW_{ΓX,ΓY} ∘ N(ψ_{X,Y}) = ε_{X⊗Y}``."""
    ps = psi(X, Y)
    GX, GY = ps.GX.space, ps.GY.space
    NGXY = normalization(ps.source.space)
    NX, NY = normalization(GX), normalization(GY)
    ee = tensor_maps(epsilon(X), epsilon(Y))
    eXY = epsilon(tensor(X, Y))
    for n in range(X.D + 1):
        col = ps.f[n] @ NGXY.incl[n]
        lhs = ee.f[n] @ aw_component(GX, GY, n, col, NX, NY)
        if lhs != eXY.f[n]:
            return False
    return True


@dataclass(frozen=True, eq=False)
class EtaSquareReport:
    lower_composite: tuple[Matrix, ...]
    right_map: tuple[Matrix, ...]
    commutes: bool

    @property
    def lower_composite_level1(self) -> Matrix:
        return self.lower_composite[1]

    @property
    def right_map_level1(self) -> Matrix:
        return self.right_map[1]

    @property
    def reproduces(self) -> bool:
        r = self.right_map_level1
        return (self.lower_composite_level1.is_zero() and r.shape == (1, 1)
                and is_invertible(r) and not self.commutes)


def eta_square(X: SimplicialVectorSpace, Y: SimplicialVectorSpace) -> EtaSquareReport:
    """Both legs of ``X ⊗̂ Y -> ΓNX ⊗̂ ΓNY``: ``η_X ⊗̂ η_Y`` versus ``ψ_{NX,NY} ∘ Γ(AW_{X,Y}) ∘ η_{X⊗̂Y}``."""
    M = level_tensor(X, Y)
    eM = eta(M)
    aw = alexander_whitney(X, Y, M)
    gaw = gamma_map(aw)
    NX, NY = normalization(X).complex, normalization(Y).complex
    ps = psi(NX, NY)
    eX, eY = eta(X), eta(Y)
    lower, right = [], []
    for n in range(X.D + 1):
        lower.append(ps.f[n] @ (gaw.f[n] @ eM.f[n]))
        right.append(kron(eX.f[n], eY.f[n]))
    commutes = all(a == b for a, b in zip(lower, right))
    return EtaSquareReport(tuple(lower), tuple(right), commutes)


def eta_square_counterexample(D: int, field: FieldSpec) -> EtaSquareReport:
    """The square for ``X = Y = Γ(𝕊¹)``."""
    from .chain import sphere
    from .doldkan import gamma

    if D < 2:
        raise ValueError("the counterexample needs D >= 2")
    X = gamma(sphere(1, D, field))
    return eta_square(X, X)
