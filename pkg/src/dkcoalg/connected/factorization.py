"""Factorizations of connected coalgebra maps and the retract-of-cofree lemma."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chain import ChainComplex, ChainMap, cone, cone_inclusion, induced_homology_map
from ..coalg import DGCoalgebra, DGCoalgebraMap, coalgebra_map_failure
from ..exactlinalg import Matrix, Term, block_diag, is_injective, kron, kron_matmul, solve_affine
from .cofree import CofreeProduct, product_with_cofree
from .tensor import (
    coaugmentation_projection,
    coaugmentation_quotient,
    map_into_cofree,
    require_connected_coalgebra,
    tensor_coalgebra_object,
    word_length_projection,
)


@dataclass(frozen=True, eq=False)
class Factorization:
    f: DGCoalgebraMap
    i: DGCoalgebraMap
    X: DGCoalgebra
    p: DGCoalgebraMap
    product: CofreeProduct

    def composite_ok(self) -> bool:
        return all(a == b for a, b in zip((self.p @ self.i).f, self.f.f))

    def i_injective(self) -> bool:
        return all(is_injective(m) for m in self.i.f[1:])

    def p_homology_iso(self) -> bool:
        return induced_homology_map(self.p.map).is_iso


def factor_cof_then_acyclic_fib(f: DGCoalgebraMap) -> Factorization:
    """``C -> D ⊓ T′_d(cone I′_d C) -> D``.

    ``i`` is the mediating map of ``f`` and ``I′_d C -> cone(I′_d C)``; ``p`` is the
    projection, which is a weak equivalence because the cofree factor is acyclic.
    """
    C, Dc = f.source, f.target
    require_connected_coalgebra(C)
    require_connected_coalgebra(Dc)
    W = coaugmentation_quotient(C)
    V = cone(W)
    P = product_with_cofree(Dc, V)
    u = cone_inclusion(W) @ coaugmentation_projection(C, W)
    i = P.mediating(f, u)
    return Factorization(f, i, P.coalgebra, P.to_C, P)


def stage_zero(f: DGCoalgebraMap) -> Factorization:
    """``G(0) = D ⊓ T′_d(I′_d C)`` with ``i₀`` the mediating map of ``f`` and ``C -> I′_d C``."""
    C, Dc = f.source, f.target
    require_connected_coalgebra(C)
    W = coaugmentation_quotient(C)
    P = product_with_cofree(Dc, W)
    i = P.mediating(f, coaugmentation_projection(C, W))
    return Factorization(f, i, P.coalgebra, P.to_C, P)


# ---------------------------------------------------------------------------
# Retracts


@dataclass
class RetractReport:
    found: bool
    r: DGCoalgebraMap | None = None
    i: DGCoalgebraMap | None = None
    failed_degree: int | None = None
    method: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def retract_ok(self) -> bool:
        if not self.found:
            return False
        ri = self.r @ self.i
        return all(m == Matrix.identity(m.field, m.nrows) for m in ri.f)


def cofree_embedding(C: DGCoalgebra) -> tuple[DGCoalgebraMap, ChainComplex]:
    """``i : C -> T′_d(I′_d C)``, adjoint to the identity of ``I′_d C`` (stage zero over ``K[0]``)."""
    W = coaugmentation_quotient(C)
    return map_into_cofree(C, coaugmentation_projection(C, W), W), W


def solve_coalgebra_retraction(G: DGCoalgebra, C: DGCoalgebra, i: DGCoalgebraMap) -> RetractReport:
    """Greedy degree-by-degree search for a coalgebra map ``r : G -> C`` with ``r∘i = id``.

    In degree ``n`` the comultiplicativity components ``(p, n-p)`` with ``0 < p < n`` only
    involve the already fixed ``r_p``, so each degree is an affine system in ``r_n``.
    A particular solution is chosen; a failure in a later degree is reported as no-lift
    even though a different earlier choice might have succeeded.
    """
    F = C.field
    r = [Matrix.identity(F, 1, scale=F.inv(C.counit[0, 0])) @ G.counit]
    for n in range(1, C.D + 1):
        shape = (C.dims[n], G.dims[n])
        cons = [([Term("r", None, i.f[n])], Matrix.identity(F, C.dims[n]))]
        cons.append(([Term("r", C.carrier.d[n - 1], None)], r[n - 1] @ G.carrier.d[n - 1]))
        for p in range(1, n):
            rhs = kron_matmul(r[p], r[n - p], G.block(n, p))
            cons.append(([Term("r", C.block(n, p), None)], rhs))
        for p in (0, n):
            # C_0 ⊗ C_n ≅ C_n, so these components are linear in r_n on both sides
            s = r[0].scale(-1)[0, 0]
            cons.append(([Term("r", C.block(n, p), None),
                          Term("r", Matrix.identity(F, C.dims[n], scale=s), G.block(n, p))], None))
        sol = solve_affine(F, {"r": shape}, cons)
        if sol is None:
            return RetractReport(False, None, i, failed_degree=n, method="greedy")
        r.append(sol["r"])
    rmap = ChainMap(G.carrier, C.carrier, tuple(r), check=False)
    if rmap.first_noncommuting_degree() is not None:
        return RetractReport(False, None, i, failed_degree=rmap.first_noncommuting_degree(), method="greedy")
    rc = DGCoalgebraMap(G, C, rmap, check=False)
    if coalgebra_map_failure(rc) is not None:
        return RetractReport(False, None, i, method="greedy", notes=[coalgebra_map_failure(rc)])
    return RetractReport(True, rc, i, method="greedy")


def retract_of_cofree(C: DGCoalgebra, witness: DGCoalgebraMap | None = None) -> RetractReport:
    """Exhibit ``C`` as a retract of ``G = T′_d(I′_d C)``.

    With a ``witness`` lift ``r : G -> C`` it is verified as given; otherwise the greedy
    solver searches for one.
    """
    require_connected_coalgebra(C)
    i, W = cofree_embedding(C)
    G = i.target
    if witness is not None:
        ok = coalgebra_map_failure(witness) is None
        return RetractReport(ok, witness if ok else None, i, method="witness")
    return solve_coalgebra_retraction(G, C, i)


def cofree_witness(V: ChainComplex) -> DGCoalgebraMap:
    """For ``C = T′_d(V)``: the lift ``T′_d(I′_d C) -> C`` adjoint to the word-length-one projection."""
    C = tensor_coalgebra_object(V).coalgebra
    W = coaugmentation_quotient(C)
    G = tensor_coalgebra_object(W).coalgebra
    proj = word_length_projection(V)
    pw = word_length_projection(W)
    u = [Matrix.zeros(V.field, V.dims[0], G.dims[0])] + [proj.f[n] @ pw.f[n] for n in range(1, V.D + 1)]
    return map_into_cofree(G, u, V)


def transport_coalgebra(C: DGCoalgebra, g: list[Matrix], g_inv: list[Matrix]) -> DGCoalgebra:
    """The coalgebra on the same dims making ``g : C' -> C`` an isomorphism."""
    F = C.field
    X = C.carrier
    d = tuple(g_inv[n - 1] @ X.d[n - 1] @ g[n] for n in range(1, X.D + 1))
    Y = ChainComplex(F, X.dims, d)
    comult = []
    for n in range(X.D + 1):
        gg = block_diag(F, [kron(g_inv[p], g_inv[n - p]) for p in range(n + 1)])
        comult.append(gg @ C.comult[n] @ g[n])
    return DGCoalgebra(Y, tuple(comult), C.counit @ g[0])


def primitive_coalgebra(V: ChainComplex) -> DGCoalgebra:
    """``K ⊕ V`` with every element of ``V`` primitive."""
    from ..chain import from_dims
    from ..exactlinalg import vstack

    F, D = V.field, V.D
    dims = (1,) + V.dims[1:]
    diffs = {n: V.d[n - 1] for n in range(2, D + 1)}
    X = from_dims(F, dims, diffs)
    comult = [Matrix.identity(F, 1)]
    for n in range(1, D + 1):
        k = dims[n]
        middle = sum(dims[p] * dims[n - p] for p in range(1, n))
        I = Matrix.identity(F, k)
        comult.append(vstack(F, [I, Matrix.zeros(F, middle, k), I], ncols=k))
    return DGCoalgebra(X, tuple(comult), Matrix.identity(F, 1))


# ---------------------------------------------------------------------------
# Lifting against the projection C ⊓ T′_d(V) -> C


@dataclass
class CofreeLift:
    lift: DGCoalgebraMap | None
    upper_ok: bool = False
    lower_ok: bool = False

    @property
    def ok(self) -> bool:
        return self.lift is not None and self.upper_ok and self.lower_ok


def lift_against_projection(P: CofreeProduct, j: DGCoalgebraMap, h: DGCoalgebraMap,
                            k: DGCoalgebraMap) -> CofreeLift:
    """Lift in the square ``h : A -> C ⊓ T′_d(V)``, ``k : B -> C``, ``j : A -> B``.

    A lift is ``mediating(k, λ)`` for a chain map ``λ : I′_d B -> V`` extending the
    cofree adjoint of ``h`` along ``j``; finding ``λ`` is a linear system.
    """
    from .tensor import cofree_adjoint

    V, F = P.V, P.V.field
    B = j.target
    u = cofree_adjoint(P.to_cofree @ h, V)
    unknowns = {f"l{n}": (V.dims[n], B.dims[n]) for n in range(1, B.D + 1)}
    cons = []
    for n in range(1, B.D + 1):
        cons.append(([Term(f"l{n}", None, j.f[n])], u.f[n]))
        if n >= 2:
            cons.append(([Term(f"l{n}", V.d[n - 1], None), Term(f"l{n - 1}", None, -B.carrier.d[n - 1])], None))
        else:
            cons.append(([Term("l1", V.d[0], None)], None))
    sol = solve_affine(F, unknowns, cons)
    if sol is None:
        return CofreeLift(None)
    lam = [Matrix.zeros(F, V.dims[0], B.dims[0])] + [sol[f"l{n}"] for n in range(1, B.D + 1)]
    L = P.mediating(k, lam)
    upper = all(a == b for a, b in zip((L @ j).f, h.f))
    lower = all(a == b for a, b in zip((P.to_C @ L).f, k.f))
    return CofreeLift(L, upper, lower)
