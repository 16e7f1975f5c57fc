"""Homology comparisons behind the connected Quillen equivalence.

For a connected complex ``V`` the maps

    H(Ñ T′_s Γ V) --H(φ)--> H(T′_d V) --T′_d(π)--> T′_d H(V)

are checked to be isomorphisms of graded coalgebras in degrees ``< D``.  Here ``φ`` is
the coalgebra map adjoint to ``ε_V ∘ N(word-length-one projection)`` and ``π`` is a chain
retraction of ``V`` onto its homology.

``Ñ T′_s Γ V`` is assembled from one normalization per word length: each block
``(ΓV)^{⊗̂w}`` is a simplicial subspace whose normalized homology vanishes below degree
``w``, so blocks with ``w >= D`` are not needed in degrees ``< D``.  Only levels ``< D``
are normalized; the boundaries landing in degree ``D - 1`` are the projections of the
unnormalized top differential.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chain import (
    ChainComplex,
    ChainMap,
    homology,
    homology_basis,
    homology_retraction,
    truncate,
)
from ..coalg import DGCoalgebra
from ..doldkan import Normalization, aw_component, epsilon, gamma, normalization
from ..exactlinalg import Matrix, block_diag, hstack, image_basis, is_invertible, kron, vstack
from ..simplicial import SimplicialVectorSpace, truncate_simplicial
from .simplicial import _power, simplicial_tensor_coalgebra, word_block_space
from .tensor import map_into_cofree, require_connected_complex, tensor_coalgebra, tensor_coalgebra_map


@dataclass(frozen=True, eq=False)
class NormalizedWordCoalgebra:
    """``Ñ T′_s(W)`` restricted to levels ``<= top`` and words of length ``<= words``.

    ``capped`` appends the boundaries entering degree ``top`` as an extra degree, so its
    homology is the true homology of ``Ñ T′_s(W)`` in degrees ``<= top``.
    """

    W: SimplicialVectorSpace
    words: int
    coalgebra: DGCoalgebra
    normalization: Normalization
    offsets: tuple[tuple[int, ...], ...]  # word-block offsets in each level
    capped: ChainComplex


def _block_normalization(blocks: list[Normalization], X: SimplicialVectorSpace) -> Normalization:
    F = X.field
    D = X.D
    incl = tuple(block_diag(F, [b.incl[n] for b in blocks]) for n in range(D + 1))
    proj = tuple(block_diag(F, [b.proj[n] for b in blocks]) for n in range(D + 1))
    d = tuple(block_diag(F, [b.complex.d[n - 1] for b in blocks]) for n in range(1, D + 1))
    C = ChainComplex(F, tuple(m.ncols for m in incl), d)
    return Normalization(X, C, incl, proj)


def normalized_word_coalgebra(W: SimplicialVectorSpace, words: int | None = None,
                              check: bool = False) -> NormalizedWordCoalgebra:
    """Build ``Ñ T′_s(W)`` in degrees ``< D`` (with top boundaries), ``W`` truncated at ``D``."""
    F, D = W.field, W.D
    top = D - 1
    words = top if words is None else words
    Wt = truncate_simplicial(W, top)
    T = simplicial_tensor_coalgebra(Wt, cap=words, check=check)
    blocks = [normalization(word_block_space(Wt, w)) for w in range(words + 1)]
    NT = _block_normalization(blocks, T.coalgebra.carrier)
    X = T.coalgebra.carrier
    comult = tuple(aw_component(X, X, n, T.coalgebra.comult[n] @ NT.incl[n], NT, NT) for n in range(top + 1))
    counit = T.coalgebra.counit[0] @ NT.incl[0]
    C = DGCoalgebra(NT.complex, comult, counit, check=check)
    # boundaries entering degree `top` from level D, block by block
    cols, off = [], 0
    ntop = NT.complex.dims[top]
    for w, b in enumerate(blocks):
        size = b.complex.dims[top]
        if w and size:
            moore = _power(W.face(D, 0), w)
            for i in range(1, D + 1):
                term = _power(W.face(D, i), w)
                moore = moore - term if i % 2 else moore + term
            img = image_basis(b.proj[top] @ moore)
            if img.ncols:
                cols.append(img.embed(ntop, img.ncols, row_off=off))
        off += size
    Btop = hstack(F, cols, nrows=ntop) if cols else Matrix.zeros(F, ntop, 0)
    capped = ChainComplex(F, NT.complex.dims + (Btop.ncols,), NT.complex.d + (Btop,))
    return NormalizedWordCoalgebra(W, words, C, NT, T.offsets, capped)


# ---------------------------------------------------------------------------
# Homology coalgebras


@dataclass(frozen=True, eq=False)
class HomologyCoalgebra:
    """Homology bases, chain retractions and the induced comultiplication in degrees ``< top``."""

    reps: tuple[Matrix, ...]
    retractions: tuple[Matrix, ...]
    comult: tuple[Matrix, ...]
    classify: tuple

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(r.ncols for r in self.reps)


def homology_coalgebra(C: DGCoalgebra, carrier: ChainComplex | None = None, degrees: int | None = None) -> HomologyCoalgebra:
    """``Δ_H = (r ⊗ r) ∘ Δ`` on representatives, with ``r`` a chain retraction onto homology.

    ``carrier`` may extend ``C``'s complex by one degree to supply missing boundaries.
    """
    X = carrier or C.carrier
    top = C.D + 1 if degrees is None else degrees
    hbs = [homology_basis(X, n) for n in range(top)]
    rs = [homology_retraction(X, n, hb) for n, hb in enumerate(hbs)]
    F = C.field
    comult = []
    for n in range(top):
        parts = [kron(rs[p], rs[n - p]) @ (C.block(n, p) @ hbs[n].reps) for p in range(n + 1)]
        comult.append(vstack(F, parts, ncols=hbs[n].dim))
    return HomologyCoalgebra(tuple(hb.reps for hb in hbs), tuple(rs), tuple(comult), tuple(hb.classify for hb in hbs))


def _compatible(src: HomologyCoalgebra, tgt: HomologyCoalgebra, maps: list[Matrix]) -> bool:
    F = maps[0].field
    for n in range(len(maps)):
        lhs = tgt.comult[n] @ maps[n]
        rhs = block_diag(F, [kron(maps[p], maps[n - p]) for p in range(n + 1)]) @ src.comult[n]
        if lhs != rhs:
            return False
    return True


@dataclass
class ComparisonReport:
    V: ChainComplex
    dims_normalized: tuple[int, ...]
    dims_tensor: tuple[int, ...]
    dims_tensor_of_homology: tuple[int, ...]
    phi_iso: bool
    pi_iso: bool
    phi_coalgebra: bool
    pi_coalgebra: bool
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.phi_iso and self.pi_iso and self.phi_coalgebra and self.pi_coalgebra
                and self.dims_normalized == self.dims_tensor == self.dims_tensor_of_homology)


def homology_retraction_map(V: ChainComplex) -> ChainMap:
    """``π : V -> H(V)`` with ``H(V)`` carrying the zero differential (top degree: cycles)."""
    F = V.field
    mats = [homology_retraction(V, n) for n in range(V.D + 1)]
    dims = tuple(m.nrows for m in mats)
    H = ChainComplex(F, dims, tuple(Matrix.zeros(F, dims[n - 1], dims[n]) for n in range(1, V.D + 1)))
    return ChainMap(V, H, tuple(mats))


def rcom_on_cofree(V: ChainComplex, words: int | None = None) -> ComparisonReport:
    """Compare ``H(Ñ T′_s Γ V)``, ``H(T′_d V)`` and ``T′_d H(V)`` as graded coalgebras in degrees ``< D``."""
    require_connected_complex(V)
    D = V.D
    top = D - 1
    W = gamma(V)
    NW = normalized_word_coalgebra(W, words)
    Vt = truncate(V, top)
    # u = ε_V ∘ N(word-length-one projection), read on normalized elements
    eps = epsilon(Vt)
    G = normalization(gamma(Vt))
    u = [Matrix.zeros(V.field, V.dims[0], NW.coalgebra.dims[0])]
    for n in range(1, top + 1):
        off, m = NW.offsets[n][1], W.dims[n]
        sel = Matrix.identity(V.field, m).embed(m, NW.normalization.incl[n].nrows, col_off=off)
        u.append(eps.f[n] @ G.proj[n] @ sel @ NW.normalization.incl[n])
    phi = map_into_cofree(NW.coalgebra, u, Vt, check=False)

    T = tensor_coalgebra(V)
    HS = homology_coalgebra(NW.coalgebra, NW.capped, degrees=D)
    HT = homology_coalgebra(T, degrees=D)
    pi = homology_retraction_map(V)
    Tpi = tensor_coalgebra_map(pi)
    HTH = homology_coalgebra(Tpi.target, degrees=D)

    phi_maps = [HT.classify[n](phi.f[n] @ HS.reps[n]) for n in range(D)]
    pi_maps = [HTH.classify[n](Tpi.f[n] @ HT.reps[n]) for n in range(D)]
    return ComparisonReport(
        V,
        HS.dims,
        HT.dims,
        HTH.dims,
        all(is_invertible(m) for m in phi_maps),
        all(is_invertible(m) for m in pi_maps),
        _compatible(HS, HT, phi_maps),
        _compatible(HT, HTH, pi_maps),
    )


@dataclass
class HoveyReport:
    """The comparison together with the class of ``V``: ``zero``, ``acyclic`` or ``general``.

    For the first two the normalized side must have the homology of ``K[0]``.
    """

    case: str
    comparison: ComparisonReport

    @property
    def ok(self) -> bool:
        if not self.comparison.ok:
            return False
        if self.case in ("zero", "acyclic"):
            return self.comparison.dims_normalized == (1,) + (0,) * (self.comparison.V.D - 1)
        return True


def rcom_on_cofree_and_hovey(V: ChainComplex, words: int | None = None) -> HoveyReport:
    if not any(V.dims):
        case = "zero"
    elif not any(homology(V).dims[:V.D]):
        case = "acyclic"
    else:
        case = "general"
    return HoveyReport(case, rcom_on_cofree(V, words))


# ---------------------------------------------------------------------------
# Connected Dold–Kan


@dataclass
class ConnectedDoldKanReport:
    gamma_connected: bool
    normalization_connected: bool
    epsilon_iso: bool
    eta_iso: bool

    @property
    def ok(self) -> bool:
        return self.gamma_connected and self.normalization_connected and self.epsilon_iso and self.eta_iso


def connected_dold_kan_equivalence(obj: ChainComplex | SimplicialVectorSpace) -> ConnectedDoldKanReport:
    from ..doldkan import eta, normalize

    if isinstance(obj, ChainComplex):
        require_connected_complex(obj)
        G = gamma(obj)
        NG = normalize(G)
        e = epsilon(obj)
        et = eta(G)
        return ConnectedDoldKanReport(G.dims[0] == 0, NG.dims[0] == 0,
                                      all(is_invertible(m) for m in e.f), all(is_invertible(m) for m in et.f))
    if obj.dims[0] != 0:
        raise ValueError("expected a connected simplicial vector space (level 0 is zero)")
    N = normalize(obj)
    G = gamma(N)
    et = eta(obj)
    e = epsilon(N)
    return ConnectedDoldKanReport(G.dims[0] == 0, N.dims[0] == 0,
                                  all(is_invertible(m) for m in e.f), all(is_invertible(m) for m in et.f))
