"""Truncated non-negatively graded chain complexes over a field.

A complex truncated at degree ``D`` stores ``C_0 .. C_D`` and the differentials
``d_n : C_n -> C_{n-1}`` for ``1 <= n <= D``.  Homology in degree ``D`` cannot be
computed exactly (``d_{D+1}`` is unknown) and is reported separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactlinalg import (
    DimensionError,
    FieldSpec,
    Matrix,
    block_diag,
    coordinates,
    image_basis,
    is_injective,
    is_invertible,
    is_surjective,
    kernel_basis,
    kron,
    quotient,
    rank,
)


class ChainComplexError(ValueError):
    pass


class ModelVariantError(ValueError):
    pass


def _check_shape(M: Matrix, shape: tuple[int, int], what: str):
    if M.shape != shape:
        raise ChainComplexError(f"{what}: expected shape {shape}, got {M.shape}")


@dataclass(frozen=True, eq=False)
class ChainComplex:
    field: FieldSpec
    dims: tuple[int, ...]
    d: tuple[Matrix, ...]  # d[n-1] = d_n

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        object.__setattr__(self, "d", tuple(self.d))
        if not self.dims:
            raise ChainComplexError("a complex needs at least degree 0")
        if any(x < 0 for x in self.dims):
            raise ChainComplexError("negative dimension")
        if len(self.d) != self.D:
            raise ChainComplexError(f"expected {self.D} differentials, got {len(self.d)}")
        for n in range(1, self.D + 1):
            _check_shape(self.d[n - 1], (self.dims[n - 1], self.dims[n]), f"d_{n}")
        for n in range(1, self.D):
            if not (self.d[n - 1] @ self.d[n]).is_zero():
                raise ChainComplexError(f"d_{n} ∘ d_{n + 1} != 0 (degree {n + 1})")

    @property
    def D(self) -> int:
        return len(self.dims) - 1

    def diff(self, n: int) -> Matrix:
        """``d_n``; the zero map out of degree 0 for ``n == 0``."""
        if n == 0:
            return Matrix.zeros(self.field, 0, self.dims[0])
        if 1 <= n <= self.D:
            return self.d[n - 1]
        raise IndexError(f"d_{n} is outside the truncation 0..{self.D}")

    @property
    def is_connected(self) -> bool:
        return self.dims[0] == 0

    def __repr__(self):
        return f"ChainComplex({self.field.label()}, dims={self.dims})"

    def same_as(self, other: "ChainComplex") -> bool:
        return self.dims == other.dims and self.d == other.d and self.field == other.field


def zero_complex(field: FieldSpec, D: int) -> ChainComplex:
    return from_dims(field, [0] * (D + 1))


def from_dims(field: FieldSpec, dims: Sequence[int], diffs: dict[int, Matrix] | None = None) -> ChainComplex:
    diffs = diffs or {}
    d = []
    for n in range(1, len(dims)):
        d.append(diffs.get(n, Matrix.zeros(field, dims[n - 1], dims[n])))
    return ChainComplex(field, tuple(dims), tuple(d))


def basic_complex(kind: str, n: int, D: int, field: FieldSpec) -> ChainComplex:
    """The sphere ``S^n``, the disk ``D^n`` (``K`` in degrees n, n-1), or the unit ``K[0]``."""
    if kind == "point":
        return sphere(0, D, field)
    if not 0 <= n <= D:
        raise ValueError(f"degree {n} outside 0..{D}")
    if kind == "sphere":
        return sphere(n, D, field)
    if kind == "disk":
        return disk(n, D, field)
    raise ValueError(f"unknown basic complex {kind!r}")


def sphere(n: int, D: int, field: FieldSpec) -> ChainComplex:
    if not 0 <= n <= D:
        raise ValueError(f"sphere degree {n} outside 0..{D}")
    dims = [0] * (D + 1)
    dims[n] = 1
    return from_dims(field, dims)


def disk(n: int, D: int, field: FieldSpec) -> ChainComplex:
    if not 1 <= n <= D:
        raise ValueError(f"disk degree {n} outside 1..{D}")
    dims = [0] * (D + 1)
    dims[n] = dims[n - 1] = 1
    return from_dims(field, dims, {n: Matrix.identity(field, 1)})


def point(D: int, field: FieldSpec) -> ChainComplex:
    return sphere(0, D, field)


def _same_frame(*cs: ChainComplex):
    f, D = cs[0].field, cs[0].D
    for c in cs[1:]:
        if c.field != f:
            raise DimensionError("complexes over different fields")
        if c.D != D:
            raise DimensionError(f"truncation mismatch: {D} vs {c.D}")


# ---------------------------------------------------------------------------
# Maps


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    f: tuple[Matrix, ...]
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        _same_frame(self.source, self.target)
        if len(self.f) != self.source.D + 1:
            raise ChainComplexError("a chain map needs one matrix per degree")
        for n, m in enumerate(self.f):
            _check_shape(m, (self.target.dims[n], self.source.dims[n]), f"f_{n}")
        if self.check:
            n = self.first_noncommuting_degree()
            if n is not None:
                raise ChainComplexError(f"not a chain map: d f != f d in degree {n}")

    def first_noncommuting_degree(self) -> int | None:
        for n in range(1, self.source.D + 1):
            if self.target.d[n - 1] @ self.f[n] != self.f[n - 1] @ self.source.d[n - 1]:
                return n
        return None

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        if other.target is not self.source and not other.target.same_as(self.source):
            raise DimensionError("composing maps with mismatched endpoints")
        return ChainMap(other.source, self.target, tuple(a @ b for a, b in zip(self.f, other.f)), check=False)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target, tuple(a + b for a, b in zip(self.f, other.f)), check=False)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target, tuple(a - b for a, b in zip(self.f, other.f)), check=False)

    def equals(self, other: "ChainMap") -> bool:
        return all(a == b for a, b in zip(self.f, other.f))

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.f)


def identity_map(C: ChainComplex) -> ChainMap:
    return ChainMap(C, C, tuple(Matrix.identity(C.field, k) for k in C.dims), check=False)


def zero_map(X: ChainComplex, Y: ChainComplex) -> ChainMap:
    return ChainMap(X, Y, tuple(Matrix.zeros(X.field, b, a) for a, b in zip(X.dims, Y.dims)), check=False)


def chain_map_space(X: ChainComplex, Y: ChainComplex) -> list[ChainMap]:
    """A basis of the vector space of chain maps ``X -> Y``."""
    from .exactlinalg import Term, solution_space

    _same_frame(X, Y)
    F = X.field
    unknowns = {f"f{n}": (Y.dims[n], X.dims[n]) for n in range(X.D + 1)}
    cons = []
    for n in range(1, X.D + 1):
        cons.append(([Term(f"f{n}", left=Y.d[n - 1]), Term(f"f{n - 1}", right=-X.d[n - 1])], None))
    sols = solution_space(F, unknowns, cons)
    return [ChainMap(X, Y, tuple(s[f"f{n}"] for n in range(X.D + 1)), check=False) for s in sols]


# ---------------------------------------------------------------------------
# Direct sums and tensor products


@dataclass(frozen=True, eq=False)
class DirectSum:
    total: ChainComplex
    inclusions: tuple[ChainMap, ...]
    projections: tuple[ChainMap, ...]


def direct_sum(*parts: ChainComplex) -> DirectSum:
    _same_frame(*parts)
    F, D = parts[0].field, parts[0].D
    dims = tuple(sum(p.dims[n] for p in parts) for n in range(D + 1))
    d = tuple(block_diag(F, [p.d[n - 1] for p in parts]) for n in range(1, D + 1))
    total = ChainComplex(F, dims, d)
    incs, projs = [], []
    offs = [0] * (D + 1)
    for p in parts:
        fi, fp = [], []
        for n in range(D + 1):
            I = Matrix.identity(F, p.dims[n])
            fi.append(I.embed(dims[n], p.dims[n], row_off=offs[n]))
            fp.append(I.embed(p.dims[n], dims[n], col_off=offs[n]))
            offs[n] += p.dims[n]
        incs.append(ChainMap(p, total, tuple(fi), check=False))
        projs.append(ChainMap(total, p, tuple(fp), check=False))
    return DirectSum(total, tuple(incs), tuple(projs))


def tensor_layout(dx: Sequence[int], dy: Sequence[int], n: int) -> list[tuple[int, int, int]]:
    """Summands ``(p, offset, size)`` of ``(X ⊗ Y)_n``, ascending in ``p``."""
    out = []
    off = 0
    for p in range(n + 1):
        q = n - p
        if p < len(dx) and q < len(dy):
            size = dx[p] * dy[q]
            out.append((p, off, size))
            off += size
    return out


def tensor_dim(dx: Sequence[int], dy: Sequence[int], n: int) -> int:
    return sum(s for _, _, s in tensor_layout(dx, dy, n))


def tensor_offset(dx: Sequence[int], dy: Sequence[int], n: int, p: int) -> int:
    for pp, off, _ in tensor_layout(dx, dy, n):
        if pp == p:
            return off
    raise IndexError(p)


def tensor(X: ChainComplex, Y: ChainComplex) -> ChainComplex:
    """``(X⊗Y)_n = ⊕_{p+q=n} X_p ⊗ Y_q`` with ``d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy``."""
    _same_frame(X, Y)
    F, D = X.field, X.D
    dims = tuple(tensor_dim(X.dims, Y.dims, n) for n in range(D + 1))
    ds = []
    for n in range(1, D + 1):
        rows_lay = {p: (off, s) for p, off, s in tensor_layout(X.dims, Y.dims, n - 1)}
        blocks = []
        for p, off, size in tensor_layout(X.dims, Y.dims, n):
            q = n - p
            if p >= 1 and size:
                B = kron(X.d[p - 1], Matrix.identity(F, Y.dims[q]))
                blocks.append((rows_lay[p - 1][0], off, B))
            if q >= 1 and size:
                B = kron(Matrix.identity(F, X.dims[p]), Y.d[q - 1])
                if p % 2:
                    B = -B
                blocks.append((rows_lay[p][0], off, B))
        ds.append(_assemble(F, dims[n - 1], dims[n], blocks))
    return ChainComplex(F, dims, tuple(ds))


def _assemble(F: FieldSpec, m: int, n: int, blocks) -> Matrix:
    rows = [dict() for _ in range(m)]
    mod = F.mod
    for r0, c0, B in blocks:
        for i, r in enumerate(B.rows):
            if r:
                d = rows[r0 + i]
                for j, v in r.items():
                    d[c0 + j] = d.get(c0 + j, 0) + v
    from .exactlinalg import _clean

    return Matrix(F, m, n, [_clean(r, mod) for r in rows], _trusted=True)


def tensor_maps(f: ChainMap, g: ChainMap, source: ChainComplex | None = None,
                target: ChainComplex | None = None) -> ChainMap:
    """``f ⊗ g`` (degree-zero maps, so no Koszul signs)."""
    F, D = f.field, f.source.D
    src = source if source is not None else tensor(f.source, g.source)
    tgt = target if target is not None else tensor(f.target, g.target)
    mats = []
    for n in range(D + 1):
        lay_s = tensor_layout(f.source.dims, g.source.dims, n)
        lay_t = {p: off for p, off, _ in tensor_layout(f.target.dims, g.target.dims, n)}
        blocks = []
        for p, off, _ in lay_s:
            blocks.append((lay_t[p], off, kron(f.f[p], g.f[n - p])))
        mats.append(_assemble(F, tgt.dims[n], src.dims[n], blocks))
    return ChainMap(src, tgt, tuple(mats), check=False)


def associator(X: ChainComplex, Y: ChainComplex, Z: ChainComplex) -> ChainMap:
    """The reindexing iso ``(X⊗Y)⊗Z -> X⊗(Y⊗Z)``."""
    F = X.field
    XY = tensor(X, Y)
    YZ = tensor(Y, Z)
    left = tensor(XY, Z)
    right = tensor(X, YZ)
    mats = []
    for n in range(X.D + 1):
        ent = {}
        for s, off_s, _ in tensor_layout(XY.dims, Z.dims, n):
            r = n - s
            for p, off_p, _ in tensor_layout(X.dims, Y.dims, s):
                q = s - p
                off_r = tensor_offset(X.dims, YZ.dims, n, p)
                off_yz = tensor_offset(Y.dims, Z.dims, q + r, q)
                for a in range(X.dims[p]):
                    for b in range(Y.dims[q]):
                        for c in range(Z.dims[r]):
                            src = off_s + (off_p + a * Y.dims[q] + b) * Z.dims[r] + c
                            tgt = off_r + a * YZ.dims[q + r] + off_yz + b * Z.dims[r] + c
                            ent[(tgt, src)] = 1
        mats.append(Matrix.from_entries(F, right.dims[n], left.dims[n], ent))
    return ChainMap(left, right, tuple(mats), check=False)


def symmetry(X: ChainComplex, Y: ChainComplex) -> ChainMap:
    """``x⊗y -> (-1)^{|x||y|} y⊗x``."""
    F = X.field
    XY, YX = tensor(X, Y), tensor(Y, X)
    mats = []
    for n in range(X.D + 1):
        ent = {}
        for p, off, _ in tensor_layout(X.dims, Y.dims, n):
            q = n - p
            off_t = tensor_offset(Y.dims, X.dims, n, q)
            sgn = -1 if (p * q) % 2 else 1
            for a in range(X.dims[p]):
                for b in range(Y.dims[q]):
                    ent[(off_t + b * X.dims[p] + a, off + a * Y.dims[q] + b)] = sgn
        mats.append(Matrix.from_entries(F, YX.dims[n], XY.dims[n], ent))
    return ChainMap(XY, YX, tuple(mats), check=False)


# ---------------------------------------------------------------------------
# Homology


@dataclass(frozen=True)
class GradedDims:
    """Homology dimensions.

    ``dims[n]`` is exact for ``n < D``.  ``top`` is ``dim ker d_D``, an upper bound for
    ``H_D`` since the incoming boundaries are not part of the truncation.
    """

    dims: tuple[int, ...]
    top: int
    boundary_incomplete: bool = True

    def as_list(self) -> list[int]:
        return list(self.dims)


def homology(X: ChainComplex) -> GradedDims:
    ranks = [0] + [rank(m) for m in X.d]  # ranks[n] = rank d_n
    dims = []
    for n in range(X.D):
        dims.append(X.dims[n] - ranks[n] - ranks[n + 1])
    top = X.dims[X.D] - ranks[X.D]
    return GradedDims(tuple(dims), top)


def is_acyclic(X: ChainComplex) -> bool:
    return not any(homology(X).dims)


@dataclass(frozen=True, eq=False)
class HomologyBasis:
    """Cycle representatives for ``H_n`` plus a classifier for cycles."""

    cycles: Matrix  # basis of Z_n (columns in C_n)
    reps: Matrix  # representatives of a basis of H_n
    _proj: Matrix  # Z-coordinates -> H-coordinates

    @property
    def dim(self) -> int:
        return self.reps.ncols

    def classify(self, Z: Matrix) -> Matrix:
        """Homology coordinates of cycles given as columns in ``C_n``."""
        return self._proj @ coordinates(self.cycles, Z)


def homology_basis(X: ChainComplex, n: int) -> HomologyBasis:
    F = X.field
    Zb = kernel_basis(X.diff(n))
    if n + 1 <= X.D:
        Bb = image_basis(X.d[n])
    else:
        Bb = Matrix.zeros(F, X.dims[n], 0)
    Bz = coordinates(Zb, Bb) if Bb.ncols else Matrix.zeros(F, Zb.ncols, 0)
    q = quotient(Bz, Zb.ncols)
    return HomologyBasis(Zb, Zb @ q.section, q.projection)


@dataclass(frozen=True, eq=False)
class InducedHomology:
    maps: tuple[Matrix, ...]  # degrees 0..D-1

    @property
    def is_iso(self) -> bool:
        return all(is_invertible(m) for m in self.maps)


def induced_homology_map(f: ChainMap) -> InducedHomology:
    mats = []
    for n in range(f.source.D):
        hs = homology_basis(f.source, n)
        ht = homology_basis(f.target, n)
        mats.append(ht.classify(f.f[n] @ hs.reps))
    return InducedHomology(tuple(mats))


# ---------------------------------------------------------------------------
# Cone, desuspension, Hom


def cone(V: ChainComplex) -> ChainComplex:
    """``cone(V)_n = V_{n-1} ⊕ V_n`` with ``d(v, w) = (-dv, dw - v)``."""
    F, D = V.field, V.D
    dims = tuple((V.dims[n - 1] if n else 0) + V.dims[n] for n in range(D + 1))
    ds = []
    for n in range(1, D + 1):
        a = V.dims[n - 1]  # source = V_{n-1} ⊕ V_n
        ta = V.dims[n - 2] if n >= 2 else 0
        blocks = []
        if n >= 2:
            blocks.append((0, 0, -V.d[n - 2]))
        blocks.append((ta, 0, -Matrix.identity(F, a)))
        blocks.append((ta, a, V.d[n - 1]))
        ds.append(_assemble(F, dims[n - 1], dims[n], blocks))
    return ChainComplex(F, dims, tuple(ds))


def cone_inclusion(V: ChainComplex) -> ChainMap:
    """``V -> cone(V)``, ``w -> (0, w)``."""
    C = cone(V)
    F = V.field
    mats = []
    for n in range(V.D + 1):
        off = V.dims[n - 1] if n else 0
        mats.append(Matrix.identity(F, V.dims[n]).embed(C.dims[n], V.dims[n], row_off=off))
    return ChainMap(V, C, tuple(mats))


def desuspend(V: ChainComplex) -> ChainComplex:
    """``(s^{-1}V)_n = V_{n+1}`` with differential ``-d``; truncation drops to ``D - 1``."""
    if not V.is_connected:
        raise ChainComplexError("desuspending a complex with V_0 != 0 leaves non-negative degrees")
    dims = V.dims[1:]
    ds = tuple(-V.d[n] for n in range(1, V.D))
    return ChainComplex(V.field, dims, ds)


def cone_and_desuspend(kind: str, V: ChainComplex) -> ChainComplex:
    if kind == "cone":
        return cone(V)
    if kind == "desuspend":
        return desuspend(V)
    raise ValueError(kind)


@dataclass(frozen=True, eq=False)
class HomComplex:
    """``Hom(X, Y)`` in degrees ``-D..D``; ``complex`` degree ``k`` is Hom degree ``k - shift``."""

    complex: ChainComplex
    shift: int
    layout: tuple[tuple[tuple[int, int, int], ...], ...]  # per index: (p, offset, size)

    def dim(self, n: int) -> int:
        return self.complex.dims[n + self.shift]

    def homology(self) -> dict[int, int]:
        """Exact homology of the (finite) Hom complex of the truncated objects."""
        C = self.complex
        ranks = [0] + [rank(m) for m in C.d] + [0]
        return {k - self.shift: C.dims[k] - ranks[k] - ranks[k + 1] for k in range(C.D + 1)}


def hom_complex(X: ChainComplex, Y: ChainComplex) -> HomComplex:
    """``Hom(X,Y)_n = ∏_p Vct(X_p, Y_{p+n})``, ``(d f)_p = d_Y f_p + (-1)^{n+1} f_{p-1} d_X``."""
    _same_frame(X, Y)
    F, D = X.field, X.D
    layouts = []
    for n in range(-D, D + 1):
        lay, off = [], 0
        for p in range(D + 1):
            if 0 <= p + n <= D:
                s = Y.dims[p + n] * X.dims[p]
                lay.append((p, off, s))
                off += s
        layouts.append(tuple(lay))
    dims = [sum(s for _, _, s in lay) for lay in layouts]
    ds = []
    for k in range(1, 2 * D + 1):
        n = k - D
        tgt = {p: off for p, off, _ in layouts[k - 1]}
        blocks = []
        for p, off, size in layouts[k]:
            if not size:
                continue
            # d_Y ∘ f_p lands in component p of degree n-1
            if p + n >= 1 and p in tgt:
                blocks.append((tgt[p], off, kron(Y.d[p + n - 1], Matrix.identity(F, X.dims[p]))))
            # f_p ∘ d_X contributes to component p+1 of degree n-1
            if p + 1 <= D and (p + 1) in tgt:
                B = kron(Matrix.identity(F, Y.dims[p + n]), X.d[p].T)
                if (n + 1) % 2:
                    B = -B
                blocks.append((tgt[p + 1], off, B))
        ds.append(_assemble(F, dims[k - 1], dims[k], blocks))
    return HomComplex(ChainComplex(F, tuple(dims), tuple(ds)), D, tuple(layouts))


# ---------------------------------------------------------------------------
# Model structure predicates


@dataclass(frozen=True)
class ModelVerdict:
    is_cofibration: bool
    is_fibration: bool
    is_weak_equivalence: bool

    @property
    def is_acyclic_cofibration(self) -> bool:
        return self.is_cofibration and self.is_weak_equivalence

    @property
    def is_acyclic_fibration(self) -> bool:
        return self.is_fibration and self.is_weak_equivalence


def is_weak_equivalence(f: ChainMap) -> bool:
    return induced_homology_map(f).is_iso


def model_predicates(f: ChainMap, variant: str = "DGVct") -> ModelVerdict:
    """Cofibration / fibration / weak equivalence in ``DGVct`` or ``DGVct_c``."""
    if variant == "DGVct":
        inj_from, surj_from = 0, 1
    elif variant == "DGVct_c":
        if not (f.source.is_connected and f.target.is_connected):
            raise ModelVariantError("DGVct_c needs connected source and target")
        inj_from, surj_from = 1, 2
    else:
        raise ModelVariantError(f"unknown variant {variant!r}")
    D = f.source.D
    cof = all(is_injective(f.f[n]) for n in range(inj_from, D + 1))
    fib = all(is_surjective(f.f[n]) for n in range(surj_from, D + 1))
    return ModelVerdict(cof, fib, is_weak_equivalence(f))


def truncate(V: ChainComplex, k: int) -> ChainComplex:
    """Keep degrees ``0..k``."""
    if not 0 <= k <= V.D:
        raise ChainComplexError(f"cannot truncate a D={V.D} complex at {k}")
    return ChainComplex(V.field, V.dims[:k + 1], V.d[:k])


def homology_retraction(X: ChainComplex, n: int, hb: "HomologyBasis | None" = None) -> Matrix:
    """A chain retraction ``X_n -> H_n`` (zero on a complement of the cycles)."""
    from .exactlinalg import complement, hstack, inverse

    hb = hb or homology_basis(X, n)
    F = X.field
    Zb = hb.cycles
    comp = complement(Zb, X.dims[n])
    basis = hstack(F, [Zb, comp], nrows=X.dims[n])
    vals = hstack(F, [hb.classify(Zb), Matrix.zeros(F, hb.dim, comp.ncols)], nrows=hb.dim)
    return vals @ inverse(basis)
