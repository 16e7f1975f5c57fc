"""Exact field arithmetic and sparse linear algebra.

Matrices act on column vectors: an ``m x n`` matrix maps ``K^n -> K^m``.
Storage is a tuple of row dictionaries ``{col: value}`` with no explicit zeros.
Over the rationals scalars are ``gmpy2.mpq``; over GF(p) they are ints in
``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import gmpy2
from gmpy2 import mpq


class FieldError(ValueError):
    pass


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: ``kind`` is ``"Q"`` or ``"GF"`` (with prime ``p``)."""

    kind: str = "Q"
    p: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            if self.p != 0:
                raise FieldError("rationals take no characteristic")
        elif self.kind == "GF":
            if self.p < 2 or not gmpy2.is_prime(self.p):
                raise FieldError(f"GF({self.p}): characteristic must be prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def mod(self) -> int | None:
        return self.p if self.kind == "GF" else None

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "GF" else 0

    @property
    def zero(self):
        return 0 if self.mod else mpq(0)

    @property
    def one(self):
        return 1 if self.mod else mpq(1)

    def __call__(self, x):
        if self.mod:
            if isinstance(x, (Fraction, type(mpq(0)))):
                num, den = int(x.numerator), int(x.denominator)
                return num * pow(den, -1, self.p) % self.p
            if isinstance(x, str):
                return self(self._parse_fraction(x))
            return int(x) % self.p
        if isinstance(x, str):
            return self._parse_fraction(x)
        return mpq(x)

    @staticmethod
    def _parse_fraction(s: str):
        s = s.strip()
        if "/" in s:
            a, b = s.split("/")
            return mpq(int(a), int(b))
        return mpq(int(s))

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.mod:
            return pow(int(x), -1, self.p)
        return 1 / x

    def fmt(self, x) -> str:
        """Serialise a scalar: ``"p/q"`` / ``"n"`` over Q, an integer over GF(p)."""
        if self.mod:
            return str(int(x))
        x = mpq(x)
        if x.denominator == 1:
            return str(int(x.numerator))
        return f"{int(x.numerator)}/{int(x.denominator)}"

    def label(self) -> str:
        return "Q" if self.kind == "Q" else f"GFp:{self.p}"

    @classmethod
    def parse(cls, label: str) -> "FieldSpec":
        label = label.strip()
        if label in ("Q", "QQ"):
            return cls("Q")
        for prefix in ("GFp:", "GF:", "GF"):
            if label.startswith(prefix):
                try:
                    p = int(label[len(prefix):])
                except ValueError:
                    break
                return cls("GF", p)
        raise FieldError(f"cannot parse field spec {label!r}")

    def elements(self):
        """All elements of a prime field (for brute-force oracles)."""
        if not self.mod:
            raise FieldError("the rationals are infinite")
        return list(range(self.p))


QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


def _clean(row: dict, mod: int | None) -> dict:
    if mod:
        return {j: v % mod for j, v in row.items() if v % mod}
    return {j: v for j, v in row.items() if v}


class Matrix:
    """Immutable sparse matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, rows: Sequence[Mapping[int, object]] | None = None,
                 *, _trusted: bool = False):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = tuple({} for _ in range(nrows))
        elif _trusted:
            self.rows = tuple(rows)
        else:
            if len(rows) != nrows:
                raise DimensionError(f"expected {nrows} rows, got {len(rows)}")
            conv = []
            for r in rows:
                d = {}
                for j, v in r.items():
                    if not 0 <= j < ncols:
                        raise DimensionError(f"column {j} out of range for {ncols} columns")
                    v = field(v)
                    if v:
                        d[j] = v
                conv.append(d)
            self.rows = tuple(conv)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> "Matrix":
        return cls(field, m, n, [{} for _ in range(m)], _trusted=True)

    @classmethod
    def identity(cls, field: FieldSpec, n: int, scale=None) -> "Matrix":
        one = field.one if scale is None else field(scale)
        if not one:
            return cls.zeros(field, n, n)
        return cls(field, n, n, [{i: one} for i in range(n)], _trusted=True)

    @classmethod
    def from_dense(cls, field: FieldSpec, data: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        data = [list(r) for r in data]
        m = len(data)
        if ncols is None:
            ncols = len(data[0]) if m else 0
        for r in data:
            if len(r) != ncols:
                raise DimensionError("ragged dense matrix")
        return cls(field, m, ncols, [{j: v for j, v in enumerate(r)} for r in data])

    @classmethod
    def from_entries(cls, field: FieldSpec, m: int, n: int, entries: Mapping[tuple[int, int], object]) -> "Matrix":
        rows = [dict() for _ in range(m)]
        for (i, j), v in entries.items():
            rows[i][j] = v
        return cls(field, m, n, rows)

    @classmethod
    def from_columns(cls, field: FieldSpec, nrows: int, columns: Sequence[Mapping[int, object]]) -> "Matrix":
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rows[i][j] = v
        return cls(field, nrows, len(columns), rows, _trusted=True)

    # -- basic protocol -----------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __repr__(self):
        return f"Matrix({self.field.label()}, {self.nrows}x{self.ncols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self) -> list[list]:
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, tuple(tuple(sorted(r.items())) for r in self.rows)))
        return self._hash

    def is_zero(self) -> bool:
        return not any(self.rows)

    def columns(self) -> list[dict]:
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, self.columns(), _trusted=True)

    # -- arithmetic ---------------------------------------------------
    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        mod = self.field.mod
        rows = []
        for a, b in zip(self.rows, other.rows):
            if not b:
                rows.append(a)
                continue
            d = dict(a)
            for j, v in b.items():
                d[j] = d.get(j, 0) + v
            rows.append(_clean(d, mod))
        return Matrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        if not c:
            return Matrix.zeros(self.field, self.nrows, self.ncols)
        mod = self.field.mod
        if mod:
            rows = [{j: v * c % mod for j, v in r.items()} for r in self.rows]
        else:
            rows = [{j: v * c for j, v in r.items()} for r in self.rows]
        return Matrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        mod = self.field.mod
        brows = other.rows
        out = []
        for r in self.rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in brows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append(_clean(acc, mod))
        return Matrix(self.field, self.nrows, other.ncols, out, _trusted=True)

    def apply(self, vec: Mapping[int, object]) -> dict:
        """Multiply by a sparse column vector ``{index: value}``."""
        cols_needed = vec
        acc: dict = {}
        for i, r in enumerate(self.rows):
            s = 0
            for k, a in r.items():
                b = cols_needed.get(k)
                if b:
                    s += a * b
            if s:
                acc[i] = s
        return _clean(acc, self.field.mod)

    # -- slicing and assembly -----------------------------------------
    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Matrix":
        rsel = range(self.nrows) if rows is None else rows
        if cols is None:
            out = [self.rows[i] for i in rsel]
            return Matrix(self.field, len(out), self.ncols, out, _trusted=True)
        pos = {c: k for k, c in enumerate(cols)}
        out = []
        for i in rsel:
            out.append({pos[j]: v for j, v in self.rows[i].items() if j in pos})
        return Matrix(self.field, len(out), len(cols), out, _trusted=True)

    def row_block(self, start: int, stop: int) -> "Matrix":
        return self.submatrix(rows=range(start, stop))

    def col_block(self, start: int, stop: int) -> "Matrix":
        out = [{j - start: v for j, v in r.items() if start <= j < stop} for r in self.rows]
        return Matrix(self.field, self.nrows, stop - start, out, _trusted=True)

    def embed(self, nrows: int, ncols: int, row_off: int = 0, col_off: int = 0) -> "Matrix":
        """Place this matrix as a block inside a larger zero matrix."""
        rows = [dict() for _ in range(nrows)]
        for i, r in enumerate(self.rows):
            if r:
                rows[i + row_off] = {j + col_off: v for j, v in r.items()}
        return Matrix(self.field, nrows, ncols, rows, _trusted=True)

    def rank(self) -> int:
        return len(rref(self)[0])


def hstack(field: FieldSpec, mats: Sequence[Matrix], nrows: int | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(field, nrows or 0, 0)
    m = mats[0].nrows
    for A in mats:
        if A.nrows != m:
            raise DimensionError("hstack: row counts differ")
    rows = [dict() for _ in range(m)]
    off = 0
    for A in mats:
        for i, r in enumerate(A.rows):
            for j, v in r.items():
                rows[i][j + off] = v
        off += A.ncols
    return Matrix(field, m, off, rows, _trusted=True)


def vstack(field: FieldSpec, mats: Sequence[Matrix], ncols: int | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(field, 0, ncols or 0)
    n = mats[0].ncols
    rows = []
    for A in mats:
        if A.ncols != n:
            raise DimensionError("vstack: column counts differ")
        rows.extend(A.rows)
    return Matrix(field, len(rows), n, rows, _trusted=True)


def block_diag(field: FieldSpec, mats: Sequence[Matrix]) -> Matrix:
    m = sum(A.nrows for A in mats)
    n = sum(A.ncols for A in mats)
    rows = []
    coff = 0
    for A in mats:
        for r in A.rows:
            rows.append({j + coff: v for j, v in r.items()})
        coff += A.ncols
    return Matrix(field, m, n, rows, _trusted=True)


def kron(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product, row-major: index ``(i, k) -> i * B.nrows + k``."""
    mod = A.field.mod
    bn, bm = B.ncols, B.nrows
    rows = []
    for ra in A.rows:
        for rb in B.rows:
            if not ra or not rb:
                rows.append({})
                continue
            d = {}
            for j, a in ra.items():
                base = j * bn
                for l, b in rb.items():
                    d[base + l] = a * b
            rows.append(_clean(d, mod) if mod else d)
    return Matrix(A.field, A.nrows * bm, A.ncols * bn, rows, _trusted=True)


def kron_many(mats: Sequence[Matrix], field: FieldSpec) -> Matrix:
    out = Matrix.identity(field, 1)
    for A in mats:
        out = kron(out, A)
    return out


def kron_matmul(P: Matrix, Q: Matrix, M: Matrix) -> Matrix:
    """``kron(P, Q) @ M`` without materialising the Kronecker product."""
    if M.nrows != P.ncols * Q.ncols:
        raise DimensionError("kron_matmul: inner dimensions differ")
    mod = P.field.mod
    pcols = P.columns()
    qcols = Q.columns()
    qn, qm = Q.ncols, Q.nrows
    out_cols = []
    for col in M.columns():
        acc: dict = {}
        for idx, v in col.items():
            i, j = divmod(idx, qn)
            pc, qc = pcols[i], qcols[j]
            if not pc or not qc:
                continue
            for a, pa in pc.items():
                base = a * qm
                w = v * pa
                for b, qb in qc.items():
                    key = base + b
                    acc[key] = acc.get(key, 0) + w * qb
        out_cols.append(_clean(acc, mod))
    return Matrix.from_columns(P.field, P.nrows * Q.nrows, out_cols)


# ---------------------------------------------------------------------------
# Elimination


def rref(M: Matrix, pivot_limit: int | None = None) -> tuple[list[tuple[int, dict]], bool]:
    """Gauss-Jordan elimination of the rows of ``M``.

    Pivots are only chosen among columns ``< pivot_limit``. Returns the list of
    ``(pivot_col, row)`` sorted by pivot column, each row normalised to 1 at its
    pivot and zero at every other pivot column, plus a flag telling whether some
    row reduced to something supported only on columns ``>= pivot_limit``.
    """
    F = M.field
    mod = F.mod
    limit = M.ncols if pivot_limit is None else pivot_limit
    pivots: dict[int, dict] = {}
    overflow = False
    for r in M.rows:
        if not r:
            continue
        row = dict(r)
        hits = [c for c in row if c in pivots]
        for c in hits:
            f = row.get(c)
            if not f:
                continue
            for j, v in pivots[c].items():
                row[j] = row.get(j, 0) - f * v
            row = _clean(row, mod)
        if not row:
            continue
        cands = [c for c in row if c < limit]
        if not cands:
            overflow = True
            continue
        pc = min(cands)
        inv = F.inv(row[pc])
        if mod:
            row = {j: v * inv % mod for j, v in row.items()}
        else:
            row = {j: v * inv for j, v in row.items()}
        for c, prow in pivots.items():
            f = prow.get(pc)
            if f:
                for j, v in row.items():
                    prow[j] = prow.get(j, 0) - f * v
                pivots[c] = _clean(prow, mod)
        pivots[pc] = row
    return sorted(pivots.items()), overflow


def rank(M: Matrix) -> int:
    return len(rref(M)[0])


def kernel_basis(M: Matrix) -> Matrix:
    """Columns form a basis of ``ker M``; identity on the free coordinates."""
    F = M.field
    piv, _ = rref(M)
    pcols = {c for c, _ in piv}
    free = [j for j in range(M.ncols) if j not in pcols]
    fpos = {f: k for k, f in enumerate(free)}
    rows = [dict() for _ in range(M.ncols)]
    one = F.one
    mod = F.mod
    for f, k in fpos.items():
        rows[f][k] = one
    for c, row in piv:
        d = {}
        for j, v in row.items():
            if j != c and j in fpos:
                d[fpos[j]] = (-v) % mod if mod else -v
        rows[c] = d
    return Matrix(F, M.ncols, len(free), rows, _trusted=True)


def image_basis(M: Matrix) -> Matrix:
    """Columns form a basis of the column space of ``M`` (reduced form)."""
    piv, _ = rref(M.T)
    cols = [row for _, row in piv]
    return Matrix.from_columns(M.field, M.nrows, cols)


def solve(A: Matrix, B: Matrix) -> Matrix | None:
    """Some ``X`` with ``A @ X == B``, or ``None`` when the system is inconsistent."""
    if A.nrows != B.nrows:
        raise DimensionError("solve: row counts differ")
    F = A.field
    n = A.ncols
    aug = hstack(F, [A, B])
    piv, overflow = rref(aug, pivot_limit=n)
    if overflow:
        return None
    rows = [dict() for _ in range(n)]
    for c, row in piv:
        rows[c] = {j - n: v for j, v in row.items() if j >= n}
    return Matrix(F, n, B.ncols, rows, _trusted=True)


def inverse(A: Matrix) -> Matrix:
    if A.nrows != A.ncols:
        raise DimensionError("inverse of a non-square matrix")
    X = solve(A, Matrix.identity(A.field, A.nrows))
    if X is None or rank(A) != A.nrows:
        raise ZeroDivisionError("matrix is singular")
    return X


def is_injective(A: Matrix) -> bool:
    return rank(A) == A.ncols


def is_surjective(A: Matrix) -> bool:
    return rank(A) == A.nrows


def is_invertible(A: Matrix) -> bool:
    return A.nrows == A.ncols and rank(A) == A.nrows


def left_inverse(B: Matrix) -> Matrix:
    """``L`` with ``L @ B == I`` for a matrix of full column rank."""
    F = B.field
    piv, _ = rref(B.T)
    if len(piv) != B.ncols:
        raise DimensionError("left_inverse: columns are dependent")
    sel = [c for c, _ in piv]
    Binv = inverse(B.submatrix(rows=sel))
    rows = [{sel[k]: v for k, v in r.items()} for r in Binv.rows]
    return Matrix(F, B.ncols, B.nrows, rows, _trusted=True)


def coordinates(B: Matrix, V: Matrix) -> Matrix:
    """Coordinates of the columns of ``V`` in the basis ``B``; raises if not in span."""
    X = solve(B, V)
    if X is None:
        raise DimensionError("vectors do not lie in the given span")
    return X


# ---------------------------------------------------------------------------
# Subspaces


def span_contains(U: Matrix, V: Matrix) -> bool:
    return rank(hstack(U.field, [U, V])) == rank(U)


def intersection(U: Matrix, W: Matrix) -> Matrix:
    if U.nrows != W.nrows:
        raise DimensionError("intersection: ambient dimensions differ")
    F = U.field
    Z = kernel_basis(hstack(F, [U, -W]))
    return image_basis(U @ Z.row_block(0, U.ncols))


def subspace_sum(*spaces: Matrix) -> Matrix:
    n = {S.nrows for S in spaces}
    if len(n) != 1:
        raise DimensionError("sum: ambient dimensions differ")
    return image_basis(hstack(spaces[0].field, list(spaces)))


def complement(U: Matrix, ambient: int | None = None) -> Matrix:
    """Standard basis vectors completing the column span of ``U`` to the ambient space."""
    n = U.nrows if ambient is None else ambient
    if U.nrows != n:
        raise DimensionError("complement: ambient dimension mismatch")
    piv, _ = rref(U.T)
    used = {c for c, _ in piv}
    free = [j for j in range(n) if j not in used]
    return Matrix.from_columns(U.field, n, [{j: U.field.one} for j in free])


@dataclass(frozen=True)
class Quotient:
    """``V / U`` for ``V = K^ambient``: projection ``V -> Q`` and a section ``Q -> V``."""

    sub: Matrix
    projection: Matrix
    section: Matrix

    @property
    def dim(self) -> int:
        return self.projection.nrows


def quotient(U: Matrix, ambient: int | None = None) -> Quotient:
    F = U.field
    n = U.nrows if ambient is None else ambient
    Ub = image_basis(U) if U.ncols else Matrix.zeros(F, n, 0)
    C = complement(Ub, n)
    basis = hstack(F, [Ub, C])
    inv = inverse(basis) if n else Matrix.zeros(F, 0, 0)
    proj = inv.row_block(Ub.ncols, n)
    return Quotient(Ub, proj, C)


def induced_map_on_quotient(f: Matrix, source: Quotient, target: Quotient) -> Matrix:
    """The map ``V/U -> V'/U'`` induced by ``f``; requires ``f(U) ⊆ U'``."""
    if not (target.projection @ f @ source.sub).is_zero():
        raise DimensionError("map does not preserve the subspaces")
    return target.projection @ f @ source.section


# ---------------------------------------------------------------------------
# Affine systems in unknown matrices


@dataclass(frozen=True)
class Term:
    """``left @ X[name] @ right``; ``None`` means identity."""

    name: str
    left: Matrix | None = None
    right: Matrix | None = None


@dataclass
class LinearSystem:
    field: FieldSpec
    unknowns: dict[str, tuple[int, int]]
    offsets: dict[str, int]
    A: Matrix
    b: Matrix

    @property
    def nvars(self) -> int:
        return self.A.ncols

    def unpack(self, z: Mapping[int, object]) -> dict[str, Matrix]:
        out = {}
        for name, (r, c) in self.unknowns.items():
            off = self.offsets[name]
            ent = {}
            for k in range(r * c):
                v = z.get(off + k)
                if v:
                    ent[divmod(k, c)] = v
            out[name] = Matrix.from_entries(self.field, r, c, ent)
        return out


def build_system(field: FieldSpec, unknowns: Mapping[str, tuple[int, int]],
                 constraints: Iterable[tuple[Sequence[Term], Matrix | None]]) -> LinearSystem:
    """Assemble ``sum_k L_k X_k R_k = B`` constraints into one system ``A z = b``.

    ``vec`` is row-major, so ``vec(L X R) = (L ⊗ R^T) vec(X)``.
    """
    offsets = {}
    off = 0
    for name, (r, c) in unknowns.items():
        offsets[name] = off
        off += r * c
    nvars = off
    rows: list[dict] = []
    rhs: list[dict] = []
    mod = field.mod
    for terms, B in constraints:
        blocks = []
        shape = None
        for t in terms:
            r, c = unknowns[t.name]
            L = t.left if t.left is not None else Matrix.identity(field, r)
            R = t.right if t.right is not None else Matrix.identity(field, c)
            if L.ncols != r or R.nrows != c:
                raise DimensionError(f"term on {t.name}: shapes do not match unknown {r}x{c}")
            shp = (L.nrows, R.ncols)
            if shape is None:
                shape = shp
            elif shape != shp:
                raise DimensionError("constraint terms have different shapes")
            blocks.append((offsets[t.name], kron(L, R.T)))
        if shape is None:
            continue
        if B is not None and B.shape != shape:
            raise DimensionError(f"right-hand side has shape {B.shape}, expected {shape}")
        nr = shape[0] * shape[1]
        local = [dict() for _ in range(nr)]
        for o, K in blocks:
            for i, r in enumerate(K.rows):
                if r:
                    d = local[i]
                    for j, v in r.items():
                        d[j + o] = d.get(j + o, 0) + v
        rows.extend(_clean(d, mod) for d in local)
        if B is None:
            rhs.extend({} for _ in range(nr))
        else:
            for i in range(shape[0]):
                for j in range(shape[1]):
                    v = B.rows[i].get(j)
                    rhs.append({0: v} if v else {})
    A = Matrix(field, len(rows), nvars, rows, _trusted=True)
    b = Matrix(field, len(rhs), 1, rhs, _trusted=True)
    return LinearSystem(field, dict(unknowns), offsets, A, b)


def solve_affine(field: FieldSpec, unknowns: Mapping[str, tuple[int, int]],
                 constraints: Iterable[tuple[Sequence[Term], Matrix | None]]) -> dict[str, Matrix] | None:
    """One exact solution of the constraint family, or ``None`` if inconsistent."""
    sys_ = build_system(field, unknowns, constraints)
    z = solve(sys_.A, sys_.b)
    if z is None:
        return None
    return sys_.unpack({i: r[0] for i, r in enumerate(z.rows) if r})


def solution_space(field: FieldSpec, unknowns: Mapping[str, tuple[int, int]],
                   constraints: Iterable[tuple[Sequence[Term], Matrix | None]]) -> list[dict[str, Matrix]]:
    """Basis of the solutions of the homogeneous system (right-hand sides ignored)."""
    sys_ = build_system(field, unknowns, constraints)
    K = kernel_basis(sys_.A)
    return [sys_.unpack(col) for col in K.columns()]
