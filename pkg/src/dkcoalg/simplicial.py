"""Truncated simplicial vector spaces (levels ``0..D``)."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactlinalg import DimensionError, FieldSpec, Matrix, is_injective, kron


class SimplicialIdentityError(ValueError):
    pass


def _check(ok: bool, name: str, level: int):
    if not ok:
        raise SimplicialIdentityError(f"simplicial identity {name} fails at level {level}")


@dataclass(frozen=True, eq=False)
class SimplicialVectorSpace:
    field: FieldSpec
    dims: tuple[int, ...]
    faces: tuple[tuple[Matrix, ...], ...]  # faces[n-1][i] = d_i : X_n -> X_{n-1}
    degens: tuple[tuple[Matrix, ...], ...]  # degens[n][i] = s_i : X_n -> X_{n+1}
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        object.__setattr__(self, "degens", tuple(tuple(s) for s in self.degens))
        object.__setattr__(self, "_ops", {})
        D = self.D
        if len(self.faces) != D or len(self.degens) != D:
            raise SimplicialIdentityError("need faces for levels 1..D and degeneracies for levels 0..D-1")
        for n in range(1, D + 1):
            if len(self.faces[n - 1]) != n + 1:
                raise SimplicialIdentityError(f"level {n} needs {n + 1} faces")
            for i, m in enumerate(self.faces[n - 1]):
                if m.shape != (self.dims[n - 1], self.dims[n]):
                    raise SimplicialIdentityError(f"d_{i} at level {n} has shape {m.shape}")
        for n in range(D):
            if len(self.degens[n]) != n + 1:
                raise SimplicialIdentityError(f"level {n} needs {n + 1} degeneracies")
            for i, m in enumerate(self.degens[n]):
                if m.shape != (self.dims[n + 1], self.dims[n]):
                    raise SimplicialIdentityError(f"s_{i} at level {n} has shape {m.shape}")
        if self.check:
            self.verify_identities()

    @property
    def D(self) -> int:
        return len(self.dims) - 1

    def face(self, n: int, i: int) -> Matrix:
        """``d_i : X_n -> X_{n-1}``."""
        return self.faces[n - 1][i]

    def degen(self, n: int, i: int) -> Matrix:
        """``s_i : X_n -> X_{n+1}``."""
        return self.degens[n][i]

    def verify_identities(self):
        D = self.D
        d, s = self.face, self.degen
        for n in range(2, D + 1):
            for j in range(n + 1):
                for i in range(j):
                    _check(d(n - 1, i) @ d(n, j) == d(n - 1, j - 1) @ d(n, i), "d_i d_j = d_{j-1} d_i", n)
        for n in range(D):
            # d_i s_j at level n (s_j: X_n -> X_{n+1}, d_i: X_{n+1} -> X_n)
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = d(n + 1, i) @ s(n, j)
                    if i < j:
                        rhs = s(n - 1, j - 1) @ d(n, i)
                        _check(lhs == rhs, "d_i s_j = s_{j-1} d_i", n + 1)
                    elif i in (j, j + 1):
                        _check(lhs == Matrix.identity(self.field, self.dims[n]), "d_j s_j = d_{j+1} s_j = id", n + 1)
                    else:
                        rhs = s(n - 1, j) @ d(n, i - 1)
                        _check(lhs == rhs, "d_i s_j = s_j d_{i-1}", n + 1)
            if n + 1 < D:
                for j in range(n + 1):
                    for i in range(j + 1):
                        _check(s(n + 1, i) @ s(n, j) == s(n + 1, j + 1) @ s(n, i), "s_i s_j = s_{j+1} s_i", n + 2)

    def operator(self, theta: Sequence[int]) -> Matrix:
        """``θ^* : X_n -> X_m`` for a monotone ``θ : [m] -> [n]`` (given as its value tuple).

        The target level ``n`` is taken as ``max(θ)`` unless ``θ`` is padded via :meth:`operator_to`.
        """
        theta = tuple(theta)
        return self.operator_to(theta, max(theta) if theta else 0)

    def operator_to(self, theta: tuple[int, ...], n: int) -> Matrix:
        key = (theta, n)
        ops = self._ops
        if key in ops:
            return ops[key]
        m = len(theta) - 1
        if any(theta[i] > theta[i + 1] for i in range(m)) or (theta and (theta[0] < 0 or theta[-1] > n)):
            raise ValueError(f"{theta} is not a monotone map [{m}] -> [{n}]")
        if n > self.D or m > self.D:
            raise IndexError("operator outside the truncation")
        image = set(theta)
        missing = next((i for i in range(n + 1) if i not in image), None)
        if missing is not None:
            # θ = δ_i ∘ θ', so θ^* = θ'^* ∘ d_i
            rest = tuple(t if t < missing else t - 1 for t in theta)
            out = self.operator_to(rest, n - 1) @ self.face(n, missing)
        else:
            rep = next((i for i in range(m) if theta[i] == theta[i + 1]), None)
            if rep is None:
                out = Matrix.identity(self.field, self.dims[n])
            else:
                # θ = θ' ∘ σ_i, so θ^* = s_i ∘ θ'^*
                rest = theta[: rep + 1] + theta[rep + 2:]
                out = self.degen(m - 1, rep) @ self.operator_to(rest, n)
        ops[key] = out
        return out

    def same_as(self, other: "SimplicialVectorSpace") -> bool:
        return (self.field == other.field and self.dims == other.dims
                and self.faces == other.faces and self.degens == other.degens)

    @property
    def is_connected(self) -> bool:
        return self.dims[0] == 0

    def __repr__(self):
        return f"SimplicialVectorSpace({self.field.label()}, dims={self.dims})"


def constant_unit(D: int, field: FieldSpec) -> SimplicialVectorSpace:
    """``I(K)``: ``K`` in each level with identity operators."""
    one = Matrix.identity(field, 1)
    faces = [[one] * (n + 1) for n in range(1, D + 1)]
    degens = [[one] * (n + 1) for n in range(D)]
    return SimplicialVectorSpace(field, (1,) * (D + 1), faces, degens)


def zero_simplicial(D: int, field: FieldSpec) -> SimplicialVectorSpace:
    z = Matrix.zeros(field, 0, 0)
    return SimplicialVectorSpace(field, (0,) * (D + 1), [[z] * (n + 1) for n in range(1, D + 1)],
                                 [[z] * (n + 1) for n in range(D)])


def _same_frame(X: SimplicialVectorSpace, Y: SimplicialVectorSpace):
    if X.field != Y.field:
        raise DimensionError("simplicial objects over different fields")
    if X.D != Y.D:
        raise DimensionError(f"truncation mismatch: {X.D} vs {Y.D}")


def level_tensor(X: SimplicialVectorSpace, Y: SimplicialVectorSpace, check: bool = True) -> SimplicialVectorSpace:
    """``(X ⊗̂ Y)_n = X_n ⊗ Y_n`` with ``d_i ⊗ d_i`` and ``s_i ⊗ s_i``."""
    _same_frame(X, Y)
    dims = tuple(a * b for a, b in zip(X.dims, Y.dims))
    faces = [[kron(X.face(n, i), Y.face(n, i)) for i in range(n + 1)] for n in range(1, X.D + 1)]
    degens = [[kron(X.degen(n, i), Y.degen(n, i)) for i in range(n + 1)] for n in range(X.D)]
    return SimplicialVectorSpace(X.field, dims, faces, degens, check=check)


def level_direct_sum(X: SimplicialVectorSpace, Y: SimplicialVectorSpace) -> SimplicialVectorSpace:
    from .exactlinalg import block_diag

    _same_frame(X, Y)
    F = X.field
    dims = tuple(a + b for a, b in zip(X.dims, Y.dims))
    faces = [[block_diag(F, [X.face(n, i), Y.face(n, i)]) for i in range(n + 1)] for n in range(1, X.D + 1)]
    degens = [[block_diag(F, [X.degen(n, i), Y.degen(n, i)]) for i in range(n + 1)] for n in range(X.D)]
    return SimplicialVectorSpace(F, dims, faces, degens)


def change_basis(X: SimplicialVectorSpace, g: Sequence[Matrix], g_inv: Sequence[Matrix]) -> SimplicialVectorSpace:
    """Transport the structure along levelwise isomorphisms ``g_n : X_n -> Y_n``."""
    faces = [[g[n - 1] @ X.face(n, i) @ g_inv[n] for i in range(n + 1)] for n in range(1, X.D + 1)]
    degens = [[g[n + 1] @ X.degen(n, i) @ g_inv[n] for i in range(n + 1)] for n in range(X.D)]
    return SimplicialVectorSpace(X.field, X.dims, faces, degens)


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    source: SimplicialVectorSpace
    target: SimplicialVectorSpace
    f: tuple[Matrix, ...]
    check: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        _same_frame(self.source, self.target)
        if len(self.f) != self.source.D + 1:
            raise SimplicialIdentityError("a simplicial map needs one matrix per level")
        for n, m in enumerate(self.f):
            if m.shape != (self.target.dims[n], self.source.dims[n]):
                raise SimplicialIdentityError(f"f_{n} has shape {m.shape}")
        if self.check:
            bad = self.first_failure()
            if bad is not None:
                raise SimplicialIdentityError(f"not a simplicial map: {bad}")

    def first_failure(self) -> str | None:
        X, Y, f = self.source, self.target, self.f
        for n in range(1, X.D + 1):
            for i in range(n + 1):
                if Y.face(n, i) @ f[n] != f[n - 1] @ X.face(n, i):
                    return f"face d_{i} at level {n}"
        for n in range(X.D):
            for i in range(n + 1):
                if Y.degen(n, i) @ f[n] != f[n + 1] @ X.degen(n, i):
                    return f"degeneracy s_{i} at level {n}"
        return None

    @property
    def field(self) -> FieldSpec:
        return self.source.field

    def __matmul__(self, other: "SimplicialMap") -> "SimplicialMap":
        return SimplicialMap(other.source, self.target, tuple(a @ b for a, b in zip(self.f, other.f)), check=False)

    def equals(self, other: "SimplicialMap") -> bool:
        return all(a == b for a, b in zip(self.f, other.f))


def identity_simplicial_map(X: SimplicialVectorSpace) -> SimplicialMap:
    return SimplicialMap(X, X, tuple(Matrix.identity(X.field, k) for k in X.dims), check=False)


def level_tensor_maps(f: SimplicialMap, g: SimplicialMap, source=None, target=None) -> SimplicialMap:
    src = source if source is not None else level_tensor(f.source, g.source)
    tgt = target if target is not None else level_tensor(f.target, g.target)
    return SimplicialMap(src, tgt, tuple(kron(a, b) for a, b in zip(f.f, g.f)), check=False)


def level_swap(X: SimplicialVectorSpace, Y: SimplicialVectorSpace) -> SimplicialMap:
    """The levelwise symmetry ``X ⊗̂ Y -> Y ⊗̂ X``."""
    mats = []
    for a, b in zip(X.dims, Y.dims):
        mats.append(Matrix.from_entries(X.field, a * b, a * b, {(j * a + i, i * b + j): 1 for i in range(a) for j in range(b)}))
    return SimplicialMap(level_tensor(X, Y), level_tensor(Y, X), tuple(mats))


@dataclass(frozen=True)
class SVctVerdict:
    is_cofibration: bool
    is_weak_equivalence: bool

    @property
    def is_acyclic_cofibration(self) -> bool:
        return self.is_cofibration and self.is_weak_equivalence


def svct_predicates(f: SimplicialMap) -> SVctVerdict:
    """Cofibration = levelwise injection; weak equivalence = ``H_* N f`` iso in degrees ``< D``."""
    from .chain import is_weak_equivalence
    from .doldkan import normalize_map

    cof = all(is_injective(m) for m in f.f)
    return SVctVerdict(cof, is_weak_equivalence(normalize_map(f)))


def truncate_simplicial(X: SimplicialVectorSpace, k: int) -> SimplicialVectorSpace:
    """Keep levels ``0..k``."""
    if not 0 <= k <= X.D:
        raise DimensionError(f"cannot truncate a D={X.D} object at {k}")
    return SimplicialVectorSpace(X.field, X.dims[:k + 1], X.faces[:k], X.degens[:k], check=False)
