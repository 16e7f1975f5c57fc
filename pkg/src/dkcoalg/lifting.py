"""Lifting problems for chain maps.

A lift in a commuting square is the solution of a linear system, so both ``find_lift``
and ``has_llp`` are exact.  ``has_llp`` quantifies over all commuting squares by solving
for a lift on each element of a basis of the space of squares: lifts add, so a basis
suffices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Sequence

from .chain import (
    ChainComplex,
    ChainMap,
    direct_sum,
    disk,
    homology,
    induced_homology_map,
    sphere,
    zero_complex,
)
from .exactlinalg import FieldError, Matrix, Term, image_basis, is_injective, quotient, solution_space, solve_affine


class LiftingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LiftingSquare:
    """``h : A -> X`` on top, ``k : B -> Y`` at the bottom, ``f : A -> B`` left, ``p : X -> Y`` right."""

    left: ChainMap
    right: ChainMap
    top: ChainMap
    bottom: ChainMap

    def __post_init__(self):
        f, p, h, k = self.left, self.right, self.top, self.bottom
        if h.source is not f.source and not h.source.same_as(f.source):
            raise LiftingError("top and left maps must share their source")
        for n in range(f.source.D + 1):
            if p.f[n] @ h.f[n] != k.f[n] @ f.f[n]:
                raise LiftingError(f"square does not commute in degree {n}")


def _lift_constraints(f: ChainMap, p: ChainMap, h: Sequence[Matrix], k: Sequence[Matrix]):
    B, X = f.target, p.source
    cons = []
    for n in range(B.D + 1):
        cons.append(([Term(f"L{n}", None, f.f[n])], h[n]))
        cons.append(([Term(f"L{n}", p.f[n], None)], k[n]))
        if n >= 1:
            cons.append(([Term(f"L{n - 1}", None, B.d[n - 1]), Term(f"L{n}", -X.d[n - 1], None)], None))
    return cons


def find_lift(sq: LiftingSquare) -> ChainMap | None:
    """A chain map ``L : B -> X`` with ``L f = h`` and ``p L = k``, or ``None``."""
    f, p = sq.left, sq.right
    B, X = f.target, p.source
    F = B.field
    unknowns = {f"L{n}": (X.dims[n], B.dims[n]) for n in range(B.D + 1)}
    sol = solve_affine(F, unknowns, _lift_constraints(f, p, sq.top.f, sq.bottom.f))
    if sol is None:
        return None
    L = ChainMap(B, X, tuple(sol[f"L{n}"] for n in range(B.D + 1)))
    for n in range(B.D + 1):
        assert L.f[n] @ f.f[n] == sq.top.f[n] and p.f[n] @ L.f[n] == sq.bottom.f[n]
    return L


def commuting_squares(f: ChainMap, p: ChainMap) -> list[tuple[ChainMap, ChainMap]]:
    """A basis of the space of pairs ``(h, k)`` of chain maps with ``p h = k f``."""
    A, B, X, Y = f.source, f.target, p.source, p.target
    F = A.field
    unknowns = {}
    for n in range(A.D + 1):
        unknowns[f"h{n}"] = (X.dims[n], A.dims[n])
        unknowns[f"k{n}"] = (Y.dims[n], B.dims[n])
    cons = []
    for n in range(A.D + 1):
        cons.append(([Term(f"h{n}", p.f[n], None), Term(f"k{n}", None, -f.f[n])], None))
        if n >= 1:
            cons.append(([Term(f"h{n}", X.d[n - 1], None), Term(f"h{n - 1}", None, -A.d[n - 1])], None))
            cons.append(([Term(f"k{n}", Y.d[n - 1], None), Term(f"k{n - 1}", None, -B.d[n - 1])], None))
    out = []
    for s in solution_space(F, unknowns, cons):
        h = ChainMap(A, X, tuple(s[f"h{n}"] for n in range(A.D + 1)), check=False)
        k = ChainMap(B, Y, tuple(s[f"k{n}"] for n in range(A.D + 1)), check=False)
        out.append((h, k))
    return out


def has_rlp_square_basis(f: ChainMap, p: ChainMap) -> bool:
    """``f`` lifts against ``p`` in every commuting square."""
    for h, k in commuting_squares(f, p):
        if find_lift(LiftingSquare(f, p, h, k)) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# Generating families


def family_maps(kind: str, D: int, field, bound: int | None = None) -> list[ChainMap]:
    """``Q = {𝔻ⁿ -> 0}`` or ``P = Q ∪ {𝔻ⁿ -> 𝕊ⁿ}`` for ``1 <= n <= bound``."""
    bound = D if bound is None else bound
    if not 1 <= bound <= D:
        raise LiftingError(f"degree bound {bound} outside 1..{D}")
    Z = zero_complex(field, D)
    out = []
    for n in range(1, bound + 1):
        Dn = disk(n, D, field)
        out.append(ChainMap(Dn, Z, tuple(Matrix.zeros(field, 0, k) for k in Dn.dims)))
        if kind == "P":
            Sn = sphere(n, D, field)
            mats = tuple(Matrix.identity(field, 1) if m == n else Matrix.zeros(field, Sn.dims[m], Dn.dims[m])
                         for m in range(D + 1))
            out.append(ChainMap(Dn, Sn, mats))
        elif kind != "Q":
            raise LiftingError(f"unknown family {kind!r}")
    return out


def has_llp(f: ChainMap, family: str | Iterable[ChainMap] = "Q", degree_bound: int | None = None) -> bool:
    D = f.source.D
    if f.source.dims[D] or f.target.dims[D]:
        raise LiftingError("has_llp needs maps supported in degrees <= D-1")
    maps = family_maps(family, D, f.field, degree_bound) if isinstance(family, str) else list(family)
    return all(has_rlp_square_basis(f, p) for p in maps)


# ---------------------------------------------------------------------------
# Cokernels and pushouts


def cokernel(f: ChainMap) -> tuple[ChainComplex, ChainMap]:
    B, F = f.target, f.field
    qs = [quotient(image_basis(m), B.dims[n]) for n, m in enumerate(f.f)]
    d = tuple(qs[n - 1].projection @ B.d[n - 1] @ qs[n].section for n in range(1, B.D + 1))
    C = ChainComplex(F, tuple(q.dim for q in qs), d)
    return C, ChainMap(B, C, tuple(q.projection for q in qs))


def pushout(f: ChainMap, g: ChainMap) -> tuple[ChainComplex, ChainMap, ChainMap]:
    """``B ⊔_A C = (B ⊕ C) / im(f, -g)`` for ``f : A -> B``, ``g : A -> C``."""
    from .exactlinalg import vstack

    S = direct_sum(f.target, g.target)
    F = f.field
    diff = ChainMap(f.source, S.total, tuple(vstack(F, [f.f[n], -g.f[n]], ncols=f.source.dims[n])
                                             for n in range(f.source.D + 1)))
    P, q = cokernel(diff)
    return P, q @ S.inclusions[0], q @ S.inclusions[1]


def zero_map(source: ChainComplex, target: ChainComplex) -> ChainMap:
    F = source.field
    return ChainMap(source, target, tuple(Matrix.zeros(F, target.dims[n], source.dims[n]) for n in range(source.D + 1)))


@dataclass
class PushoutReport:
    f_in_p_proj: bool
    pushout_in_p_proj: bool

    @property
    def consistent(self) -> bool:
        return (not self.f_in_p_proj) or self.pushout_in_p_proj


def pushout_instance(f: ChainMap, degree_bound: int | None = None) -> PushoutReport:
    """The square ``A -> 0``, ``B -> coker f``: if ``f`` is in P-proj so is ``0 -> coker f``."""
    A = f.source
    Z = zero_complex(f.field, A.D)
    P, jB, j0 = pushout(f, zero_map(A, Z))
    return PushoutReport(has_llp(f, "P", degree_bound), has_llp(j0, "P", degree_bound))


# ---------------------------------------------------------------------------
# Characterizations


def coker_acyclic_above_zero(f: ChainMap) -> bool:
    C, _ = cokernel(f)
    return not any(homology(C).dims[1:C.D])


@dataclass
class CharacterizationSample:
    f: ChainMap
    injective: bool
    quasi_iso: bool
    llp_q: bool
    llp_p: bool
    coker_acyclic_positive: bool

    @property
    def q_ok(self) -> bool:
        return self.llp_q == self.injective

    @property
    def p_ok(self) -> bool:
        return self.llp_p == (self.injective and self.quasi_iso)

    @property
    def p_corrected_ok(self) -> bool:
        return self.llp_p == (self.injective and self.coker_acyclic_positive)


@dataclass
class CharacterizationReport:
    samples: list[CharacterizationSample] = field(default_factory=list)

    @property
    def q_ok(self) -> bool:
        return all(s.q_ok for s in self.samples)

    @property
    def p_ok(self) -> bool:
        return all(s.p_ok for s in self.samples)

    @property
    def p_corrected_ok(self) -> bool:
        return all(s.p_corrected_ok for s in self.samples)

    def p_failures(self) -> list[CharacterizationSample]:
        return [s for s in self.samples if not s.p_ok]


def characterize(f: ChainMap, degree_bound: int | None = None) -> CharacterizationSample:
    inj = all(is_injective(m) for m in f.f)
    qi = induced_homology_map(f).is_iso
    return CharacterizationSample(f, inj, qi, has_llp(f, "Q", degree_bound), has_llp(f, "P", degree_bound),
                                  coker_acyclic_above_zero(f) if inj else False)


def characterization_suite(samples: Iterable[ChainMap], degree_bound: int | None = None) -> CharacterizationReport:
    return CharacterizationReport([characterize(f, degree_bound) for f in samples])


# ---------------------------------------------------------------------------
# Brute force over a prime field (independent oracle)


def _all_matrices(F, r: int, c: int):
    for vals in iproduct(range(F.p), repeat=r * c):
        yield Matrix.from_dense(F, [list(vals[i * c:(i + 1) * c]) for i in range(r)], ncols=c)


def _all_level_maps(F, S: ChainComplex, T: ChainComplex):
    spaces = [list(_all_matrices(F, T.dims[n], S.dims[n])) for n in range(S.D + 1)]
    for mats in iproduct(*spaces):
        yield mats


def _is_chain(S: ChainComplex, T: ChainComplex, mats) -> bool:
    return all(T.d[n - 1] @ mats[n] == mats[n - 1] @ S.d[n - 1] for n in range(1, S.D + 1))


def brute_force_lift_exists(sq: LiftingSquare) -> bool:
    f, p = sq.left, sq.right
    B, X = f.target, p.source
    F = B.field
    if F.mod is None:
        raise FieldError("brute force needs a finite field")
    for mats in _all_level_maps(F, B, X):
        if not _is_chain(B, X, mats):
            continue
        if all(mats[n] @ f.f[n] == sq.top.f[n] and p.f[n] @ mats[n] == sq.bottom.f[n] for n in range(B.D + 1)):
            return True
    return False


def brute_force_llp(f: ChainMap, p: ChainMap) -> bool:
    """Enumerate every commuting square and every candidate lift."""
    A, B, X, Y = f.source, f.target, p.source, p.target
    F = A.field
    hs = [m for m in _all_level_maps(F, A, X) if _is_chain(A, X, m)]
    ks = [m for m in _all_level_maps(F, B, Y) if _is_chain(B, Y, m)]
    lifts = [m for m in _all_level_maps(F, B, X) if _is_chain(B, X, m)]
    for h in hs:
        for k in ks:
            if any(p.f[n] @ h[n] != k[n] @ f.f[n] for n in range(A.D + 1)):
                continue
            if not any(all(L[n] @ f.f[n] == h[n] and p.f[n] @ L[n] == k[n] for n in range(B.D + 1)) for L in lifts):
                return False
    return True
