"""Named verification suites, one per acceptance criterion.

Each suite draws its instances from a seeded ``random.Random`` and returns a
``SuiteReport`` listing every check with its verdict.  The CLI ``verify`` command and the
acceptance tests both call into this module.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .chain import (
    ChainMap,
    cone,
    homology,
    induced_homology_map,
    sphere,
    tensor,
    zero_complex,
)
from .coalg import (
    CoalgebraAxiomError,
    check_coalgebra_axioms,
    check_simplicial_coalgebra_axioms,
    constant_coalgebra,
    counit_is_coalgebra_iso,
    gamma_tilde,
    identity_coalgebra_map,
    lemma_square_check,
    n_tilde,
    eta_square_counterexample,
    unit_coalgebra,
)
from .doldkan import alexander_whitney, epsilon, eta, gamma_map, normalize_map, shuffle
from .exactlinalg import GF, FieldSpec, Matrix, is_invertible
from .generators import (
    coaugmentation,
    constant_map,
    random_chain_map,
    random_complex,
    random_connected_coalgebra,
    random_connected_coalgebra_map,
    random_injection,
    random_simplicial,
    random_simplicial_with_map,
    transport_simplicial_map,
)
from .simplicial import level_tensor


@dataclass(frozen=True)
class SuiteConfig:
    trials: int | None = None  # None: the suite's own default
    seed: int = 0
    D: int | None = None
    field: FieldSpec = FieldSpec("Q")
    cap: int | None = None  # word-length cap for T′_s


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: dict | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    config: dict
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "", witness: dict | None = None):
        self.checks.append(Check(name, bool(passed), detail, witness))

    def to_dict(self) -> dict:
        return {"suite": self.suite, "config": self.config, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        return [f"[{'PASS' if c.passed else 'FAIL'}] {self.suite} :: {c.name} {c.detail}".rstrip()
                for c in self.checks]


class Tally:
    """Counts failures of one property across trials and keeps the first witness."""

    def __init__(self, name: str):
        self.name, self.total, self.failed, self.witness = name, 0, 0, None

    def record(self, ok: bool, witness: Callable[[], dict] | None = None):
        self.total += 1
        if not ok:
            self.failed += 1
            if self.witness is None and witness is not None:
                self.witness = witness()

    def into(self, rep: SuiteReport):
        rep.add(self.name, self.failed == 0, f"({self.total - self.failed}/{self.total})", self.witness)


def _mats(ms) -> list:
    from .serialize import matrix_to_json

    return [matrix_to_json(m) for m in ms]


def _is_identity(ms) -> bool:
    return all(m.nrows == m.ncols and m == Matrix.identity(m.field, m.nrows) for m in ms)


def _config(cfg: SuiteConfig, **resolved) -> dict:
    out = {"seed": cfg.seed, "field": cfg.field.label()}
    out.update(resolved)
    return out


# ---------------------------------------------------------------------------
# 1. Dold–Kan round trip


def dold_kan_roundtrip(cfg: SuiteConfig) -> SuiteReport:
    trials, D = cfg.trials or 50, cfg.D or 6
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("dold-kan-roundtrip", _config(cfg, trials=trials, D=D, max_dim=4))
    e_iso, e_nat = Tally("ε_V : NΓV -> V is an isomorphism"), Tally("ε is natural")
    h_iso, h_nat = Tally("η_X : X -> ΓNX is an isomorphism"), Tally("η is natural")
    for _ in range(trials):
        V, V2 = random_complex(rng, F, D, 4), random_complex(rng, F, D, 4)
        f = random_chain_map(rng, V, V2)
        eV, eV2 = epsilon(V), epsilon(V2)
        e_iso.record(all(is_invertible(m) for m in eV.f), lambda: {"dims": list(V.dims)})
        NGf = normalize_map(gamma_map(f))
        e_nat.record(all(eV2.f[n] @ NGf.f[n] == f.f[n] @ eV.f[n] for n in range(D + 1)),
                     lambda: {"dims": [list(V.dims), list(V2.dims)]})

        sx = random_simplicial_with_map(rng, F, D, 2)
        sy = random_simplicial_with_map(rng, F, D, 2)
        g = transport_simplicial_map(random_chain_map(rng, sx[1], sy[1]), sx, sy)
        hX, hY = eta(sx[0]), eta(sy[0])
        h_iso.record(all(is_invertible(m) for m in hX.f), lambda: {"dims": list(sx[0].dims)})
        GNg = gamma_map(normalize_map(g))
        h_nat.record(all(GNg.f[n] @ hX.f[n] == hY.f[n] @ g.f[n] for n in range(D + 1)),
                     lambda: {"dims": [list(sx[0].dims), list(sy[0].dims)]})
    for t in (e_iso, e_nat, h_iso, h_nat):
        t.into(rep)
    return rep


# ---------------------------------------------------------------------------
# 2. Monoidal structure


def monoidal(cfg: SuiteConfig) -> SuiteReport:
    trials, D = cfg.trials or 50, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("monoidal", _config(cfg, trials=trials, D=D, max_dim=2))
    aw_chain, sh_chain = Tally("AW is a chain map"), Tally("∇ is a chain map")
    retract, homol = Tally("AW ∘ ∇ = id on NA ⊗ NB"), Tally("∇ ∘ AW = id on homology in degrees < D")
    for _ in range(trials):
        A, B = random_simplicial(rng, F, D, 2), random_simplicial(rng, F, D, 2)
        M = level_tensor(A, B, check=False)
        aw, sh = alexander_whitney(A, B, M), shuffle(A, B, M)
        w = lambda: {"dims": [list(A.dims), list(B.dims)]}
        aw_chain.record(aw.first_noncommuting_degree() is None, w)
        sh_chain.record(sh.first_noncommuting_degree() is None, w)
        retract.record(_is_identity((aw @ sh).f), w)
        homol.record(_is_identity(induced_homology_map(sh @ aw).maps), w)
    for t in (aw_chain, sh_chain, retract, homol):
        t.into(rep)
    return rep


# ---------------------------------------------------------------------------
# 3. Induced coalgebras


def _coalgebra_instances(rng: random.Random, F: FieldSpec, D: int, cap: int | None):
    from .connected.factorization import primitive_coalgebra
    from .connected.simplicial import simplicial_tensor_coalgebra
    from .connected.tensor import tensor_coalgebra

    kind = rng.choice(["TdPrime", "TsPrime", "GammaTilde", "IK", "K0"])
    if kind == "TdPrime":
        return kind, tensor_coalgebra(random_complex(rng, F, D, 1, connected=True))
    if kind == "TsPrime":
        W = random_simplicial(rng, F, D, 1, connected=True)
        return kind, simplicial_tensor_coalgebra(W, cap=cap if cap is not None else min(D, 2), check=False).coalgebra
    if kind == "GammaTilde":
        small = rng.choice([primitive_coalgebra(random_complex(rng, F, D, 1, connected=True)),
                            random_connected_coalgebra(rng, F, D, 1)])
        return kind, small
    if kind == "IK":
        return kind, constant_coalgebra(D, F)
    return kind, unit_coalgebra(D, F)


def induced_coalgebras(cfg: SuiteConfig) -> SuiteReport:
    from .coalg import DGCoalgebra

    trials, D = cfg.trials or 50, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("induced-coalgebras", _config(cfg, trials=trials, D=D))
    nt, gt, iso = Tally("Ñ output satisfies the coalgebra axioms"), Tally("Γ̃ output satisfies the coalgebra axioms"), \
        Tally("ε : ÑΓ̃B -> B is a coalgebra isomorphism")
    for _ in range(trials):
        kind, obj = _coalgebra_instances(rng, F, D, cfg.cap)
        w = lambda: {"kind": kind, "dims": list(obj.dims)}
        if isinstance(obj, DGCoalgebra):
            try:
                G = gamma_tilde(obj, check=False)
                gt.record(check_simplicial_coalgebra_axioms(G).ok, w)
                NG = n_tilde(G)
                nt.record(check_coalgebra_axioms(NG).ok, w)
            except CoalgebraAxiomError:
                nt.record(False, w)
            iso.record(counit_is_coalgebra_iso(obj), w)
        else:
            gt.record(check_simplicial_coalgebra_axioms(obj).ok, w)
            try:
                nt.record(check_coalgebra_axioms(n_tilde(obj)).ok, w)
            except CoalgebraAxiomError:
                nt.record(False, w)
    for t in (nt, gt, iso):
        t.into(rep)
    return rep


# ---------------------------------------------------------------------------
# 4. Comonoidal square and the counterexample for η


def comonoidal_square(cfg: SuiteConfig) -> SuiteReport:
    trials, D = cfg.trials or 20, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("comonoidal-square", _config(cfg, trials=trials, D=D))
    sq = Tally("(ε ⊗ ε) ∘ AW ∘ N(ψ) = ε on X ⊗ Y")
    for _ in range(trials):
        X, Y = random_complex(rng, F, D, 2), random_complex(rng, F, D, 2)
        sq.record(lemma_square_check(X, Y), lambda: {"dims": [list(X.dims), list(Y.dims)]})
    sq.into(rep)
    for fld in (FieldSpec("Q"), GF(5)):
        r = eta_square_counterexample(max(D, 2), fld)
        wit = {"lower_level1": _mats([r.lower_composite_level1])[0], "right_level1": _mats([r.right_map_level1])[0]}
        rep.add(f"η-square over {fld.label()}: lower composite vanishes at level 1", r.lower_composite_level1.is_zero(),
                witness=None if r.lower_composite_level1.is_zero() else wit)
        ok = r.right_map_level1.shape == (1, 1) and is_invertible(r.right_map_level1)
        rep.add(f"η-square over {fld.label()}: right map is a 1-dim isomorphism at level 1", ok,
                witness=None if ok else wit)
        rep.add(f"η-square over {fld.label()}: square does not commute", not r.commutes)
    return rep


# ---------------------------------------------------------------------------
# 5. Lifting characterizations


def lifting_sample(rng: random.Random, F: FieldSpec, D: int, max_dim: int) -> ChainMap:
    top = D - 1
    kind = rng.choice(["random", "injective", "acyclic-injective"])
    A = random_complex(rng, F, D, max_dim, top=top)
    if kind == "random":
        return random_chain_map(rng, A, random_complex(rng, F, D, max_dim, top=top))
    R = random_complex(rng, F, D, max_dim, top=top, acyclic=kind == "acyclic-injective")
    return random_injection(rng, A, R)


def _chain_map_witness(f: ChainMap) -> dict:
    return {"source_dims": list(f.source.dims), "target_dims": list(f.target.dims), "f": _mats(f.f)}


def lifting_characterizations(cfg: SuiteConfig) -> SuiteReport:
    from .lifting import brute_force_llp, characterize, family_maps, has_llp

    trials, D = cfg.trials or 100, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("lifting-characterizations", _config(cfg, trials=trials, D=D, max_dim=2))
    q = Tally("hasLLP(f, Q) ⇔ f injective")
    p = Tally("hasLLP(f, P) ⇔ f injective and a quasi-isomorphism")
    pc = Tally("hasLLP(f, P) ⇔ f injective and H_n(coker f) = 0 for n >= 1")
    for _ in range(trials):
        f = lifting_sample(rng, F, D, 2)
        s = characterize(f)
        q.record(s.q_ok, lambda: _chain_map_witness(f))
        p.record(s.p_ok, lambda: {**_chain_map_witness(f), "llp_p": s.llp_p, "injective": s.injective,
                                  "quasi_iso": s.quasi_iso})
        pc.record(s.p_corrected_ok, lambda: _chain_map_witness(f))
    for t in (q, p, pc):
        t.into(rep)

    # independent oracle: enumerate every square and every lift over GF(2)
    F2, Db = GF(2), 3
    bf = Tally("solver agrees with GF(2) brute force (total dim <= 6)")
    fams = {k: family_maps(k, Db, F2) for k in ("Q", "P")}
    n_bf = max(10, trials // 5)
    while bf.total < n_bf:
        f = lifting_sample(rng, F2, Db, 1)
        if sum(f.source.dims) + sum(f.target.dims) > 6:
            continue
        for k, fam in fams.items():
            bf.record(has_llp(f, k) == all(brute_force_llp(f, g) for g in fam), lambda: _chain_map_witness(f))
    bf.into(rep)
    return rep


# ---------------------------------------------------------------------------
# 6. Products with an acyclic cofree coalgebra


def _acyclic_cofibrations(rng: random.Random, C, P, F: FieldSpec, D: int):
    """Squares ``(j, h, k)`` over ``P = C ⊓ T′_d(V)`` for sampled acyclic cofibrations ``j``."""
    from .connected.cofree import product_with_cofree
    from .connected.tensor import coaugmentation_quotient, tensor_coalgebra, tensor_coalgebra_map
    from .chain import direct_sum

    V = P.V
    kind = rng.choice(["identity", "product", "unit", "induced"])
    Wp = random_complex(rng, F, D, 1, connected=True)
    Vp = cone(Wp)
    if kind == "identity":
        A = C
        j, k = identity_coalgebra_map(C), identity_coalgebra_map(C)
    elif kind == "product":
        A = C
        Q = product_with_cofree(C, Vp)
        j = Q.mediating(identity_coalgebra_map(C), [Matrix.zeros(F, Vp.dims[n], C.dims[n]) for n in range(D + 1)])
        k = Q.to_C
    elif kind == "unit":
        A = unit_coalgebra(D, F)
        B = tensor_coalgebra(Vp)
        j, k = coaugmentation(B), constant_map(B, C)
    else:
        U = random_complex(rng, F, D, 1, connected=True)
        S = direct_sum(U, Vp)
        j = tensor_coalgebra_map(S.inclusions[0])
        A = j.source
        k = constant_map(j.target, C)
    # h = mediating(k ∘ j, random λ0)
    lam = random_chain_map(rng, coaugmentation_quotient(A), V)
    h = P.mediating(k @ j, lam)
    return kind, j, h, k


def cofree_product(cfg: SuiteConfig) -> SuiteReport:
    from .connected.cofree import product_with_cofree
    from .connected.factorization import lift_against_projection

    trials, D = cfg.trials or 20, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("cofree-product", _config(cfg, trials=trials, D=D))
    hom = Tally("H(C ⊓ T′_d(cone W)) -> H(C) is an isomorphism in degrees < D")
    lift = Tally("the projection lifts against every sampled acyclic cofibration")
    for _ in range(trials):
        C = random_connected_coalgebra(rng, F, D, 2)
        W = random_complex(rng, F, D, 1, connected=True)
        V = cone(W)
        P = product_with_cofree(C, V)
        hom.record(induced_homology_map(P.to_C.map).is_iso, lambda: {"C": list(C.dims), "W": list(W.dims)})
        for _ in range(2):
            kind, j, h, k = _acyclic_cofibrations(rng, C, P, F, D)
            res = lift_against_projection(P, j, h, k)
            lift.record(res.ok, lambda: {"kind": kind, "C": list(C.dims), "W": list(W.dims)})
    hom.into(rep)
    lift.into(rep)
    return rep


# ---------------------------------------------------------------------------
# 7. Factorization


def factorization(cfg: SuiteConfig) -> SuiteReport:
    from .connected.factorization import factor_cof_then_acyclic_fib

    trials, D = cfg.trials or 20, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("factorization", _config(cfg, trials=trials, D=D))
    comp, inj, weq = Tally("p ∘ i = f"), Tally("i injective in degrees >= 1"), Tally("H(p) is an isomorphism")
    for _ in range(trials):
        f = random_connected_coalgebra_map(rng, F, D, 2)
        fac = factor_cof_then_acyclic_fib(f)
        w = lambda: {"source": list(f.source.dims), "target": list(f.target.dims)}
        comp.record(fac.composite_ok(), w)
        inj.record(fac.i_injective(), w)
        weq.record(fac.p_homology_iso(), w)
    for t in (comp, inj, weq):
        t.into(rep)
    return rep


# ---------------------------------------------------------------------------
# 8. Connected Quillen equivalence, on homology


def connected_quillen(cfg: SuiteConfig) -> SuiteReport:
    from .connected.quillen import rcom_on_cofree, rcom_on_cofree_and_hovey

    trials, D = cfg.trials or 30, cfg.D or 4
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("connected-quillen", _config(cfg, trials=trials, D=D, words=cfg.cap))
    cmp_ = Tally("H(ÑT′_sΓV) -> H(T′_dV) -> T′_dH(V) are coalgebra isomorphisms in degrees < D")
    for t in range(trials):
        # alternate a shallower truncation with larger dims; memory grows like dims^D
        Dt = D if t % 2 or D <= 3 else 3
        V = random_complex(rng, F, Dt, 2 if Dt <= 3 else 1, connected=True)
        r = rcom_on_cofree(V, cfg.cap)
        cmp_.record(r.ok, lambda: {"V": list(V.dims), "dims": [list(r.dims_normalized), list(r.dims_tensor),
                                                                list(r.dims_tensor_of_homology)]})
    cmp_.into(rep)
    S1 = sphere(1, D, F)
    r = rcom_on_cofree(S1, cfg.cap)
    rep.add("V = 𝕊¹ gives dims (1, 1, …)", r.ok and r.dims_normalized == (1,) * D, str(r.dims_normalized))
    acyc = rcom_on_cofree_and_hovey(cone(S1), cfg.cap)
    rep.add("acyclic V gives K[0]", acyc.ok and acyc.case == "acyclic", str(acyc.comparison.dims_normalized))
    zero = rcom_on_cofree_and_hovey(zero_complex(F, D), cfg.cap)
    rep.add("V = 0 gives the terminal case", zero.ok and zero.case == "zero", str(zero.comparison.dims_normalized))
    return rep


# ---------------------------------------------------------------------------
# 9. Künneth


def kunneth(cfg: SuiteConfig) -> SuiteReport:
    trials, D = cfg.trials or 50, cfg.D or 6
    F, rng = cfg.field, random.Random(cfg.seed)
    rep = SuiteReport("kunneth", _config(cfg, trials=trials, D=D, max_dim=4))
    t = Tally("dim H_n(X ⊗ Y) = Σ dim H_p X · dim H_q Y for n < D")
    for _ in range(trials):
        X, Y = random_complex(rng, F, D, 4), random_complex(rng, F, D, 4)
        hx, hy, hxy = homology(X).dims, homology(Y).dims, homology(tensor(X, Y)).dims
        want = tuple(sum(hx[p] * hy[n - p] for p in range(n + 1)) for n in range(D))
        t.record(hxy == want, lambda: {"X": list(X.dims), "Y": list(Y.dims), "got": list(hxy), "want": list(want)})
    t.into(rep)
    return rep


SUITES: dict[str, Callable[[SuiteConfig], SuiteReport]] = {
    "dold-kan-roundtrip": dold_kan_roundtrip,
    "monoidal": monoidal,
    "induced-coalgebras": induced_coalgebras,
    "comonoidal-square": comonoidal_square,
    "lifting-characterizations": lifting_characterizations,
    "cofree-product": cofree_product,
    "factorization": factorization,
    "connected-quillen": connected_quillen,
    "kunneth": kunneth,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    rep = SUITES[name](cfg or SuiteConfig())
    rep.seconds = time.perf_counter() - t0
    return rep
