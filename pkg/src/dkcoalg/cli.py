"""Command-line front end.

    dkcoalg homology FILE
    dkcoalg apply FUNCTOR FILE [FILE2]
    dkcoalg lift FILE
    dkcoalg verify SUITE [--D n --seed n --trials n --field F --cap L]
    dkcoalg counterexample [--field F --D n]

Reports are canonical JSON on stdout (or ``--out``).  Exit status: 0 when every check
passes, 1 when a check fails, 2 on usage or load errors.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .exactlinalg import FieldError, FieldSpec

FUNCTORS = ("N", "Gamma", "NTilde", "GammaTilde", "AW", "shuffle", "psi", "TdPrime", "TsPrime", "cone", "dual",
            "coproduct", "productWithCofree", "factor")


class UsageError(Exception):
    pass


def _field(label: str) -> FieldSpec:
    try:
        return FieldSpec.parse(label)
    except FieldError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _expect(obj, types, what: str):
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in (types if isinstance(types, tuple) else (types,)))
        raise UsageError(f"{what}: expected {names}, got {type(obj).__name__}")
    return obj


# ---------------------------------------------------------------------------
# Commands


def cmd_homology(args) -> tuple[dict, int]:
    from .chain import ChainComplex, homology
    from .coalg import DGCoalgebra, SimplicialCoalgebra
    from .doldkan import normalize
    from .simplicial import SimplicialVectorSpace

    obj = serialize.load(args.file)
    if isinstance(obj, DGCoalgebra):
        X = obj.carrier
    elif isinstance(obj, SimplicialCoalgebra):
        X = normalize(obj.carrier)
    elif isinstance(obj, SimplicialVectorSpace):
        X = normalize(obj)
    else:
        X = _expect(obj, ChainComplex, "homology")
    h = homology(X)
    return {"command": "homology", "D": X.D, "homology": list(h.dims), "top_cycles": h.top,
            "degree_D_incomplete": h.boundary_incomplete, "passed": True}, 0


def _apply(name: str, objs: list, cap: int | None):
    from .chain import ChainComplex, ChainMap, cone
    from .coalg import DGCoalgebra, DGCoalgebraMap, SimplicialCoalgebra, gamma_tilde, n_tilde
    from .connected.algebras import ConnectedDGAlgebra, dual_algebra, dual_coalgebra
    from .connected.colimits import coproduct
    from .connected.cofree import product_with_cofree
    from .connected.factorization import factor_cof_then_acyclic_fib
    from .connected.simplicial import simplicial_tensor_coalgebra
    from .connected.tensor import tensor_coalgebra
    from .doldkan import alexander_whitney, gamma, gamma_map, normalize, normalize_map, psi, shuffle
    from .simplicial import SimplicialMap, SimplicialVectorSpace

    arity = 2 if name in ("AW", "shuffle", "psi", "coproduct", "productWithCofree") else 1
    if len(objs) != arity:
        raise UsageError(f"{name} takes {arity} input file(s), got {len(objs)}")
    a = objs[0]
    if name == "N":
        if isinstance(a, SimplicialMap):
            return normalize_map(a)
        return normalize(_expect(a, SimplicialVectorSpace, name))
    if name == "Gamma":
        if isinstance(a, ChainMap):
            return gamma_map(a)
        return gamma(_expect(a, ChainComplex, name))
    if name == "NTilde":
        return n_tilde(_expect(a, SimplicialCoalgebra, name))
    if name == "GammaTilde":
        return gamma_tilde(_expect(a, DGCoalgebra, name))
    if name in ("AW", "shuffle"):
        A, B = (_expect(o, SimplicialVectorSpace, name) for o in objs)
        return alexander_whitney(A, B) if name == "AW" else shuffle(A, B)
    if name == "psi":
        X, Y = (_expect(o, ChainComplex, name) for o in objs)
        return psi(X, Y).as_map()
    if name == "TdPrime":
        return tensor_coalgebra(_expect(a, ChainComplex, name))
    if name == "TsPrime":
        return simplicial_tensor_coalgebra(_expect(a, SimplicialVectorSpace, name), cap=cap).coalgebra
    if name == "cone":
        return cone(_expect(a, ChainComplex, name))
    if name == "dual":
        if isinstance(a, ConnectedDGAlgebra):
            return dual_coalgebra(a)
        return dual_algebra(_expect(a, DGCoalgebra, name))
    if name == "coproduct":
        C, E = (_expect(o, DGCoalgebra, name) for o in objs)
        return coproduct(C, E).coalgebra
    if name == "productWithCofree":
        C = _expect(objs[0], DGCoalgebra, name)
        V = _expect(objs[1], ChainComplex, name)
        return product_with_cofree(C, V).coalgebra
    if name == "factor":
        fac = factor_cof_then_acyclic_fib(_expect(a, DGCoalgebraMap, name))
        return fac
    raise UsageError(f"unknown functor {name!r}")


def cmd_apply(args) -> tuple[dict, int]:
    from .connected.factorization import Factorization

    objs = [serialize.load(p) for p in args.files]
    out = _apply(args.functor, objs, args.cap)
    if isinstance(out, Factorization):
        checks = {"p∘i = f": out.composite_ok(), "i injective in degrees >= 1": out.i_injective(),
                  "H(p) iso": out.p_homology_iso()}
        rep = {"command": "apply", "functor": "factor", "i": serialize.to_document(out.i),
               "p": serialize.to_document(out.p), "checks": checks, "passed": all(checks.values())}
        return rep, 0 if rep["passed"] else 1
    return {"command": "apply", "functor": args.functor, "result": serialize.to_document(out), "passed": True}, 0


def cmd_lift(args) -> tuple[dict, int]:
    from .chain import ChainMap
    from .lifting import LiftingSquare, characterize, find_lift

    obj = serialize.load(args.file)
    if isinstance(obj, LiftingSquare):
        L = find_lift(obj)
        rep = {"command": "lift", "lift_exists": L is not None,
               "lift": serialize.to_document(L) if L is not None else None, "passed": True}
        return rep, 0
    f = _expect(obj, (ChainMap, LiftingSquare), "lift")
    s = characterize(f, args.bound)
    rep = {"command": "lift", "injective": s.injective, "quasi_iso": s.quasi_iso, "llp_Q": s.llp_q,
           "llp_P": s.llp_p, "coker_acyclic_above_zero": s.coker_acyclic_positive,
           "checks": {"hasLLP(Q) ⇔ injective": s.q_ok, "hasLLP(P) ⇔ injective ∧ quasi-iso": s.p_ok}}
    rep["passed"] = all(rep["checks"].values())
    return rep, 0 if rep["passed"] else 1


def cmd_verify(args) -> tuple[dict, int]:
    from .suites import SUITES, SuiteConfig, run_suite

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    cfg = SuiteConfig(trials=args.trials, seed=args.seed, D=args.D, field=args.field, cap=args.cap)
    rep = run_suite(args.suite, cfg)
    out = {"command": "verify", **rep.to_dict()}
    return out, 0 if rep.passed else 1


def cmd_counterexample(args) -> tuple[dict, int]:
    from .coalg import eta_square_counterexample
    from .exactlinalg import is_invertible

    D = args.D or 3
    if D < 2:
        raise UsageError("the counterexample needs --D >= 2")
    r = eta_square_counterexample(D, args.field)
    lower, right = r.lower_composite_level1, r.right_map_level1
    rep = {"command": "counterexample", "field": args.field.label(), "D": D,
           "lower_composite_level1": serialize.matrix_to_json(lower),
           "right_map_level1": serialize.matrix_to_json(right),
           "lower_composite_zero": lower.is_zero(),
           "right_map_invertible": right.shape == (1, 1) and is_invertible(right),
           "commutes": r.commutes, "passed": r.reproduces}
    return rep, 0 if r.reproduces else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec("Q"), help="Q or GFp:<p>")
    common.add_argument("--D", type=int, default=None, help="truncation degree")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--cap", type=int, default=None, help="word-length cap for T′_s")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="dkcoalg", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = p.add_subparsers(dest="command", required=True)
    h = sub.add_parser("homology", parents=[common], help="homology dimensions of a stored object")
    h.add_argument("file")
    a = sub.add_parser("apply", parents=[common], help="apply a functor or construction")
    a.add_argument("functor", choices=FUNCTORS)
    a.add_argument("files", nargs="+")
    lf = sub.add_parser("lift", parents=[common], help="solve a lifting square, or test a map against Q and P")
    lf.add_argument("file")
    lf.add_argument("--bound", type=int, default=None, help="largest n of the generators 𝔻ⁿ, 𝕊ⁿ")
    v = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    v.add_argument("suite")
    sub.add_parser("counterexample", parents=[common], help="the η-square that fails to commute")
    return p


COMMANDS = {"homology": cmd_homology, "apply": cmd_apply, "lift": cmd_lift, "verify": cmd_verify,
            "counterexample": cmd_counterexample}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = COMMANDS[args.command](args)
    except (UsageError, serialize.SchemaError, serialize.InvariantError, OSError) as e:
        print(f"dkcoalg: error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        # incompatible inputs surface as construction errors
        print(f"dkcoalg: error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    text = serialize.canonical(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
