"""Run every verification suite and write one JSON report per suite.

    python scripts/run_acceptance.py --out runs/ --seed 0 --field Q
"""

import argparse
import json
from pathlib import Path

from dkcoalg.exactlinalg import FieldSpec
from dkcoalg.suites import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="runs")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--field", default="Q")
    ap.add_argument("--suite", action="append", choices=list(SUITES), help="repeatable; default all")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    F = FieldSpec.parse(args.field)
    ok = True
    for name in args.suite or SUITES:
        rep = run_suite(name, SuiteConfig(seed=args.seed, field=F))
        ok &= rep.passed
        (out / f"{name}.json").write_text(json.dumps({**rep.to_dict(), "seconds": rep.seconds}, indent=1,
                                                     ensure_ascii=False))
        print(f"{'PASS' if rep.passed else 'FAIL'} {name} ({rep.seconds:.1f}s)")
        for line in rep.lines():
            print("   ", line)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
