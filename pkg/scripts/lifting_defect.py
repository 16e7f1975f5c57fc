"""Search random chain maps for disagreements between LLP(P) and "injective and quasi-iso".

Each disagreement is also tested against the degree-zero correction
(injective with H_n(coker f) = 0 for n >= 1) and printed with its dimensions.
"""

import argparse
import random

from dkcoalg.exactlinalg import FieldSpec
from dkcoalg.lifting import characterize
from dkcoalg.suites import lifting_sample


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--D", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--field", default="Q")
    args = ap.parse_args()
    F, rng = FieldSpec.parse(args.field), random.Random(args.seed)
    bad = corrected_bad = 0
    for t in range(args.trials):
        s = characterize(lifting_sample(rng, F, args.D, 2))
        if not s.p_ok:
            bad += 1
            print(f"trial {t}: source {s.f.source.dims} target {s.f.target.dims} injective={s.injective} "
                  f"quasi_iso={s.quasi_iso} llp_P={s.llp_p} corrected_ok={s.p_corrected_ok}")
        corrected_bad += not s.p_corrected_ok
    print(f"stated characterization fails on {bad}/{args.trials}; corrected fails on {corrected_bad}/{args.trials}")


if __name__ == "__main__":
    main()
