"""Time the homology comparison for connected V at growing truncation degree and dims.

Memory for the normalized word coalgebra grows roughly like (dims)^D per level, which
bounds the scale at which the connected comparison can be run.
"""

import argparse
import random
import time

from dkcoalg.connected.quillen import rcom_on_cofree
from dkcoalg.exactlinalg import FieldSpec
from dkcoalg.generators import random_complex


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-D", type=int, default=4)
    ap.add_argument("--max-dim", type=int, default=2)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--field", default="Q")
    args = ap.parse_args()
    F, rng = FieldSpec.parse(args.field), random.Random(args.seed)
    for D in range(2, args.max_D + 1):
        for m in range(1, args.max_dim + 1):
            t0, oks = time.perf_counter(), 0
            for _ in range(args.trials):
                V = random_complex(rng, F, D, m, connected=True)
                oks += rcom_on_cofree(V).ok
            dt = (time.perf_counter() - t0) / args.trials
            print(f"D={D} max_dim={m}: {oks}/{args.trials} ok, {dt:.2f}s per trial")


if __name__ == "__main__":
    main()
