"""Count axiom checks made by the Wilke test on random finite semigroups.

Prints, per size n and family, the worst number of checks divided by n^2.
"""
import argparse
import random

from lassokit.corpus import FAMILIES, random_lasso_semigroup
from lassokit.semigroup import wilke_axioms


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="10,20,40,80,160")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'n':>5} " + " ".join(f"{f:>10}" for f in FAMILIES))
    for n in sizes:
        row = []
        for fam in FAMILIES:
            worst = 0
            for _ in range(args.trials):
                r = wilke_axioms(random_lasso_semigroup(n, rng, fam))
                worst = max(worst, r.coherence_checks + r.circularity_checks)
            row.append(worst / n ** 2)
        print(f"{n:>5} " + " ".join(f"{x:>10.3f}" for x in row))


if __name__ == "__main__":
    main()
