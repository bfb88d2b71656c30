"""Run all acceptance criteria and print one line per criterion."""
import argparse
import sys

from lassokit.acceptance import run_all
from lassokit.corpus import CorpusConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    ap.add_argument("--n-random", type=int, default=CorpusConfig.n_random)
    ap.add_argument("-v", "--verbose", action="store_true", help="list every failure")
    args = ap.parse_args()
    results = run_all(CorpusConfig(seed=args.seed, n_random=args.n_random))
    for r in results:
        print(r.line())
        if args.verbose:
            for f in r.failures:
                print(f"    {f}")
    n_ok = sum(r.ok for r in results)
    print(f"{n_ok}/{len(results)} criteria pass")
    return 0 if n_ok == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
