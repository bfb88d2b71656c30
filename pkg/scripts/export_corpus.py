"""Write the test corpus (automata and their algebras) as JSON files."""
import argparse
from pathlib import Path

from lassokit.corpus import CorpusConfig, corpus_automata, corpus_semigroups
from lassokit.serialize import save


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    args = ap.parse_args()
    cfg = CorpusConfig(seed=args.seed)
    args.outdir.mkdir(parents=True, exist_ok=True)
    count = 0
    for name, obj in list(corpus_automata(cfg)) + list(corpus_semigroups(cfg)):
        fname = name.replace("(", "_").replace(")", "").replace(" ", "")
        save(obj, args.outdir / f"{fname}.json")
        count += 1
    print(f"wrote {count} files to {args.outdir}")


if __name__ == "__main__":
    main()
