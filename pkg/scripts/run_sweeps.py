"""Run the catalog sweeps and write a JSON summary.

    python3 scripts/run_sweeps.py --out results/sweeps.json --jobs 4
"""

import argparse
import json
import pathlib
import sys

from kgline.sweeps import SWEEPS, SweepConfig, run_sweeps


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", default=list(SWEEPS))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=pathlib.Path, default=None)
    args = ap.parse_args()

    results = run_sweeps(SweepConfig(tuple(args.names), args.seed, args.jobs))
    for r in results:
        print(r.line())
        for v in r.violations[:3]:
            print("   ", json.dumps(v, sort_keys=True))
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps([r.to_dict() for r in results], indent=2, sort_keys=True))
    sys.exit(0 if all(r.ok for r in results) else 1)


if __name__ == "__main__":
    main()
