"""Triangle-gadget parameters for small connected triangle-free graphs.

Prints brute-force cd2, chi and tau of H(k) next to the closed forms and
marks where chi meets the lower or the upper bound.

    python3 scripts/gadget_table.py --max-vertices 5 --k 1 2 3
"""

import argparse
from dataclasses import dataclass, field

from kgline import generators as gen
from kgline.bounds import bounds_report
from kgline.solvers import chi_kg_exact
from kgline.sweeps import gadget_catalog
from kgline.verifier import describe, gadget_formulas


@dataclass
class GadgetConfig:
    max_vertices: int = 5
    ks: list = field(default_factory=lambda: [1, 2])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    cfg = GadgetConfig(args.max_vertices, args.k)

    print(f"{'graph':<34} {'a':>2} {'k':>2}  {'cd2':>7} {'chi':>7} {'tau':>7}  tight")
    bad = 0
    for h in gadget_catalog(cfg.max_vertices):
        base = bounds_report(h)
        for k in cfg.ks:
            g = gen.gadget(h, k)
            r = bounds_report(g)
            chi = chi_kg_exact(g).value
            f = gadget_formulas(base.v, base.tau, base.cd2, k)
            got = (r.cd2, chi, r.tau)
            want = (f["cd2"], f["chi"], f["tau"])
            bad += got != want
            tight = ("lower " if chi == r.cd2 else "") + ("upper" if chi == r.tau else "")
            cells = "  ".join(f"{a}/{b}".rjust(7) for a, b in zip(got, want))
            print(f"{describe(h):<34} {base.alpha:>2} {k:>2}  {cells}  {tight}")
    print(f"\n{bad} mismatches (entries are brute force / closed form)")


if __name__ == "__main__":
    main()
