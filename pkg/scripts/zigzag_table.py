"""Clique / zig-zag sandwich for KG(2s+1, 2)_s-stab under the min-element colouring.

    python3 scripts/zigzag_table.py --s 2 3 4 5
"""

import argparse

from kgline import generators as gen
from kgline.graph import kneser_graph_of
from kgline.solvers import chi_kg_exact, min_element_coloring, xind_sandwich


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s", type=int, nargs="+", default=[2, 3, 4, 5])
    args = ap.parse_args()
    print(f"{'s':>2} {'lo':>3} {'hi':>3} {'chi':>4}")
    for s in args.s:
        h = gen.web(2 * s + 1, s)
        kg, _ = kneser_graph_of(h)
        rep = xind_sandwich(kg, [min_element_coloring(h)])
        print(f"{s:>2} {rep.lo:>3} {rep.hi:>3} {chi_kg_exact(h).value:>4}")


if __name__ == "__main__":
    main()
