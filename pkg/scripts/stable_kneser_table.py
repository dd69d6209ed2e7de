"""Chromatic numbers of s-stable Kneser graphs KG(n, 2) against n - s.

s = 1 is the ordinary Kneser graph, whose value is n - 2.

    python3 scripts/stable_kneser_table.py --max-n 10
"""

import argparse
import time
from dataclasses import dataclass

from kgline import generators as gen
from kgline.bounds import bounds_report
from kgline.solvers import chi_kg_exact


@dataclass
class TableConfig:
    max_n: int = 9
    timeout: float = 120.0


def rows(cfg: TableConfig):
    for n in range(4, cfg.max_n + 1):
        for s in range(1, n // 2 + 1):
            h = gen.web(n, s)
            if h.m == 0:
                continue
            start = time.monotonic()
            res = chi_kg_exact(h, timeout=cfg.timeout)
            r = bounds_report(h)
            yield n, s, res, r, time.monotonic() - start


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--timeout", type=float, default=TableConfig.timeout)
    args = ap.parse_args()
    cfg = TableConfig(args.max_n, args.timeout)
    print(f"{'n':>3} {'s':>3} {'chi':>4} {'want':>4} {'cd2':>4} {'tau':>4} {'nodes':>8} {'sec':>7}")
    for n, s, res, r, secs in rows(cfg):
        chi = res.value if res.optimal else f"{res.lower}-{res.upper}"
        want = n - max(s, 2)
        flag = "" if res.value == want else "  <-- differs"
        print(f"{n:>3} {s:>3} {chi!s:>4} {want:>4} {r.cd2:>4} {r.tau:>4} {res.nodes:>8} "
              f"{secs:>7.2f}{flag}")


if __name__ == "__main__":
    main()
