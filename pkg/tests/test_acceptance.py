"""Acceptance criteria 1-12.

Each test records one ``PASS``/``FAIL`` line; the lines are printed in the
pytest terminal summary and when this file is run as a script.
"""

import time

import pytest

from kgline import generators as gen
from kgline.bounds import colorability_defect_2
from kgline.graph import kneser_graph_of
from kgline.solvers import chi_kg_exact, max_zigzag, min_element_coloring, xind_sandwich
from kgline.sweeps import sweep_characterization, sweep_coloring, sweep_gadget, sweep_join, \
    sweep_minimize, sweep_sandwich, sweep_struct, sweep_two_approx

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str):
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[n] = line
    print(line)
    return ok


def timed(fn, *args, **kwargs):
    start = time.monotonic()
    value = fn(*args, **kwargs)
    return value, time.monotonic() - start


def test_01_complete_graphs():
    rows, ok = [], True
    for n in (4, 5, 6, 7):
        res, secs = timed(chi_kg_exact, gen.complete(n))
        good = res.value == n - 2 and secs < 10
        ok &= good
        rows.append(f"K{n}:{res.value}")
    assert record(1, ok, "chi(KG(Kn)) = n-2: " + " ".join(rows))


STABLE = [((6, 2), 4), ((7, 2), 5), ((7, 3), 4), ((8, 3), 5), ((9, 3), 6), ((9, 4), 5)]


def test_02_stable_kneser():
    rows, ok = [], True
    for (n, s), expected in STABLE:
        res, secs = timed(chi_kg_exact, gen.web(n, s))
        ok &= res.value == expected and secs < 60
        rows.append(f"({n},{s}):{res.value}")
    assert record(2, ok, "chi = n-s: " + " ".join(rows))


def _sweep_criterion(n, sweep, limit, label, **kwargs):
    res, secs = timed(sweep, **kwargs)
    ok = res.ok and secs < limit and res.instances > 0
    record(n, ok, f"{label}: {res.instances} instances, {len(res.violations)} violations, "
                  f"{secs:.1f}s")
    assert ok, res.violations[:3]


def test_03_sandwich():
    _sweep_criterion(3, sweep_sandwich, 600, "cd2 <= chi <= tau on graphs <= 6 vertices",
                     max_vertices=6)


def test_04_local_chromatic():
    _sweep_criterion(4, sweep_coloring, 600, "psi = chi, colourful neighbourhoods, <= 6 edges",
                     max_edges=6)


def test_05_minimization():
    _sweep_criterion(5, sweep_minimize, 600, "triangle minimisation on 1000 seeded pairs",
                     count=1000, seed=0)


def test_06_structure():
    _sweep_criterion(6, sweep_struct, 900, "chi = tau without co-claw/butterfly, <= 7 vertices",
                     max_vertices=7)


def test_07_characterization():
    _sweep_criterion(7, sweep_characterization, 600, "chi = v-2 characterisation on 5, 6 vertices",
                     vertex_counts=(5, 6))


def test_08_gadget():
    _sweep_criterion(8, sweep_gadget, 1200, "gadget equivalences and closed forms, k in {1,2}",
                     max_vertices=5, ks=(1, 2))


def test_09_two_approx():
    _sweep_criterion(9, sweep_two_approx, 300, "greedy parts <= 2 chi on 1000 seeded graphs",
                     count=1000, seed=0, max_vertices=9)


def test_10_zigzag():
    rows, ok = [], True
    start = time.monotonic()
    for s in (3, 5):
        h = gen.web(2 * s + 1, s)
        kg, _ = kneser_graph_of(h)
        c = min_element_coloring(h)
        rep = xind_sandwich(kg, [c])
        chi = chi_kg_exact(h).value
        no_zigzag = max_zigzag(kg, c, s + 1) is None
        ok &= rep.lo == rep.hi == s and chi == s + 1 and no_zigzag
        rows.append(f"s={s}: lo={rep.lo} hi={rep.hi} chi={chi}")
    ok &= time.monotonic() - start < 60
    assert record(10, ok, "zig-zag sandwich " + "; ".join(rows))


def test_11_hypergraph_gadget():
    hh = gen.gadget(gen.complete_uniform_hypergraph(4, 3), 1, 3)
    kg, _ = kneser_graph_of(hh)
    start = time.monotonic()
    chi = chi_kg_exact(hh).value
    cd2 = colorability_defect_2(hh)[0]
    secs = time.monotonic() - start
    ok = kg.n == 34 and chi == cd2 == 5 and secs < 600
    assert record(11, ok, f"hypergraph gadget: KG on {kg.n} vertices, chi={chi} cd2={cd2}")


def test_12_join():
    _sweep_criterion(12, sweep_join, 300, "join formulas on 200 seeded pairs", count=200, seed=0)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
