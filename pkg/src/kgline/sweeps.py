"""Catalog sweeps behind the acceptance criteria and the ``sweep`` command.

Each sweep returns a :class:`SweepResult`; ``violations`` lists the
instances that failed with enough detail to reproduce them.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bounds import bounds_report, colorability_defect_2, vertex_cover_number
from .catalog import connected_graphs_by_edges, random_graph, random_hypergraph, \
    random_st_partition, small_graphs
from .graph import Graph, find_induced
from .partition import iter_triangle_rewrites, validate
from .solvers import chi_kg_exact, greedy_two_approx
from .verifier import FAIL, PASS, describe, triangle_fixpoint_violation, \
    verify_characterization, verify_coloring_theorems, verify_gadget_theorem, \
    verify_join_lemmas, verify_struct_theorem


@dataclass
class SweepResult:
    name: str
    instances: int = 0
    violations: list = field(default_factory=list)
    seconds: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return (f"{verdict} {self.name}: {self.instances} instances, "
                f"{len(self.violations)} violations, {self.seconds:.1f}s")

    def to_dict(self) -> dict:
        return {"name": self.name, "instances": self.instances, "violations": self.violations,
                "seconds": round(self.seconds, 3), "stats": self.stats, "ok": self.ok}


def _map(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=8))


def _run(name: str, fn: Callable, items: Iterable, jobs: int) -> SweepResult:
    start = time.monotonic()
    out = SweepResult(name)
    for result in _map(fn, items, jobs):
        out.instances += 1
        if result is not None:
            out.violations.append(result)
    out.seconds = time.monotonic() - start
    return out


def _report_violation(report):
    return None if report.status != FAIL else report.to_dict()


# --- sandwich and Dol'nikov ------------------------------------------------

def _sandwich_one(h: Graph):
    if h.m == 0:
        return None
    r = bounds_report(h, with_chi=True, check=False)
    if not (r.cd2 <= r.chi <= r.tau and r.v <= r.cd2 + 2 * r.alpha):
        return {"graph": describe(h), **r.values()}
    return None


def sweep_sandwich(max_vertices: int = 6, jobs: int = 1) -> SweepResult:
    """cd2 <= chi <= tau and v <= cd2 + 2 alpha on every graph up to ``max_vertices``."""
    return _run("sandwich", _sandwich_one, small_graphs(max_vertices), jobs)


# --- colourful neighbourhoods ------------------------------------------------

def _coloring_one(h: Graph):
    return _report_violation(verify_coloring_theorems(h))


def sweep_coloring(max_edges: int = 6, jobs: int = 1) -> SweepResult:
    return _run("colorful-neighborhoods", _coloring_one, connected_graphs_by_edges(max_edges), jobs)


# --- structure theorem and characterisation ----------------------------------

def _struct_one(h: Graph):
    rep = verify_struct_theorem(h)
    return _report_violation(rep)


def struct_qualifying(max_vertices: int = 7) -> list[Graph]:
    return [h for h in small_graphs(max_vertices)
            if not h.is_complete() and h.m > 0
            and find_induced(h, "co-claw") is None and find_induced(h, "butterfly") is None]


def sweep_struct(max_vertices: int = 7, jobs: int = 1) -> SweepResult:
    graphs = struct_qualifying(max_vertices)
    res = _run("vertex-cover-tightness", _struct_one, graphs, jobs)
    return res


def _char_one(h: Graph):
    return _report_violation(verify_characterization(h))


def sweep_characterization(vertex_counts=(5, 6), jobs: int = 1) -> SweepResult:
    graphs = [h for n in vertex_counts for h in small_graphs(n, n)]
    return _run("kg-n2-characterization", _char_one, graphs, jobs)


# --- gadget ------------------------------------------------------------------

def gadget_catalog(max_vertices: int = 5) -> list[Graph]:
    return [h for h in small_graphs(max_vertices)
            if h.is_connected() and find_induced(h, "K3") is None]


def _gadget_one(item):
    h, k = item
    return _report_violation(verify_gadget_theorem(h, k))


def sweep_gadget(max_vertices: int = 5, ks=(1, 2), jobs: int = 1) -> SweepResult:
    items = [(h, k) for h in gadget_catalog(max_vertices) for k in ks]
    return _run("gadget-equivalences", _gadget_one, items, jobs)


# --- joins ---------------------------------------------------------------------

def join_pairs(count: int = 200, seed: int = 0, max_vertices: int = 5) -> list:
    """Random operand pairs; every fourth pair is made of hypergraphs."""
    rng = random.Random(seed)
    pairs = []
    for i in range(count):
        na, nb = rng.randint(1, max_vertices), rng.randint(1, max_vertices)
        if i % 4 == 3:
            pairs.append((random_hypergraph(rng, na), random_hypergraph(rng, nb)))
        else:
            pairs.append((random_graph(rng, na, rng.random()), random_graph(rng, nb, rng.random())))
    return pairs


def _join_one(pair):
    return _report_violation(verify_join_lemmas(*pair))


def sweep_join(count: int = 200, seed: int = 0, jobs: int = 1) -> SweepResult:
    return _run("join-lemmas", _join_one, join_pairs(count, seed), jobs)


# --- greedy 2-approximation -------------------------------------------------------

def _approx_one(h: Graph):
    if h.m == 0:
        return None
    p = greedy_two_approx(h)
    chi = chi_kg_exact(h).value
    if validate(p) is not None or len(p) > 2 * chi:
        return {"graph": describe(h), "parts": len(p), "chi": chi}
    return None


def sweep_two_approx(count: int = 1000, seed: int = 0, max_vertices: int = 9,
                     jobs: int = 1) -> SweepResult:
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(2, max_vertices), rng.random()) for _ in range(count)]
    res = _run("two-approx", _approx_one, graphs, jobs)
    return res


# --- triangle minimisation ---------------------------------------------------------

def check_minimization(p) -> list[str]:
    """Problems with the rewrite sequence from ``p``: part growth, triangle
    count not strictly falling, invalid steps, or a non-fixpoint result."""
    problems = []
    prev = p
    steps = 0
    for q in iter_triangle_rewrites(p):
        steps += 1
        if validate(q) is not None:
            problems.append(f"step {steps}: {validate(q)}")
        if len(q) > len(prev):
            problems.append(f"step {steps}: parts grew {len(prev)} -> {len(q)}")
        if q.triangle_count >= prev.triangle_count:
            problems.append(f"step {steps}: triangles {prev.triangle_count} -> {q.triangle_count}")
        if steps > p.triangle_count:
            problems.append("more rewrites than triangles")
            break
        prev = q
    why = triangle_fixpoint_violation(prev)
    if why:
        problems.append(f"fixpoint: {why}")
    return problems


def minimization_instances(count: int = 1000, seed: int = 0, max_vertices: int = 8) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        h = random_graph(rng, rng.randint(3, max_vertices), rng.uniform(0.3, 0.9))
        out.append(random_st_partition(rng, h))
    return out


def _minimize_one(p):
    problems = check_minimization(p)
    if problems:
        return {"graph": describe(p.host), "partition": str(p), "problems": problems}
    return None


def sweep_minimize(count: int = 1000, seed: int = 0, jobs: int = 1) -> SweepResult:
    items = minimization_instances(count, seed)
    res = _run("triangle-minimization", _minimize_one, items, jobs)
    res.stats["triangles_before"] = sum(p.triangle_count for p in items)
    return res


SWEEPS = {
    "sandwich": sweep_sandwich,
    "coloring": sweep_coloring,
    "minimize": sweep_minimize,
    "struct": sweep_struct,
    "characterization": sweep_characterization,
    "gadget": sweep_gadget,
    "approx": sweep_two_approx,
    "join": sweep_join,
}

SEEDED = ("minimize", "approx", "join")


@dataclass
class SweepConfig:
    names: tuple = tuple(SWEEPS)
    seed: int = 0
    jobs: int = 1


def run_sweeps(config: SweepConfig) -> list[SweepResult]:
    """Run the named sweeps in order; seeded sweeps get ``config.seed``."""
    unknown = [n for n in config.names if n not in SWEEPS]
    if unknown:
        raise KeyError(unknown[0])
    results = []
    for name in config.names:
        kwargs = {"jobs": config.jobs}
        if name in SEEDED:
            kwargs["seed"] = config.seed
        results.append(SWEEPS[name](**kwargs))
    return results
