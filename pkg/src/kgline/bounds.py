"""Exact vertex cover, independence, 2-colorability defect and the bound chain.

Everything is a size-ascending subset search, fine for desk-scale inputs and
guarded against anything larger.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Optional

from .graph import AnyGraph, Graph, GraphError, Hypergraph, edge_masks, is_two_colorable, \
    kneser_graph_of

MAX_VERTICES = 24


class BoundsViolation(AssertionError):
    """A proven inequality failed on a concrete instance."""


def _guard(h: AnyGraph, limit: int = MAX_VERTICES):
    if h.n > limit:
        raise GraphError(f"{h.n} vertices exceeds the exact-search limit of {limit}")


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_cover_number(h: AnyGraph) -> tuple[int, tuple[int, ...]]:
    """Minimum vertex cover (hitting set) and the lexicographically first witness."""
    _guard(h)
    masks = edge_masks(h)
    if not masks:
        return 0, ()
    touched = sorted({v for e in h.edge_list for v in e})
    for k in range(len(touched) + 1):
        for cover in combinations(touched, k):
            cm = _mask(cover)
            if all(e & cm for e in masks):
                return k, cover
    raise AssertionError("unreachable: all touched vertices form a cover")


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set by branching on a highest-degree vertex."""
    _guard(g)
    adj = g.adj_masks
    best: list = [0, 0]

    def grow(cand: int, chosen: int, size: int):
        if size + bin(cand).count("1") <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # vertex of cand with most neighbours in cand
        v = max((u for u in range(g.n) if cand >> u & 1),
                key=lambda u: (bin(adj[u] & cand).count("1"), -u))
        if not adj[v] & cand:
            # no edges left among candidates: take them all
            grow(0, chosen | cand, size + bin(cand).count("1"))
            return
        grow(cand & ~(1 << v) & ~adj[v], chosen | 1 << v, size + 1)
        grow(cand & ~(1 << v), chosen, size)

    grow((1 << g.n) - 1, 0, 0)
    witness = tuple(v for v in range(g.n) if best[1] >> v & 1)
    return best[0], witness


def _induced_after_removal(h: AnyGraph, removed: set) -> AnyGraph:
    keep = [e for e in h.edge_list if not removed.intersection(e)]
    if isinstance(h, Graph):
        return Graph(h.n, frozenset(keep))
    return Hypergraph(h.n, frozenset(frozenset(e) for e in keep))


def colorability_defect_2(h: AnyGraph) -> tuple[int, tuple[int, ...]]:
    """Fewest vertices whose removal leaves a 2-colourable (hyper)graph."""
    _guard(h)
    for k in range(h.n + 1):
        for removed in combinations(range(h.n), k):
            if is_two_colorable(_induced_after_removal(h, set(removed))) is not None:
                return k, removed
    raise AssertionError("unreachable: removing every vertex leaves nothing")


def max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum clique by a simple branch and bound with a colouring-free size bound."""
    adj = g.adj_masks
    best: list = [0, 0]

    def expand(cand: int, chosen: int, size: int):
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        while cand:
            if size + bin(cand).count("1") <= best[0]:
                return
            v = cand.bit_length() - 1
            expand(cand & adj[v], chosen | 1 << v, size + 1)
            cand &= ~(1 << v)
        if size > best[0]:
            best[0], best[1] = size, chosen

    expand((1 << g.n) - 1, 0, 0)
    return best[0], tuple(v for v in range(g.n) if best[1] >> v & 1)


def kneser_clique_number(h: AnyGraph) -> int:
    """Largest family of pairwise disjoint edges."""
    if h.m == 0:
        return 0
    kg, _ = kneser_graph_of(h)
    return max_clique(kg)[0]


@dataclass
class BoundsReport:
    v: int
    tau: int
    alpha: int
    cd2: int
    omega_kg: int
    chi: Optional[int] = None
    psi: Optional[int] = None
    witnesses: dict = field(default_factory=dict, repr=False)

    def checks(self, is_graph: bool = True) -> dict[str, bool]:
        out = {
            "alpha_plus_tau": self.alpha + self.tau == self.v,
            "cd2_plus_v_ge_2tau": self.cd2 + self.v >= 2 * self.tau,
            "omega_le_tau": self.omega_kg <= self.tau,
        }
        if is_graph:
            out["v_le_cd2_plus_2alpha"] = self.v <= self.cd2 + 2 * self.alpha
        if self.chi is not None:
            out["cd2_le_chi"] = self.cd2 <= self.chi
            out["chi_le_tau"] = self.chi <= self.tau
            out["omega_le_chi"] = self.omega_kg <= self.chi
        if self.psi is not None and self.chi is not None:
            out["psi_le_chi"] = self.psi <= self.chi
        return out

    def values(self) -> dict:
        d = asdict(self)
        d.pop("witnesses")
        return d

    def to_lines(self) -> str:
        """One ``key=value`` line per field, absent values as ``none``."""
        return "".join(f"{k}={'none' if v is None else v}\n" for k, v in self.values().items())

    @classmethod
    def from_lines(cls, text: str) -> "BoundsReport":
        vals = {}
        for line in text.splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            k, _, v = line.partition("=")
            vals[k.strip()] = None if v.strip() == "none" else int(v)
        return cls(**vals)


def join_formulas(a: BoundsReport, b: BoundsReport) -> dict[str, int]:
    """Predicted ``cd2`` and ``tau`` of the join of two operands."""
    return {
        "cd2": min(a.cd2 + b.v, a.tau + b.tau, a.v + b.cd2),
        "tau": min(a.tau + b.v, a.v + b.tau),
    }


def bounds_report(h: AnyGraph, with_chi: bool = False, with_psi: bool = False,
                  timeout: Optional[float] = None, check: bool = True) -> BoundsReport:
    """Compute every bound exactly; with ``check`` raise on a failed inequality."""
    tau, cover = vertex_cover_number(h)
    if isinstance(h, Graph):
        alpha, indep = independence_number(h)
    else:
        # complement of a minimum hitting set is a maximum edge-free set
        alpha = h.n - tau
        indep = tuple(sorted(set(range(h.n)) - set(cover)))
    cd2, removal = colorability_defect_2(h)
    report = BoundsReport(v=h.n, tau=tau, alpha=alpha, cd2=cd2,
                          omega_kg=kneser_clique_number(h),
                          witnesses={"cover": cover, "independent": indep, "cd2_removal": removal})
    if with_chi:
        from .solvers import chi_kg_exact, SolverTimeout
        res = chi_kg_exact(h, timeout=timeout)
        if not res.optimal:
            raise SolverTimeout(res)
        report.chi = res.value
    if with_psi and isinstance(h, Graph) and h.m:
        from .solvers import local_chromatic_exact
        report.psi = local_chromatic_exact(h)
    if check:
        failed = [k for k, ok in report.checks(isinstance(h, Graph)).items() if not ok]
        if failed:
            raise BoundsViolation(f"{', '.join(failed)} failed for {h!r}: {report.values()}")
    return report
