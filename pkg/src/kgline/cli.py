"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 bad input, 3 solver timeout.
Structured output is JSON with sorted keys; wall-clock times are left out
unless ``--timings`` is given so that identical runs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import formats, generators, sweeps
from .bounds import bounds_report
from .graph import Graph, GraphError, Hypergraph, greedy_maximal_matching, kneser_graph_of
from .partition import PartitionError, STPartition, merge_same_center_stars, \
    minimize_triangles, two_star_rewire, validate
from .solvers import SolverResult, SolverTimeout, chi_kg_exact, greedy_two_approx, \
    local_chromatic_exact, max_zigzag, min_element_coloring, search_zigzag_coloring, \
    xind_sandwich
from .verifier import FAIL, verify_characterization, verify_coloring_theorems, \
    verify_gadget_theorem, verify_hypergraph_gadget, verify_join_lemmas, verify_struct_theorem

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _common(p: argparse.ArgumentParser):
    p.add_argument("--input", help="graph, hypergraph or partition file ('-' for stdin)")
    p.add_argument("--gen", help="inline family spec, e.g. web:7,3 or complete:5")
    p.add_argument("--gadget", type=int, metavar="K", help="replace the input by its K-gadget")
    p.add_argument("--r", type=int, default=None, help="uniformity for hypergraph gadgets")
    p.add_argument("--doubled", type=int, metavar="X", help="replace the input by its doubling at X")
    p.add_argument("--timeout", type=float, default=None, help="solver timeout in seconds")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--guard-edges", type=int, default=9)
    p.add_argument("--timings", action="store_true", help="include wall times in output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("gen", help="emit a generated graph or hypergraph"))
    b = sub.add_parser("bounds", help="tau, alpha, cd2, omega and chi")
    _common(b)
    b.add_argument("--no-chi", action="store_true")
    b.add_argument("--psi", action="store_true")
    _common(sub.add_parser("chi", help="exact chromatic number of the Kneser graph"))
    _common(sub.add_parser("psi", help="exact local chromatic number"))
    _common(sub.add_parser("approx", help="greedy 2-approximate ST-partition"))

    p = sub.add_parser("partition", help="optimal partition, or validate/transform one")
    _common(p)
    p.add_argument("--minimize", action="store_true", help="remove triangles")
    p.add_argument("--merge", action="store_true", help="merge stars with equal centers")
    p.add_argument("--rewire", metavar="U-V", help="two-star rewiring at edge U-V")

    v = sub.add_parser("verify", help="check one theorem on an instance")
    v.add_argument("theorem", choices=("coloring", "struct", "characterization", "gadget",
                                       "join", "hypergadget"))
    _common(v)
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--gen2", help="second join operand (family spec)")
    v.add_argument("--input2", help="second join operand (file)")

    z = sub.add_parser("zigzag", help="clique / zig-zag sandwich on the Kneser graph")
    _common(z)
    z.add_argument("--coloring", choices=("min-element", "search"), default="min-element")
    z.add_argument("--colors", type=int, default=4, help="colour budget for --coloring search")
    z.add_argument("--t", type=int, default=None, help="look for a zig-zag of this size only")

    s = sub.add_parser("sweep", help="run catalog sweeps")
    s.add_argument("names", nargs="*", help=f"any of {', '.join(sweeps.SWEEPS)} (default all)")
    _common(s)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args, gen_attr="gen", input_attr="input"):
    spec, path = getattr(args, gen_attr), getattr(args, input_attr)
    if bool(spec) == bool(path):
        raise InputError(f"give exactly one of --{gen_attr} or --{input_attr}")
    obj = generators.from_spec(spec) if spec else formats.read_any(_read(path))
    if isinstance(obj, STPartition):
        return obj
    if isinstance(obj, Hypergraph) and obj.is_uniform(2):
        obj = obj.as_graph()
    if args.doubled is not None:
        if not isinstance(obj, Graph):
            raise InputError("--doubled needs a graph")
        obj = generators.doubled(obj, args.doubled)
    if args.gadget is not None:
        r = args.r if args.r is not None else (2 if isinstance(obj, Graph) else obj.uniformity())
        if r is None:
            raise InputError("hypergraph gadget needs a uniform hypergraph or --r")
        obj = generators.gadget(obj, args.gadget, r)
    return obj


def _graph_only(obj):
    if isinstance(obj, STPartition):
        return obj.host
    return obj


def _need_graph(obj) -> Graph:
    obj = _graph_only(obj)
    if not isinstance(obj, Graph):
        raise InputError("this command needs a graph, not a hypergraph")
    return obj


def _solver_dict(res: SolverResult, timings: bool) -> dict:
    d = res.to_dict()
    if not timings:
        d.pop("seconds")
    return d


def _emit(out, args, payload: dict, text: str):
    if args.format == "structured":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _chi(h, args) -> SolverResult:
    res = chi_kg_exact(h, timeout=args.timeout)
    if not res.optimal:
        raise SolverTimeout(res)
    return res


def cmd_gen(args, out) -> int:
    obj = _graph_only(_load(args))
    provenance = f"gen {args.gen}" if args.gen else f"from {args.input}"
    if args.gadget is not None:
        provenance += f" gadget k={args.gadget}"
    if args.doubled is not None:
        provenance += f" doubled x={args.doubled}"
    text = formats.write_graph(obj, provenance)
    _emit(out, args, {"n": obj.n, "m": obj.m, "edges": [list(e) for e in obj.edge_list],
                      "text": text}, text)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    h = _graph_only(_load(args))
    rep = bounds_report(h, with_chi=not args.no_chi, with_psi=args.psi, timeout=args.timeout)
    payload = rep.values()
    payload["witnesses"] = {k: list(v) for k, v in rep.witnesses.items()}
    payload["checks"] = rep.checks(isinstance(h, Graph))
    _emit(out, args, payload, rep.to_lines())
    return EXIT_OK


def cmd_chi(args, out) -> int:
    h = _graph_only(_load(args))
    res = _chi(h, args)
    if isinstance(res.witness, STPartition):
        body = str(res.witness)
    else:
        body = " ".join(map(str, res.witness))
    _emit(out, args, _solver_dict(res, args.timings), f"chi={res.value}\n{body}")
    return EXIT_OK


def cmd_psi(args, out) -> int:
    h = _need_graph(_load(args))
    psi = local_chromatic_exact(h, guard_edges=args.guard_edges)
    _emit(out, args, {"psi": psi}, f"psi={psi}")
    return EXIT_OK


def cmd_approx(args, out) -> int:
    h = _need_graph(_load(args))
    p = greedy_two_approx(h)
    matching = greedy_maximal_matching(h)
    payload = {"parts": len(p), "matching": [list(e) for e in matching],
               "partition": [str(q) for q in p.parts]}
    _emit(out, args, payload, f"parts={len(p)} matching={len(matching)}\n{p}")
    return EXIT_OK


def cmd_partition(args, out) -> int:
    obj = _load(args)
    if isinstance(obj, STPartition):
        p = obj
    else:
        p = _chi(_need_graph(obj), args).witness
    if args.rewire:
        u, _, v = args.rewire.partition("-")
        p = two_star_rewire(p, (int(u), int(v)))
    if args.merge:
        p = merge_same_center_stars(p)
    if args.minimize:
        p = minimize_triangles(p)
    problem = validate(p)
    text = formats.write_partition(p)
    payload = {"parts": len(p), "triangles": p.triangle_count, "valid": problem is None,
               "text": text}
    _emit(out, args, payload, text)
    return EXIT_OK if problem is None else EXIT_FAIL


def cmd_verify(args, out) -> int:
    h = _graph_only(_load(args))
    t = args.theorem
    if t == "coloring":
        rep = verify_coloring_theorems(_need_graph(h), guard_edges=args.guard_edges,
                                       seed=args.seed, timeout=args.timeout)
    elif t == "struct":
        rep = verify_struct_theorem(_need_graph(h), timeout=args.timeout)
    elif t == "characterization":
        rep = verify_characterization(_need_graph(h), timeout=args.timeout)
    elif t == "gadget":
        rep = verify_gadget_theorem(_need_graph(h), args.k, timeout=args.timeout)
    elif t == "join":
        if bool(args.gen2) == bool(args.input2):
            raise InputError("join needs exactly one of --gen2 or --input2")
        other = generators.from_spec(args.gen2) if args.gen2 else \
            formats.read_graph(_read(args.input2))
        rep = verify_join_lemmas(h, other)
    else:
        r = args.r if args.r is not None else h.uniformity() if isinstance(h, Hypergraph) else 2
        rep = verify_hypergraph_gadget(h, r, args.k, timeout=args.timeout)
    _emit(out, args, rep.to_dict(), rep.to_text())
    return EXIT_FAIL if rep.status == FAIL else EXIT_OK


def cmd_zigzag(args, out) -> int:
    h = _graph_only(_load(args))
    kg, _ = kneser_graph_of(h)
    if args.coloring == "search":
        rep = search_zigzag_coloring(kg, args.colors)
        if rep is None:
            raise InputError(f"no proper colouring with {args.colors} colours")
        colouring = rep.witness_coloring
    else:
        colouring = min_element_coloring(h)
        rep = xind_sandwich(kg, [colouring])
    payload = rep.to_dict()
    text = f"lo={rep.lo} hi={rep.hi}\ncoloring={' '.join(map(str, colouring))}\n"
    if args.t is not None:
        w = max_zigzag(kg, colouring, args.t)
        payload["t"] = args.t
        payload["zigzag"] = None if w is None else [list(side) for side in w]
        text += f"t={args.t} zigzag={'none' if w is None else payload['zigzag']}\n"
    _emit(out, args, payload, text)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    config = sweeps.SweepConfig(tuple(args.names) or tuple(sweeps.SWEEPS), args.seed, args.jobs)
    try:
        results = sweeps.run_sweeps(config)
    except KeyError as exc:
        raise InputError(f"unknown sweep {exc.args[0]!r}") from None
    payload = {"sweeps": [r.to_dict() for r in results]}
    if not args.timings:
        for d in payload["sweeps"]:
            d.pop("seconds")
    _emit(out, args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


COMMANDS = {
    "gen": cmd_gen, "bounds": cmd_bounds, "chi": cmd_chi, "psi": cmd_psi,
    "approx": cmd_approx, "partition": cmd_partition, "verify": cmd_verify,
    "zigzag": cmd_zigzag, "sweep": cmd_sweep,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except SolverTimeout as exc:
        res = exc.result
        err.write(f"timeout: chi in [{res.lower}, {res.upper}]\n")
        if args.format == "structured":
            out.write(json.dumps({"timeout": True, "lower": res.lower, "upper": res.upper},
                                 sort_keys=True) + "\n")
        return EXIT_TIMEOUT
    except (InputError, GraphError, PartitionError, formats.FormatError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
