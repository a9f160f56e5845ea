"""Command-line front end: solve, verify, generate, reduce, bench.

Machine-readable output: ``solve`` prints one JSON report (schema in
docs/report-schema.json).  Exit codes: 0 = answered, 1 = usage or parse
error, 2 = unknown (budget exhausted), 3 = verify found the coloring
invalid.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import families
from .blockgraph import blockgraph_chi
from .cactus import cactus_chi1, cactus_chi2
from .chromatic import DEFAULT_BUDGET, chromatic_number
from .closedform import chi_complete, chi_cycle, chi_tree, chi_wheel
from .coloring import (
    ChiBounds,
    SolveOutcome,
    defects,
    feasibility_precheck,
    monochromatic,
)
from .errors import BudgetExceededError, ExactColoringError
from .graph_io import load_graph, read_coloring, write_graph
from .graphs import Graph, is_connected, is_d_regular, recognize
from .oracle import brute_chi, brute_solve
from .reductions import (
    lift_solution,
    nae_satisfiable,
    parse_nae_formula,
    reduce_coloring_to_exact,
    reduce_increment_defect,
    reduce_nae3sat,
    reduce_planar_variant,
)

EXIT_ANSWERED = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2
EXIT_INVALID = 3


def _is_complete_graph(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n * (g.n - 1) // 2


def _is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_d_regular(g, 2) and is_connected(g)


def _wheel_order(g: Graph) -> int | None:
    """n if g is a wheel W_n (hub + rim cycle), else None."""
    if g.n < 4:
        return None
    hubs = [v for v in range(g.n) if len(g.adj[v]) == g.n - 1]
    for hub in hubs:
        rim = [v for v in range(g.n) if v != hub]
        if all(sum(1 for u in g.adj[v] if u != hub) == 2 for v in rim):
            # rim is 2-regular; connectivity of g makes it a single cycle
            if is_connected(g):
                return g.n
    return None


def _dispatch_auto(g: Graph, d: int, budget: int):
    """Pick the cheapest correct solver; returns (outcome-or-bounds, name)."""
    if d == 0:
        chi, col = chromatic_number(g, budget)
        return SolveOutcome.finite(chi, col), "chromatic"
    if not feasibility_precheck(g, d):
        return SolveOutcome.infeasible(), "precheck"
    if g.n == 0:
        return brute_chi(g, d, budget=budget), "brute"
    if is_d_regular(g, d):
        return SolveOutcome.finite(1, monochromatic(g.n)), "closedform:regular"
    if _is_complete_graph(g):
        return chi_complete(g.n, d), "closedform:complete"
    classes = recognize(g)
    if classes.is_tree:
        return chi_tree(g, d), "closedform:tree"
    if _is_cycle_graph(g) and d in (1, 2):
        return chi_cycle(g.n, d), "closedform:cycle"
    if d == 1 and _wheel_order(g) is not None:
        return chi_wheel(g.n, 1), "closedform:wheel"
    if classes.is_cactus:
        if d == 2:
            return cactus_chi2(g), "cactus"
        if d == 1:
            return cactus_chi1(g), "cactus"
        return SolveOutcome.infeasible(), "cactus"  # cactus has a vertex of degree <= 2
    if classes.is_block_graph:
        return blockgraph_chi(g, d), "blockgraph"
    return brute_chi(g, d, budget=budget), "brute"


def _dispatch_forced(g: Graph, d: int, algorithm: str, budget: int):
    if algorithm == "brute":
        return brute_chi(g, d, budget=budget), "brute"
    if algorithm == "cactus":
        if d == 2:
            return cactus_chi2(g), "cactus"
        if d == 1:
            return cactus_chi1(g), "cactus"
        raise ExactColoringError("cactus algorithms cover d in {1, 2}")
    if algorithm == "blockgraph":
        return blockgraph_chi(g, d), "blockgraph"
    if algorithm == "closedform":
        if is_d_regular(g, d) and g.n > 0:
            return SolveOutcome.finite(1, monochromatic(g.n)), "closedform:regular"
        if _is_complete_graph(g):
            return chi_complete(g.n, d), "closedform:complete"
        if _is_cycle_graph(g) and d in (1, 2):
            return chi_cycle(g.n, d), "closedform:cycle"
        if d == 1 and _wheel_order(g) is not None:
            return chi_wheel(g.n, 1), "closedform:wheel"
        if recognize(g).is_tree:
            return chi_tree(g, d), "closedform:tree"
        raise ExactColoringError("no closed form applies to this graph")
    raise ExactColoringError(f"unknown algorithm {algorithm!r}")


def _report(args, g, outcome, algorithm, elapsed_ms, k=None, reason=None):
    rep = {
        "verdict": None,
        "d": args.d,
        "k": k,
        "chi": None,
        "chi_bounds": None,
        "witness": None,
        "algorithm": algorithm,
        "elapsed_ms": round(elapsed_ms, 3),
        "reason": reason,
        "n": g.n,
        "m": g.m,
    }
    if isinstance(outcome, ChiBounds):
        rep["chi_bounds"] = [outcome.lo, outcome.hi]
        if outcome.witness is not None:
            rep["witness"] = {"k": outcome.witness.k, "assign": list(outcome.witness.assign)}
        if k is not None and k >= outcome.hi:
            rep["verdict"] = "yes"
            return rep, EXIT_ANSWERED
        if k is not None and k < outcome.lo:
            rep["verdict"] = "no"
            return rep, EXIT_ANSWERED
        rep["verdict"] = "unknown"
        rep["reason"] = reason or "matching enumeration budget exhausted"
        return rep, EXIT_UNKNOWN
    if outcome.is_infeasible:
        rep["verdict"] = "no" if k is not None else "infinite"
        rep["reason"] = reason or (
            "infeasible (chi = infinity)" if k is not None else None
        )
        return rep, EXIT_ANSWERED
    rep["chi"] = outcome.chi
    if outcome.witness is not None:
        rep["witness"] = {"k": outcome.witness.k, "assign": list(outcome.witness.assign)}
    if k is not None:
        rep["verdict"] = "yes" if outcome.chi <= k else "no"
    else:
        rep["verdict"] = "yes"
    return rep, EXIT_ANSWERED


def cmd_solve(args) -> int:
    g = load_graph(args.input, args.format)
    start = time.perf_counter()
    reason = None
    try:
        if args.k is not None and args.algorithm == "brute":
            witness = brute_solve(g, args.k, args.d, budget=args.budget)
            elapsed = (time.perf_counter() - start) * 1000
            outcome = (
                SolveOutcome.finite(args.k, witness)
                if witness is not None
                else SolveOutcome.infeasible()
            )
            if witness is None:
                rep = {
                    "verdict": "no",
                    "d": args.d,
                    "k": args.k,
                    "chi": None,
                    "chi_bounds": None,
                    "witness": None,
                    "algorithm": "brute",
                    "elapsed_ms": round(elapsed, 3),
                    "reason": None,
                    "n": g.n,
                    "m": g.m,
                }
                code = EXIT_ANSWERED
            else:
                rep, code = _report(args, g, outcome, "brute", elapsed, k=args.k)
        else:
            if args.algorithm == "auto":
                if args.d > g.min_degree() and g.n > 0:
                    reason = "d exceeds min degree"
                outcome, algorithm = _dispatch_auto(g, args.d, args.budget)
            else:
                outcome, algorithm = _dispatch_forced(g, args.d, args.algorithm, args.budget)
            elapsed = (time.perf_counter() - start) * 1000
            rep, code = _report(args, g, outcome, algorithm, elapsed, k=args.k, reason=reason)
    except BudgetExceededError as exc:
        elapsed = (time.perf_counter() - start) * 1000
        rep = {
            "verdict": "unknown",
            "d": args.d,
            "k": args.k,
            "chi": None,
            "chi_bounds": None,
            "witness": None,
            "algorithm": args.algorithm,
            "elapsed_ms": round(elapsed, 3),
            "reason": str(exc),
            "n": g.n,
            "m": g.m,
        }
        code = EXIT_UNKNOWN
    print(json.dumps(rep))
    return code


def cmd_verify(args) -> int:
    g = load_graph(args.graph, args.format)
    with open(args.coloring, encoding="utf-8") as fh:
        col = read_coloring(fh.read(), n=g.n)
    vec = defects(g, col)
    bad = [(v, x) for v, x in enumerate(vec) if x != args.d]
    if not bad:
        print(f"valid exact ({col.k}, {args.d})-coloring")
        return EXIT_ANSWERED
    for v, x in bad:
        print(f"vertex {v}: defect {x}, expected {args.d}")
    print(f"invalid: {len(bad)} of {g.n} vertices off target")
    return EXIT_INVALID


def cmd_generate(args) -> int:
    name = args.family.replace("-", "_")
    if name == "random_cactus":
        g = families.random_cactus(args.n, seed=args.seed, style=args.style)
    elif name == "random_block_graph":
        g = families.random_block_graph(args.n, seed=args.seed)
    elif name == "random_graph":
        g = families.random_graph(args.n, p=args.p, seed=args.seed)
    else:
        params = {}
        if name in ("cycle", "path", "complete", "wheel", "star"):
            if args.n is None:
                raise ExactColoringError(f"family {args.family} needs --n")
            params["n"] = args.n
        elif name in ("cartesian_k2_complete", "categorical_k2_complete"):
            if args.m is None:
                raise ExactColoringError(f"family {args.family} needs --m")
            params["m"] = args.m
        g = families.gen_family(name, **params)
    text = write_graph(g, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_ANSWERED


_CHECK_CAP = 40  # brute-force round-trip ceiling (target vertices)


def _check_reduction(kind, source_yes, target, k, d, rmap) -> None:
    if target.n > _CHECK_CAP:
        raise ExactColoringError(
            f"--check needs a target with at most {_CHECK_CAP} vertices (got {target.n})"
        )
    witness = brute_solve(target, k, d)
    target_yes = witness is not None
    if source_yes != target_yes:
        raise ExactColoringError(
            f"round-trip failed: source {'YES' if source_yes else 'NO'}, "
            f"target {'YES' if target_yes else 'NO'}"
        )
    if target_yes:
        lift_solution(rmap, witness)
    print(
        f"check ok: source and target agree ({'YES' if source_yes else 'NO'})"
        + (", lifted solution verified" if target_yes else "")
    )


def cmd_reduce(args) -> int:
    if args.construction == "nae3sat":
        with open(args.input, encoding="utf-8") as fh:
            f = parse_nae_formula(fh.read(), strict=args.strict)
        target, rmap = reduce_nae3sat(f, variable_gadget=args.gadget)
        source_yes = nae_satisfiable(f) is not None
        check_k, check_d = 2, 2
    else:
        g = load_graph(args.input, args.format)
        if args.construction == "coloring":
            target, rmap = reduce_coloring_to_exact(g, args.k, args.d)
            check_k, check_d = args.k, args.d
            source_yes = None
            if args.check:
                chi, _ = chromatic_number(g)
                source_yes = chi <= args.k
        elif args.construction == "planar":
            target, rmap = reduce_planar_variant(g, args.d)
            check_k, check_d = 3, args.d
            source_yes = None
            if args.check:
                chi, _ = chromatic_number(g)
                source_yes = chi <= 3
        elif args.construction == "increment":
            target, rmap = reduce_increment_defect(g, args.d)
            check_k, check_d = 2, args.d + 2
            source_yes = None
            if args.check:
                source_yes = brute_solve(g, 2, args.d) is not None
        else:
            raise ExactColoringError(f"unknown construction {args.construction!r}")

    out_fmt = "edgelist" if args.construction == "nae3sat" else (args.format or "edgelist")
    text = write_graph(target, out_fmt)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    map_text = rmap.to_json()
    map_path = args.map or (args.output + ".map.json" if args.output else None)
    if map_path:
        with open(map_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(map_text)
    else:
        sys.stderr.write(map_text)
    if args.check:
        _check_reduction(args.construction, source_yes, target, check_k, check_d, rmap)
    return EXIT_ANSWERED


def cmd_bench(args) -> int:
    sizes = [args.base * (2 ** i) for i in range(args.doublings + 1)]
    rows = []
    for n in sizes:
        if args.family == "blockgraph":
            g = families.random_block_graph(n, seed=args.seed)
            start = time.perf_counter()
            blockgraph_chi(g, args.d)
        else:
            g = families.random_cactus(n, seed=args.seed, style="bridged")
            start = time.perf_counter()
            cactus_chi2(g)
        elapsed = (time.perf_counter() - start) * 1000
        rows.append({"n": n, "m": g.m, "elapsed_ms": round(elapsed, 3)})
        print(json.dumps(rows[-1]))
    return EXIT_ANSWERED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactcolor",
        description="Exact defective graph coloring: solvers, generators, hardness gadgets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="compute chi_d or decide chi_d <= k")
    ps.add_argument("input", help="graph file")
    ps.add_argument("--d", type=int, required=True, help="exact defect per vertex")
    group = ps.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="decision: is chi_d <= k?")
    group.add_argument("--chi", action="store_true", help="optimization: compute chi_d")
    ps.add_argument(
        "--algorithm",
        choices=["auto", "brute", "cactus", "blockgraph", "closedform"],
        default="auto",
    )
    ps.add_argument("--format", choices=["edgelist", "dimacs"], default=None)
    ps.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    ps.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved for the deterministic parallel oracle; results never depend on it",
    )
    ps.set_defaults(func=cmd_solve)

    pv = sub.add_parser("verify", help="validate a coloring file against a graph")
    pv.add_argument("graph")
    pv.add_argument("coloring")
    pv.add_argument("--d", type=int, required=True)
    pv.add_argument("--format", choices=["edgelist", "dimacs"], default=None)
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("generate", help="write a family graph as EDGELIST/DIMACS")
    pg.add_argument(
        "family",
        help="cycle|path|complete|wheel|star|petersen|octahedron|icosahedron|"
        "tightness-gadget|cartesian-k2-complete|categorical-k2-complete|"
        "random-cactus|random-block-graph|random-graph",
    )
    pg.add_argument("--n", type=int, default=None)
    pg.add_argument("--m", type=int, default=None)
    pg.add_argument("--p", type=float, default=0.5, help="edge probability (random-graph)")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--style", choices=["mixed", "bridged", "shared", "petaled"], default="mixed")
    pg.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    pg.add_argument("-o", "--output", default=None)
    pg.set_defaults(func=cmd_generate)

    pr = sub.add_parser("reduce", help="emit a hardness construction + provenance map")
    pr.add_argument("construction", choices=["coloring", "planar", "increment", "nae3sat"])
    pr.add_argument("input", help="graph file, or formula file for nae3sat")
    pr.add_argument("--k", type=int, default=3, help="colors (coloring construction)")
    pr.add_argument("--d", type=int, default=1, help="defect parameter")
    pr.add_argument("--gadget", choices=["c4", "c3"], default="c4")
    pr.add_argument("--strict", action="store_true", help="reject repeated clause variables")
    pr.add_argument("--format", choices=["edgelist", "dimacs"], default=None)
    pr.add_argument("-o", "--output", default=None)
    pr.add_argument("--map", default=None, help="write the JSON provenance map here")
    pr.add_argument("--check", action="store_true", help="brute-force round-trip check")
    pr.set_defaults(func=cmd_reduce)

    pb = sub.add_parser("bench", help="time the polynomial solvers over doubling sizes")
    pb.add_argument("--family", choices=["cactus", "blockgraph"], default="cactus")
    pb.add_argument("--d", type=int, default=2)
    pb.add_argument("--base", type=int, default=250)
    pb.add_argument("--doublings", type=int, default=3)
    pb.add_argument("--seed", type=int, default=0)
    pb.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExactColoringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
