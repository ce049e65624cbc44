"""Command-line interface.

Exit codes: 0 success, 2 verification failure, 3 budget exhausted,
4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import exact, generators, harness, odd, pcf
from .errors import BudgetExceeded, ContractError, EngineFailure, InputError, PcfError, StructureError
from .graph import cut_edges, girth_cycle
from .io import format_coloring, format_graph, read_coloring, read_graph
from .structure import chordal_certificate, check_ordering, lcc, paper_ordering, star_free, ear_decompose
from .verify import verify

EXIT_OK, EXIT_VERIFY, EXIT_BUDGET, EXIT_INPUT = 0, 2, 3, 4


def _emit(args, obj, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(obj, indent=None if args.json else 2, default=str))
    else:
        print(text)


def _load(args, path):
    return read_graph(path, args.format)


def cmd_gen(args) -> int:
    g = generators.gen_family(args.family)
    text = format_graph(g, args.format or "edgelist")
    if args.out:
        Path(args.out).write_text(text)
        if any(g.labels or ()):
            side = args.labels or args.out + ".labels.json"
            Path(side).write_text(json.dumps({"labels": list(g.labels)}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _load(args, args.graph)
    gc = girth_cycle(g)
    bridges = cut_edges(g)
    cert = chordal_certificate(g)
    info = {
        "n": g.n,
        "m": g.edge_count,
        "delta": g.max_degree,
        "connected": g.is_connected(),
        "girth": None if gc is None else gc.length,
        "girth_cycle": None if gc is None else list(gc.vertices),
        "bridges": [list(e) for e in bridges],
        "chordal": cert is not None,
        "peo": None if cert is None else list(cert.peo),
        "s_value": None if cert is None else cert.s_value,
    }
    try:
        res = lcc(g, fallback=True)
        info["lcc"] = res.value
        info["lcc_exact"] = res.exact
    except BudgetExceeded:
        info["lcc"] = None
    ok, wit = star_free(g, args.ell)
    info[f"k1_{args.ell + 1}_free"] = ok
    info["star_witness"] = None if wit is None else {"center": wit.center, "leaves": list(wit.leaves)}
    if g.is_connected() and not bridges and gc is not None:
        dec = ear_decompose(g, gc)
        order = paper_ordering(g)
        info["ears"] = [{"vertices": list(e.vertices), "cycle": e.is_cycle} for e in dec.ears]
        info["ordering"] = list(order.order)
        info["cycle_start"] = order.cycle_start
        info["ordering_problems"] = check_ordering(g, order)
    _emit(args, info)
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load(args, args.graph)
    elog = pcf.EngineLog()
    col = pcf.color_hcf(g, args.h, engine=args.engine, seed=args.seed, elog=elog)
    if args.trace:
        Path(args.trace).write_text(json.dumps({
            "engine": elog.engine,
            "events": elog.events,
            "nice_sequences": [t.as_dict() for t in elog.traces],
        }, indent=1))
    if args.out:
        Path(args.out).write_text(format_coloring(col) + "\n")
    rep = verify(g, col, args.h)
    delta = g.max_degree
    bound = pcf.general_bound(delta, args.h) if delta >= args.h + 2 else None
    out = {"engine": elog.engine, "colors_used": col.num_colors, "bound": bound,
           "hcf_ok": rep.hcf_ok, "colors": list(col.colors)}
    _emit(args, out, None if args.json else format_coloring(col))
    return EXIT_OK if rep.hcf_ok else EXIT_VERIFY


def cmd_odd(args) -> int:
    g = _load(args, args.graph)
    stack = odd.PeelStack(0)
    driver = args.driver
    if args.claw:
        driver = "starfree"
    elif driver == "auto":
        res = lcc(g, args.ell, fallback=True)
        driver = "lcc" if (res.exact and not res.exceeds_cap) else "starfree"
    if driver == "lcc":
        col = odd.odd_color_lcc(g, args.ell, trace=stack)
    else:
        col = odd.odd_color_starfree(g, args.ell, args.claw, trace=stack)
    col = col.compacted()
    if args.trace:
        Path(args.trace).write_text(json.dumps(stack.as_dict(), indent=1))
    if args.out:
        Path(args.out).write_text(format_coloring(col) + "\n")
    rep = verify(g, col)
    out = {"driver": driver, "palette": stack.m, "colors_used": col.num_colors, "odd_ok": rep.odd_ok,
           "violations": stack.violations, "colors": list(col.colors)}
    _emit(args, out, None if args.json else format_coloring(col))
    return EXIT_OK if rep.odd_ok else EXIT_VERIFY


def cmd_exact(args) -> int:
    g = _load(args, args.graph)
    if args.k is not None and not args.minimize:
        q = exact.ExactQuery(args.mode, args.k, args.h, args.budget_nodes, args.budget_secs)
        res = exact.exists_coloring(g, q)
        out = {"decision": {"found": True, "none": False}.get(res.status), "status": res.status,
               "witness": list(res.coloring.colors) if res.coloring else None, "nodes": res.nodes}
        _emit(args, out)
        return EXIT_BUDGET if res.status == "budget" else EXIT_OK
    q = exact.ExactQuery(args.mode, None, args.h, args.budget_nodes, args.budget_secs)
    res = exact.chromatic(g, q)
    _emit(args, res.as_dict())
    return EXIT_BUDGET if res.status == "budget" else EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args, args.graph)
    col = read_coloring(args.coloring, g.n)
    rep = verify(g, col, args.h)
    verdict = {
        "proper": rep.proper,
        "odd": rep.odd_ok,
        "pcf": rep.pcf_ok,
        "hcf": rep.hcf_ok,
        "dynamic": rep.dynamic_ok,
    }[args.notion]
    out = rep.as_dict()
    out["notion"] = args.notion
    out["ok"] = verdict and rep.complete
    _emit(args, out)
    return EXIT_OK if out["ok"] else EXIT_VERIFY


def cmd_bench(args) -> int:
    seeds = list(range(args.seeds)) if args.seeds is not None else [args.seed]
    spec = harness.ExperimentSpec(
        corpus=args.corpus, task=args.task, params=args.param, seeds=seeds, output=args.out,
        workers=args.workers, oracle_limit=args.oracle_limit, budget_nodes=args.budget_nodes,
        budget_secs=args.budget_secs, timing=args.timing)
    text, status = harness.run_experiment(spec)
    if not args.out:
        sys.stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    def globals_parser(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags without clobbering values given earlier
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        gp = argparse.ArgumentParser(add_help=False)
        gp.add_argument("--format", choices=["edgelist", "dimacs"], default=d(None),
                        help="graph file format (read: auto-detect when omitted; write: edgelist)")
        gp.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
        gp.add_argument("--seed", type=int, default=d(0))
        return gp

    common = globals_parser(True)
    p = argparse.ArgumentParser(prog="pcfcolor", parents=[globals_parser(False)],
                                description="Conflict-free and odd coloring toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a graph")
    s.add_argument("family", help="e.g. cycle:5, ktree:2,30,7, latin:3, line:petersen")
    s.add_argument("-o", "--out")
    s.add_argument("--labels", help="JSON sidecar for vertex labels (default <out>.labels.json)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("analyze", parents=[common], help="structural certificates as JSON")
    s.add_argument("graph")
    s.add_argument("--ell", type=int, default=2)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("color", parents=[common], help="proper h-conflict-free coloring")
    s.add_argument("graph")
    s.add_argument("--h", type=int, default=1)
    s.add_argument("--engine", choices=pcf.ENGINES, default="auto")
    s.add_argument("--trace", help="write engine trace JSON here")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("odd-color", parents=[common], help="odd coloring by peeling")
    s.add_argument("graph")
    s.add_argument("--ell", type=int, default=2)
    s.add_argument("--claw", action="store_true", help="claw-free palette (ell = 2)")
    s.add_argument("--driver", choices=["auto", "lcc", "starfree"], default="auto")
    s.add_argument("--trace", help="write the peel stack JSON here")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_odd)

    s = sub.add_parser("exact", parents=[common], help="exact oracle")
    s.add_argument("graph")
    s.add_argument("--mode", choices=exact.MODES, default="pcf")
    s.add_argument("--h", type=int, default=1)
    s.add_argument("--k", type=int)
    s.add_argument("--minimize", action="store_true")
    s.add_argument("--budget-nodes", type=int, default=exact.DEFAULT_MAX_NODES)
    s.add_argument("--budget-secs", type=float, default=exact.DEFAULT_MAX_SECONDS)
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("verify", parents=[common], help="check a coloring file")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--h", type=int, default=1)
    s.add_argument("--notion", choices=["proper", "odd", "pcf", "hcf", "dynamic"], default="hcf")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", parents=[common], help="batch experiment to CSV")
    s.add_argument("--task", choices=harness.TASKS, required=True)
    s.add_argument("--corpus", nargs="+", required=True,
                   help="generator specs ({seed} expands), atlas:<n>, file:<path>")
    s.add_argument("--param", type=int, nargs="+", default=[1], help="h or ell values")
    s.add_argument("--seeds", type=int, help="expand {seed} over 0..N-1 (default: --seed)")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--oracle-limit", type=int, default=10)
    s.add_argument("--budget-nodes", type=int, default=2_000_000)
    s.add_argument("--budget-secs", type=float, default=10.0)
    s.add_argument("--timing", action="store_true", help="append a wall_ms column")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, StructureError, ContractError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EngineFailure as exc:
        print(f"engine failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except PcfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
