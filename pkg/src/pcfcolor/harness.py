"""Batch runner: one CSV row per (graph, parameter) certifying a bound.

Corpus entries are generator specs (see :func:`generators.gen_family`),
``atlas:<n>`` for every connected graph on at most ``n`` vertices, or
``file:<path>``.  A ``{seed}`` placeholder expands over the experiment's seeds.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import exact, generators, odd, pcf
from .errors import BudgetExceeded, EngineFailure, InputError, PcfError, StructureError
from .graph import Graph, cut_edges, girth_cycle
from .io import read_graph
from .structure import chordal_certificate, lcc, star_free
from .verify import verify

COLUMNS = ("graph_id", "n", "m", "delta", "girth", "class_flags", "engine", "h_or_ell",
           "colors_used", "bound", "bound_holds", "verify_ok", "oracle_value", "oracle_status",
           "nodes", "reason")
TASKS = ("thm13", "thm14", "thm15", "thm16", "thm17", "cor15", "chain", "latin_lb")

# reason codes
OK = ""
PRECONDITION = "precondition"
BOUND = "bound_exceeded"
VERIFY = "verify_failed"
ENGINE = "engine_failure"
BUDGET = "budget"
INPUT = "input_error"
CHAIN = "chain_violation"
CERT = "certificate_failed"
FAILING = {BOUND, VERIFY, ENGINE, CHAIN, CERT, INPUT}


@dataclass
class ExperimentSpec:
    corpus: list[str]
    task: str
    params: list[int] = field(default_factory=lambda: [1])
    seeds: list[int] = field(default_factory=lambda: [0])
    output: str | None = None
    workers: int = 1
    oracle_limit: int = 10
    budget_nodes: int = 2_000_000
    budget_secs: float = 10.0
    timing: bool = False

    def __post_init__(self):
        if self.task not in TASKS:
            raise InputError(f"unknown task {self.task!r}; expected one of {TASKS}")
        if not self.corpus:
            raise InputError("empty corpus")
        if any(p < 1 for p in self.params):
            raise InputError("h / ell parameters must be positive")


def expand_corpus(entries, seeds) -> list[tuple[str, Graph]]:
    out = []
    for entry in entries:
        if "{seed}" in entry:
            for s in seeds:
                spec = entry.replace("{seed}", str(s))
                out.append((spec, generators.gen_family(spec)))
        elif entry.startswith("atlas:"):
            k = int(entry.split(":", 1)[1])
            for i, g in enumerate(generators.atlas_graphs(k)):
                out.append((f"atlas{k}-{i}", g))
        elif entry.startswith("file:"):
            path = entry.split(":", 1)[1]
            out.append((path, read_graph(path)))
        else:
            out.append((entry, generators.gen_family(entry)))
    return out


def class_flags(g: Graph) -> str:
    flags = []
    cert = chordal_certificate(g)
    if cert is not None:
        flags.append(f"chordal:s={cert.s_value}")
    if g.edge_count and not cut_edges(g):
        flags.append("2ec")
    try:
        res = lcc(g, budget=20, fallback=True)
        flags.append(f"lcc={res.value}" if res.exact else f"lcc<={res.value}")
    except BudgetExceeded:
        pass
    if star_free(g, 2)[0]:
        flags.append("claw_free")
    return ";".join(flags)


def _oracle(g: Graph, mode: str, h: int, spec: ExperimentSpec):
    if g.n > spec.oracle_limit:
        return None, "skipped", 0
    res = exact.chromatic(g, exact.ExactQuery(mode, None, h, spec.budget_nodes, spec.budget_secs))
    return res.value, res.status, res.nodes


def _row(gid: str, g: Graph, param, **kw) -> dict:
    gc = girth_cycle(g)
    row = {c: "" for c in COLUMNS}
    row.update(graph_id=gid, n=g.n, m=g.edge_count, delta=g.max_degree,
               girth="" if gc is None else gc.length, class_flags=class_flags(g),
               h_or_ell=param, reason=OK)
    row.update(kw)
    return row


def _bool(x) -> str:
    return "" if x is None else ("1" if x else "0")


def _coloring_row(gid, g, param, spec, engine, run, bound, check, oracle_mode=None, oracle_h=1, lower=None):
    try:
        col, eng = run()
    except (EngineFailure, StructureError) as exc:
        return _row(gid, g, param, engine=engine, bound=bound, reason=ENGINE + ":" + str(exc)[:80])
    ok = check(col)
    used = col.num_colors
    holds = used <= bound and (lower is None or used >= lower)
    row = _row(gid, g, param, engine=eng, colors_used=used, bound=bound,
               bound_holds=_bool(holds), verify_ok=_bool(ok))
    if oracle_mode:
        val, status, nodes = _oracle(g, oracle_mode, oracle_h, spec)
        row.update(oracle_value="" if val is None else val, oracle_status=status, nodes=nodes)
    if not ok:
        row["reason"] = VERIFY
    elif not holds:
        row["reason"] = BOUND
    return row


def _odd_check(g, col, also_cf: bool) -> bool:
    # on quasi-line graphs an odd coloring must also be conflict-free
    rep = verify(g, col)
    return rep.odd_ok and (rep.pcf_ok or not also_cf)


def _hcf_runner(g, h, engine="auto"):
    def run():
        elog = pcf.EngineLog()
        col = pcf.color_hcf(g, h, engine=engine, elog=elog)
        return col, elog.engine
    return run


def run_task(task: str, gid: str, g: Graph, param: int, spec: ExperimentSpec) -> dict:
    delta = g.max_degree
    if task == "thm13":
        h = param
        if delta < h + 2:
            return _row(gid, g, h, reason=PRECONDITION + ":delta<h+2")
        return _coloring_row(gid, g, h, spec, "auto", _hcf_runner(g, h), pcf.general_bound(delta, h),
                             lambda c: verify(g, c, h).hcf_ok, "hcf", h)
    if task == "thm14":
        h = param
        cert = chordal_certificate(g)
        if cert is None:
            return _row(gid, g, h, reason=PRECONDITION + ":not_chordal")
        bound = pcf.chordal_bound(cert, delta, h) if g.edge_count else 1
        return _coloring_row(gid, g, h, spec, "chordal",
                             lambda: (pcf.chordal_hcf(g, cert, h).compacted(), "chordal"),
                             bound, lambda c: verify(g, c, h).hcf_ok, "hcf", h)
    if task == "thm15":
        ell = param
        res = lcc(g, ell, fallback=True)
        if res.exceeds_cap:
            return _row(gid, g, ell, reason=PRECONDITION + f":lcc>{ell}")
        return _coloring_row(gid, g, ell, spec, "peel-lcc",
                             lambda: (odd.odd_color_lcc(g, ell).compacted(), "peel-lcc"),
                             odd.lcc_palette(delta, ell), lambda c: _odd_check(g, c, ell <= 2), "odd")
    if task in ("thm16", "thm17"):
        claw = task == "thm17"
        ell = 2 if claw else param
        if not star_free(g, ell)[0]:
            return _row(gid, g, ell, reason=PRECONDITION + f":K1,{ell + 1}")
        bound = odd.claw_palette(delta) if claw else odd.starfree_palette(delta, ell)
        name = "peel-claw" if claw else "peel-star"
        return _coloring_row(gid, g, ell, spec, name,
                             lambda: (odd.odd_color_starfree(g, ell, claw).compacted(), name),
                             bound, lambda c: _odd_check(g, c, False), "odd")
    if task == "cor15":
        h = param
        if not (2 <= h <= delta - 1):
            return _row(gid, g, h, reason=PRECONDITION + ":need 2<=h<=delta-1")
        return _coloring_row(gid, g, h, spec, "auto", _hcf_runner(g, h - 1), h * delta - 1,
                             lambda c: verify(g, c, h).dynamic_ok, "dynamic", h)
    if task == "chain":
        if g.n > spec.oracle_limit:
            return _row(gid, g, 1, reason=BUDGET + ":too_large", oracle_status="skipped")
        vals, nodes = [], 0
        for mode in ("proper", "odd", "pcf", "square"):
            res = exact.chromatic(g, exact.ExactQuery(mode, None, 1, spec.budget_nodes, spec.budget_secs))
            nodes += res.nodes
            if res.status != "exact":
                return _row(gid, g, 1, engine="oracle", oracle_status="budget", nodes=nodes, reason=BUDGET)
            vals.append(res.value)
        holds = vals == sorted(vals)
        return _row(gid, g, 1, engine="oracle", oracle_value="/".join(map(str, vals)),
                    oracle_status="exact", nodes=nodes, bound_holds=_bool(holds),
                    reason=OK if holds else CHAIN)
    if task == "latin_lb":
        order = next((p for p in range(2, g.n + 1) if p * p + (p - 1) * p + 2 * p == g.n), None)
        if order is None:
            return _row(gid, g, "", reason=PRECONDITION + ":not_latin")
        problems = generators.check_latin_certificate(g, order)
        if problems:
            return _row(gid, g, order - 1, reason=CERT + ":" + problems[0][:60])
        h = order - 1
        return _coloring_row(gid, g, h, spec, "auto", _hcf_runner(g, h), pcf.general_bound(delta, h),
                             lambda c: verify(g, c, h).hcf_ok, "hcf", h, lower=order * order)
    raise InputError(f"unknown task {task!r}")


def _job(args):
    task, gid, g, param, spec = args
    t0 = time.perf_counter()
    try:
        row = run_task(task, gid, g, param, spec)
    except PcfError as exc:
        row = _row(gid, g, param, reason=INPUT + ":" + str(exc)[:80])
    if spec.timing:
        row["wall_ms"] = round(1000 * (time.perf_counter() - t0), 1)
    return row


def run_rows(spec: ExperimentSpec, graphs: list[tuple[str, Graph]] | None = None) -> list[dict]:
    graphs = graphs if graphs is not None else expand_corpus(spec.corpus, spec.seeds)
    params = [1] if spec.task in ("chain", "latin_lb", "thm17") else spec.params
    jobs = [(spec.task, gid, g, p, spec) for gid, g in graphs for p in params]
    if spec.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(spec.workers) as pool:
            return list(pool.map(_job, jobs, chunksize=4))
    return [_job(j) for j in jobs]


def rows_to_csv(rows: list[dict], timing: bool = False) -> str:
    cols = list(COLUMNS) + (["wall_ms"] if timing else [])
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def failed(row: dict) -> bool:
    return row["reason"].split(":", 1)[0] in FAILING


def run_experiment(spec: ExperimentSpec, graphs=None) -> tuple[str, int]:
    """Run the batch; returns the CSV text and the exit status (0 or 2)."""
    rows = run_rows(spec, graphs)
    text = rows_to_csv(rows, spec.timing)
    if spec.output:
        with open(spec.output, "w", newline="") as fh:
            fh.write(text)
    return text, 2 if any(failed(r) for r in rows) else 0
