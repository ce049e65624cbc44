"""Exact decision and minimization oracles for all chromatic parameters.

Backtracking over vertices in degeneracy order with canonical color
symmetry breaking (color ``c + 1`` is only tried once ``c`` is in use).
Neighborhood constraints are non-monotone, so they are enforced when a
neighborhood becomes fully colored, plus a sound feasibility prune: a vertex
with ``r`` uncolored neighbors can gain at most ``r`` more unique (or
distinct) colors.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph, square
from .verify import PartialColoring, verify

MODES = ("proper", "odd", "pcf", "hcf", "dynamic", "square")

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 60.0


@dataclass(frozen=True)
class ExactQuery:
    """``k=None`` asks for the minimum; otherwise a decision for palette ``k``."""

    mode: str
    k: int | None = None
    h: int = 1
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.h < 1:
            raise InputError("h must be positive")
        if self.k is not None and self.k < 0:
            raise InputError("k must be non-negative")
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise InputError("budget must be positive")


@dataclass
class ExactResult:
    status: str                      # "found" | "none" | "budget"
    coloring: PartialColoring | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass
class ChromaticResult:
    status: str                      # "exact" | "budget"
    value: int | None
    lower: int
    upper: int | None
    witness: PartialColoring | None
    nodes: int

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "witness": list(self.witness.colors) if self.witness else None,
            "nodes": self.nodes,
        }


class _OutOfBudget(Exception):
    pass


def degeneracy_order(g: Graph, vertices=None) -> list[int]:
    """Smallest-last order reversed (densest core first).

    Removal picks minimum residual degree, ties by original degree then id.
    """
    vs = set(range(g.n)) if vertices is None else set(vertices)
    deg = {v: sum(1 for w in g.adjacency[v] if w in vs) for v in vs}
    removed = []
    alive = set(vs)
    while alive:
        v = min(alive, key=lambda x: (deg[x], g.degree(x), x))
        removed.append(v)
        alive.remove(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    removed.reverse()
    return removed


class _Search:
    def __init__(self, g: Graph, mode: str, k: int, h: int, fixed, symmetry: bool,
                 max_nodes: int, deadline: float | None, nodes_start: int = 0):
        self.g = g
        self.mode = mode
        self.k = k
        self.n = g.n
        self.adj = g.adjacency
        if mode == "pcf":
            h = 1
        self.need = [min(len(a), h) for a in self.adj]
        self.colors = [0] * self.n
        self.cnt = [[0] * (k + 1) for _ in range(self.n)]
        self.uniq = [0] * self.n
        self.distinct = [0] * self.n
        self.oddc = [0] * self.n
        self.unc = [len(a) for a in self.adj]
        self.fixed = dict(fixed or {})
        self.symmetry = symmetry and not self.fixed
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.nodes = nodes_start
        free = [v for v in range(self.n) if v not in self.fixed]
        self.order = degeneracy_order(g, free)

    def _assign(self, v: int, c: int) -> bool:
        """Color v; returns False (after still applying) if a constraint broke."""
        self.colors[v] = c
        ok = True
        mode = self.mode
        for x in self.adj[v]:
            row = self.cnt[x]
            old = row[c]
            row[c] = old + 1
            if old == 0:
                self.uniq[x] += 1
                self.distinct[x] += 1
                self.oddc[x] += 1
            elif old == 1:
                self.uniq[x] -= 1
                self.oddc[x] -= 1
            elif old % 2 == 0:
                self.oddc[x] += 1
            else:
                self.oddc[x] -= 1
            self.unc[x] -= 1
            if not ok:
                continue
            if mode in ("hcf", "pcf"):
                if self.uniq[x] + self.unc[x] < self.need[x]:
                    ok = False
            elif mode == "dynamic":
                if self.distinct[x] + self.unc[x] < self.need[x]:
                    ok = False
            elif mode == "odd":
                if self.unc[x] == 0 and self.oddc[x] == 0:
                    ok = False
        return ok

    def _unassign(self, v: int) -> None:
        c = self.colors[v]
        self.colors[v] = 0
        for x in self.adj[v]:
            row = self.cnt[x]
            old = row[c]
            row[c] = old - 1
            if old == 1:
                self.uniq[x] -= 1
                self.distinct[x] -= 1
                self.oddc[x] -= 1
            elif old == 2:
                self.uniq[x] += 1
                self.oddc[x] += 1
            elif old % 2 == 0:
                self.oddc[x] += 1
            else:
                self.oddc[x] -= 1
            self.unc[x] += 1

    def _proper_ok(self, v: int, c: int) -> bool:
        colors = self.colors
        return all(colors[w] != c for w in self.adj[v])

    def run(self) -> PartialColoring | None:
        for v, c in sorted(self.fixed.items()):
            if not (1 <= c <= self.k) or not self._proper_ok(v, c):
                return None
            if not self._assign(v, c):
                return None
        if self._rec(0, 0):
            return PartialColoring(tuple(self.colors), max(self.k, 1))
        return None

    def _rec(self, t: int, used: int) -> bool:
        if t == len(self.order):
            return True
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes & 0x3FFF == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget
        v = self.order[t]
        top = min(self.k, used + 1) if self.symmetry else self.k
        cnt_v = self.cnt[v]
        for c in range(1, top + 1):
            if cnt_v[c]:
                continue
            ok = self._assign(v, c)
            if ok and self._rec(t + 1, max(used, c)):
                return True
            self._unassign(v)
        return False


def _normalize(g: Graph, mode: str, h: int) -> tuple[Graph, str]:
    if mode == "square":
        return square(g), "proper"
    return g, mode


def search(g: Graph, mode: str, k: int, h: int = 1, fixed: dict[int, int] | None = None,
           symmetry: bool = True, max_nodes: int = DEFAULT_MAX_NODES,
           max_seconds: float | None = DEFAULT_MAX_SECONDS) -> ExactResult:
    """Decide whether ``g`` has a ``mode`` coloring from palette ``1..k``.

    ``fixed`` pins colors of some vertices (symmetry breaking is then off).
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    gg, m = _normalize(g, mode, h)
    if gg.n == 0:
        return ExactResult("found", PartialColoring((), max(k, 1)), 0)
    if k <= 0:
        return ExactResult("none", None, 0)
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    s = _Search(gg, m, k, h, fixed, symmetry, max_nodes, deadline)
    try:
        col = s.run()
    except _OutOfBudget:
        return ExactResult("budget", None, s.nodes)
    if col is None:
        return ExactResult("none", None, s.nodes)
    return ExactResult("found", col, s.nodes)


def exists_coloring(g: Graph, q: ExactQuery) -> ExactResult:
    if q.k is None:
        raise InputError("exists_coloring needs a fixed k")
    res = search(g, q.mode, q.k, q.h, max_nodes=q.max_nodes, max_seconds=q.max_seconds)
    if res.found:
        rep = verify(_normalize(g, q.mode, q.h)[0], res.coloring, q.h)
        assert rep.complete and rep.proper, "oracle produced an invalid witness"
    return res


def maximum_clique(g: Graph) -> list[int]:
    """Exact maximum clique via bitmask branch and bound."""
    n = g.n
    adj = [0] * n
    for v in range(n):
        for w in g.adjacency[v]:
            adj[v] |= 1 << w
    best = [0]

    def popcount(x):
        return bin(x).count("1")

    def rec(cand: int, chosen: int):
        if cand == 0:
            if popcount(chosen) > popcount(best[0]):
                best[0] = chosen
            return
        if popcount(chosen) + popcount(cand) <= popcount(best[0]):
            return
        i = cand.bit_length() - 1
        rec(cand & adj[i], chosen | (1 << i))
        rec(cand & ~(1 << i), chosen)

    rec((1 << n) - 1, 0)
    return [v for v in range(n) if best[0] >> v & 1]


def lower_bound(g: Graph, mode: str, h: int = 1) -> int:
    """Clique floor, strengthened per mode."""
    if g.n == 0:
        return 0
    if mode == "square":
        return max(len(maximum_clique(square(g))), g.max_degree + 1)
    floor = max(1, len(maximum_clique(g)))
    if mode in ("hcf", "pcf", "dynamic"):
        hh = 1 if mode == "pcf" else h
        floor = max(floor, max(min(d, hh) + 1 for d in g.degrees()))
    return floor


def chromatic(g: Graph, q: ExactQuery) -> ChromaticResult:
    """Least ``k`` admitting a ``q.mode`` coloring, counting up from the floor."""
    if g.n == 0:
        return ChromaticResult("exact", 0, 0, 0, PartialColoring((), 1), 0)
    k = lower_bound(g, q.mode, q.h)
    nodes = 0
    deadline = time.monotonic() + q.max_seconds
    while True:
        remaining = q.max_seconds if deadline is None else max(deadline - time.monotonic(), 1e-3)
        res = search(g, q.mode, k, q.h, max_nodes=max(q.max_nodes - nodes, 1), max_seconds=remaining)
        nodes += res.nodes
        if res.status == "found":
            return ChromaticResult("exact", k, k, k, res.coloring, nodes)
        if res.status == "budget":
            return ChromaticResult("budget", None, k, None, None, nodes)
        k += 1
        if k > g.n:
            # n distinct colors always satisfy every mode; unreachable
            raise AssertionError("no coloring with n colors")


def chain(g: Graph, max_nodes: int = DEFAULT_MAX_NODES, max_seconds: float = DEFAULT_MAX_SECONDS):
    """Exact values of chi, chi_o, chi_pcf and chi(G^2)."""
    out = {}
    for mode in ("proper", "odd", "pcf", "square"):
        out[mode] = chromatic(g, ExactQuery(mode, None, 1, max_nodes, max_seconds))
    return out
