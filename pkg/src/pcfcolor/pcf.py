"""Proper h-conflict-free coloring engines.

Regimes handled by :func:`color_hcf`:

* ``Delta <= h + 1``: h-CF coincides with coloring the square, done exactly
  for small components and by DSATUR otherwise;
* chordal graphs: reverse elimination-order greedy whenever its palette
  ``floor(1 + (h+1) * min(s-1, (Delta+h-1)/2))`` beats ``(h+1)Delta - 1``;
* ``Delta == h + 2``: edge-deletion recursion with local repair
  (``Delta == 3`` uses an exact search with 4 colors);
* ``Delta >= h + 3``: bridges are cut, each 2-edge-connected piece is colored
  greedily along the ear ordering keeping every partial coloring *good*, the
  last three vertices are completed by search, and pieces are glued back by
  permuting colors.

Every engine output is re-verified; palettes never exceed ``(h+1)Delta - 1``
when ``Delta >= h + 2``.
"""

from __future__ import annotations

import logging
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .errors import ContractError, EngineFailure, InputError, PreconditionError
from .graph import Graph, cut_edges, square
from .structure import ChordalCertificate, VertexOrdering, chordal_certificate, paper_ordering
from .verify import PartialColoring, verify

log = logging.getLogger(__name__)

SQUARE_EXACT_LIMIT = 14
ENDGAME_R_MAX = 6
RESTARTS = 3


def general_bound(delta: int, h: int) -> int:
    return (h + 1) * delta - 1


# ---------------------------------------------------------------------------
# good colorings


class GoodColoringState:
    """Partial proper coloring with incremental neighborhood tallies.

    A vertex is *good* when it sees at least ``h`` unique colors or all its
    colored neighbors have distinct colors.  A vertex is *risky* when it has
    an uncolored neighbor and at most ``h`` unique colors.
    """

    def __init__(self, g: Graph, h: int, palette_size: int):
        if h < 1:
            raise InputError("h must be positive")
        self.g = g
        self.h = h
        self.palette_size = palette_size
        self.colors = [0] * g.n
        self.counts: list[Counter] = [Counter() for _ in range(g.n)]
        self.n_unique = [0] * g.n
        self.n_repeat = [0] * g.n
        self.n_uncolored = [len(a) for a in g.adjacency]

    @classmethod
    def from_coloring(cls, g: Graph, h: int, coloring: PartialColoring, palette_size: int | None = None):
        st = cls(g, h, palette_size or coloring.palette_size)
        for v, c in enumerate(coloring.colors):
            if c:
                st.assign(v, c)
        return st

    def copy(self) -> "GoodColoringState":
        other = GoodColoringState.__new__(GoodColoringState)
        other.g = self.g
        other.h = self.h
        other.palette_size = self.palette_size
        other.colors = list(self.colors)
        other.counts = [Counter(c) for c in self.counts]
        other.n_unique = list(self.n_unique)
        other.n_repeat = list(self.n_repeat)
        other.n_uncolored = list(self.n_uncolored)
        return other

    def coloring(self) -> PartialColoring:
        return PartialColoring(tuple(self.colors), self.palette_size)

    # -- queries -----------------------------------------------------------

    def unique(self, v: int) -> set[int]:
        return {c for c, k in self.counts[v].items() if k == 1}

    def neighbor_colors(self, v: int) -> set[int]:
        return {c for c, k in self.counts[v].items() if k}

    def is_good_vertex(self, v: int) -> bool:
        return self.n_unique[v] >= self.h or self.n_repeat[v] == 0

    def is_good(self) -> bool:
        return all(self.is_good_vertex(v) for v in range(self.g.n))

    def is_risky(self, u: int) -> bool:
        return self.n_uncolored[u] > 0 and self.n_unique[u] <= self.h

    def risky_neighbors(self, v: int) -> list[int]:
        return [u for u in self.g.adjacency[v] if self.is_risky(u)]

    def forbidden(self, v: int) -> set[int]:
        out = self.neighbor_colors(v)
        for u in self.risky_neighbors(v):
            out |= self.unique(u)
        return out

    def available(self, v: int) -> list[int]:
        """Colors keeping the coloring good when assigned to uncolored ``v``."""
        if self.colors[v]:
            raise InputError(f"vertex {v} is already colored")
        bad = self.forbidden(v)
        return [c for c in range(1, self.palette_size + 1) if c not in bad]

    def is_special(self, w: int) -> bool:
        return self.n_unique[w] == self.h + 1

    def special_common_neighbors(self, u: int, v: int) -> list[int]:
        nb = self.g.neighbor_set(v)
        return [w for w in self.g.adjacency[u] if w in nb and self.is_special(w)]

    # -- mutation ----------------------------------------------------------

    def assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        for x in self.g.adjacency[v]:
            cnt = self.counts[x]
            old = cnt[c]
            cnt[c] = old + 1
            if old == 0:
                self.n_unique[x] += 1
            elif old == 1:
                self.n_unique[x] -= 1
                self.n_repeat[x] += 1
            self.n_uncolored[x] -= 1

    def unassign(self, v: int) -> None:
        c = self.colors[v]
        if not c:
            return
        self.colors[v] = 0
        for x in self.g.adjacency[v]:
            cnt = self.counts[x]
            old = cnt[c]
            if old == 1:
                del cnt[c]
                self.n_unique[x] -= 1
            else:
                cnt[c] = old - 1
                if old == 2:
                    self.n_unique[x] += 1
                    self.n_repeat[x] -= 1
            self.n_uncolored[x] += 1

    def extend(self, v: int, c: int) -> "GoodColoringState":
        """Good extension: a new state with ``v`` colored ``c``."""
        if c not in self.available(v):
            raise ContractError(f"color {c} is not available at vertex {v}")
        st = self.copy()
        st.assign(v, c)
        return st


def available_colors(state: GoodColoringState, v: int) -> set[int]:
    return set(state.available(v))


def good_extend(state: GoodColoringState, v: int, c: int) -> GoodColoringState:
    return state.extend(v, c)


# ---------------------------------------------------------------------------
# nice sequences


@dataclass
class NiceSequenceTrace:
    ordering: VertexOrdering
    h: int
    palette_size: int
    steps: list[tuple[int, int]] = field(default_factory=list)
    relabel_applied: bool = False
    s4_tracking: bool = False
    stalled: bool = False
    events: list[str] = field(default_factory=list)

    def state(self, g: Graph, i: int | None = None) -> PartialColoring:
        """Coloring after the first ``i`` steps (all steps by default)."""
        colors = [0] * g.n
        for v, c in self.steps[: len(self.steps) if i is None else i]:
            colors[v] = c
        return PartialColoring(tuple(colors), self.palette_size)

    def as_dict(self) -> dict:
        return {
            "order": list(self.ordering.order),
            "cycle_start": self.ordering.cycle_start,
            "h": self.h,
            "palette_size": self.palette_size,
            "steps": [list(s) for s in self.steps],
            "relabel_applied": self.relabel_applied,
            "s4_tracking": self.s4_tracking,
            "stalled": self.stalled,
            "events": list(self.events),
        }


def _check_nice_preconditions(g: Graph, h: int) -> None:
    delta = g.max_degree
    if delta < h + 3:
        raise PreconditionError(f"nice sequence needs Delta >= h+3 (Delta={delta}, h={h})")
    if not g.is_connected():
        raise PreconditionError("nice sequence needs a connected graph")
    if cut_edges(g):
        raise PreconditionError("nice sequence needs a 2-edge-connected graph")


def nice_sequence_color(g: Graph, h: int, palette_size: int | None = None,
                        seed: int | None = None) -> NiceSequenceTrace:
    """Color ``v_1 .. v_{n-3}`` of the ear ordering, one good extension at a time.

    Each step keeps every uncolored vertex with an available color.  When the
    next vertex shares a special neighbor with its successor, colors outside
    that neighbor's unique colors are tried first.  Before the first cycle
    vertex is colored, if every cycle vertex has degree Delta the cycle is
    rotated so the vertex with the fewest neighbor colors becomes last; when
    additionally ``h == Delta - 3`` the first cycle vertex avoids the colors
    around the last one.

    With ``seed`` given, candidate colors are shuffled instead of ascending.
    A step with no admissible color sets ``stalled`` and stops.
    """
    _check_nice_preconditions(g, h)
    delta = g.max_degree
    P = palette_size or general_bound(delta, h)
    ordering = paper_ordering(g)
    trace = NiceSequenceTrace(ordering, h, P)
    rng = random.Random(seed) if seed is not None else None
    st = GoodColoringState(g, h, P)
    n = g.n
    ell = ordering.cycle_start
    order = list(ordering.order)

    for t in range(n - 3):
        if t == ell:
            cyc = order[ell:]
            if all(g.degree(x) == delta for x in cyc):
                best = min(cyc, key=lambda x: (len(st.neighbor_colors(x)), x != order[-1], x))
                if best != order[-1]:
                    ordering = ordering.with_cycle_end(best)
                    order = list(ordering.order)
                    trace.ordering = ordering
                trace.relabel_applied = True
                trace.events.append(f"relabel: v_n := {best}")
        v = order[t]
        last = order[-1]
        s4 = h == delta - 3 and g.degree(last) == delta and t >= ell
        trace.s4_tracking = trace.s4_tracking or s4
        cands = st.available(v)
        if rng is not None:
            rng.shuffle(cands)
        if not cands:
            trace.stalled = True
            trace.events.append(f"no available color at step {t} (vertex {v})")
            return trace
        if s4 and t == ell:
            around = st.neighbor_colors(last)
            cands = [c for c in cands if c not in around]
        nxt = order[t + 1]
        if g.has_edge(v, nxt):
            specials = st.special_common_neighbors(v, nxt)
            if specials:
                X = set().union(*(st.unique(w) for w in specials))
                cands = [c for c in cands if c not in X] + [c for c in cands if c in X]
        chosen = None
        for c in cands:
            st.assign(v, c)
            if all(st.colors[u] or st.available(u) for u in order[t + 1:]):
                chosen = c
                break
            st.unassign(v)
        if chosen is None:
            trace.stalled = True
            trace.events.append(f"no color keeps all later vertices alive at step {t} (vertex {v})")
            return trace
        trace.steps.append((v, chosen))
    return trace


def check_nice_sequence(g: Graph, trace: NiceSequenceTrace) -> list[str]:
    """Recheck every step from scratch; returns problems (empty when valid).

    Checked per step: the colored set is exactly the ordering prefix, the
    coloring is good, every uncolored vertex keeps an available color, and
    (when ``h == Delta - 3`` and the last vertex has degree Delta) its
    neighbors carry ``Delta - 1`` distinct colors once the cycle is reached.
    """
    from .verify import unique_colors

    problems = []
    h, P = trace.h, trace.palette_size
    delta = g.max_degree
    order = trace.ordering.order
    ell = trace.ordering.cycle_start
    last = order[-1]

    def good(col: PartialColoring) -> bool:
        for v in range(g.n):
            cnt = Counter(col.colors[u] for u in g.adjacency[v] if col.colors[u])
            uq = sum(1 for k in cnt.values() if k == 1)
            if uq < h and any(k >= 2 for k in cnt.values()):
                return False
        return all(not (col[u] and col[u] == col[v]) for u, v in g.edges())

    def has_available(col: PartialColoring, v: int) -> bool:
        return any(good(col.with_color(v, c)) and all(col[w] != c for w in g.adjacency[v])
                   for c in range(1, P + 1))

    for i in range(1, len(trace.steps) + 1):
        col = trace.state(g, i)
        if col.colored_set != frozenset(order[:i]):
            problems.append(f"colored set is not the ordering prefix at step {i}")
        if not good(col):
            problems.append(f"step {i} is not a good coloring")
        for v in range(g.n):
            if not col[v] and not has_available(col, v):
                problems.append(f"vertex {v} has no available color at step {i}")
        if h == delta - 3 and g.degree(last) == delta and i >= ell + 1:
            if len({col[u] for u in g.adjacency[last] if col[u]}) != delta - 1:
                problems.append(f"last vertex sees the wrong number of colors at step {i}")
    return problems


# ---------------------------------------------------------------------------
# completion


def endgame_complete(g: Graph, state: GoodColoringState, order=None, r_max: int = ENDGAME_R_MAX,
                     max_nodes: int = 2_000_000) -> PartialColoring:
    """Finish a good coloring with at most three uncolored vertices.

    Exhaustive search over the uncolored vertices inside the same palette;
    if no completion exists, the last ``r`` colored vertices (``r = 1..r_max``
    in coloring order) are released and searched as well.
    """
    h, P = state.h, state.palette_size
    uncolored = [v for v in range(g.n) if not state.colors[v]]
    if len(uncolored) > 3:
        raise ContractError(f"endgame expects at most 3 uncolored vertices, got {len(uncolored)}")
    if not uncolored:
        col = state.coloring()
        if not verify(g, col, h).hcf_ok:
            raise EngineFailure("total state is not h-CF")
        return col
    if order is None:
        order = [v for v in range(g.n) if state.colors[v]]
    colored_order = [v for v in order if state.colors[v]]
    for r in range(0, r_max + 1):
        released = set(colored_order[len(colored_order) - r:]) if r else set()
        fixed = {v: state.colors[v] for v in range(g.n) if state.colors[v] and v not in released}
        res = exact.search(g, "hcf", P, h, fixed=fixed, max_nodes=max_nodes, max_seconds=None)
        if res.found:
            return res.coloring
        if r >= len(colored_order):
            break
    raise EngineFailure(f"endgame found no completion after releasing {r_max} vertices")


# ---------------------------------------------------------------------------
# engines


@dataclass
class EngineLog:
    """Which engines ran and every fallback taken (for traces and reports)."""

    engines: list[str] = field(default_factory=list)
    events: list[str] = field(default_factory=list)
    traces: list[NiceSequenceTrace] = field(default_factory=list)

    def note(self, engine: str) -> None:
        if engine not in self.engines:
            self.engines.append(engine)

    @property
    def engine(self) -> str:
        return "+".join(self.engines) if self.engines else "none"


def dsatur(g: Graph) -> PartialColoring:
    """DSATUR greedy proper coloring (ties by degree, then id)."""
    n = g.n
    colors = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((x for x in range(n) if not colors[x]),
                key=lambda x: (len(sat[x]), g.degree(x), -x))
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in g.adjacency[v]:
            sat[w].add(c)
    return PartialColoring(tuple(colors), max(colors, default=0) or 1)


def square_color(g: Graph, exact_limit: int = SQUARE_EXACT_LIMIT, log_: EngineLog | None = None) -> PartialColoring:
    """Proper coloring of the square: exact up to ``exact_limit`` vertices."""
    if g.n <= exact_limit:
        res = exact.chromatic(g, exact.ExactQuery("square", max_seconds=30.0))
        if res.status == "exact":
            return res.witness
        if log_ is not None:
            log_.events.append("square: exact budget exceeded, using DSATUR")
    elif log_ is not None:
        log_.events.append(f"square: {g.n} vertices > {exact_limit}, DSATUR upper bound")
    return dsatur(square(g))


def _protected_colors(g: Graph, colors, x: int, h: int) -> set[int]:
    """Colors an uncolored neighbor of ``x`` must avoid so ``x`` still ends
    with ``min(deg x, h)`` unique colors."""
    cnt = Counter(colors[w] for w in g.adjacency[x] if colors[w])
    uniq = sorted(c for c, k in cnt.items() if k == 1)
    need = min(g.degree(x), h)
    if len(uniq) >= need:
        return set(uniq[:need])
    return set(cnt)


def _blocked_colors(g: Graph, colors, y: int, h: int, skip=()) -> set[int]:
    out = {colors[w] for w in g.adjacency[y] if colors[w]}
    for x in g.adjacency[y]:
        if x not in skip:
            out |= _protected_colors(g, colors, x, h)
    return out


def color_h_eq_dm2(g: Graph, h: int, palette_size: int | None = None) -> PartialColoring:
    """h-CF coloring with ``Delta^2 - Delta - 1`` colors when ``h == Delta - 2``.

    Deletes edges ``uv`` (``u`` of maximum degree, ``v`` its highest-degree
    neighbor) until the maximum degree drops, colors the remainder through its
    square, then re-inserts the edges in reverse order.  Each re-insertion
    recolors ``v`` alone when ``deg v == Delta``, and otherwise recolors ``u``,
    ``v`` and a further neighbor ``w`` of ``u``, always avoiding the blocked
    set of the recolored vertex.
    """
    delta = g.max_degree
    if h != delta - 2 or delta < 4:
        raise PreconditionError(f"needs h == Delta-2 and Delta >= 4 (Delta={delta}, h={h})")
    P = palette_size or delta * delta - delta - 1
    removed = []
    cur = g
    while cur.max_degree == delta:
        u = min(x for x in range(cur.n) if cur.degree(x) == delta)
        v = max(cur.adjacency[u], key=lambda x: (cur.degree(x), -x))
        removed.append((u, v))
        cur = cur.remove_edge(u, v)
    base = square_color(cur)
    if base.max_color > P:
        raise EngineFailure(f"base square coloring used {base.max_color} > {P} colors")
    colors = list(base.colors)

    def pick(gk, y, skip=()):
        bad = _blocked_colors(gk, colors, y, h, skip)
        for c in range(1, P + 1):
            if c not in bad:
                return c
        raise EngineFailure(f"no free color at vertex {y} during repair")

    for u, v in reversed(removed):
        gk = cur.add_edges([(u, v)])
        if gk.degree(v) == delta:
            colors[v] = 0
            colors[v] = pick(gk, v, skip={u})
        else:
            w = min(x for x in gk.adjacency[u] if x != v)
            for x in (u, v, w):
                colors[x] = 0
            for x in (u, v, w):
                colors[x] = pick(gk, x)
        cur = gk
    col = PartialColoring(tuple(colors), P)
    if not verify(g, col, h).hcf_ok:
        raise EngineFailure("edge-deletion engine produced an invalid coloring")
    return col


def chordal_bound(cert: ChordalCertificate, delta: int, h: int) -> int:
    m = min(Fraction(cert.s_value - 1), Fraction(delta + h - 1, 2))
    return math.floor(1 + (h + 1) * m)


def chordal_hcf(g: Graph, cert: ChordalCertificate | None, h: int) -> PartialColoring:
    """Greedy along the reversed elimination order.

    A newly added simplicial vertex of current degree at most
    ``m = min(s-1, (Delta+h-1)/2)`` avoids its neighbors' colors and their
    protected unique colors; a larger one only avoids neighbor colors, since
    its clique already hands every neighbor enough unique colors.
    """
    if cert is None:
        cert = chordal_certificate(g)
        if cert is None:
            raise InputError("graph is not chordal")
    delta = g.max_degree
    m = min(Fraction(cert.s_value - 1), Fraction(delta + h - 1, 2))
    P = max(chordal_bound(cert, delta, h), 1)
    colors = [0] * g.n
    for v in reversed(cert.peo):
        later = [w for w in g.adjacency[v] if colors[w]]
        bad = {colors[w] for w in later}
        if len(later) <= m:
            for x in later:
                cnt = Counter(colors[y] for y in g.adjacency[x] if colors[y])
                uniq = sorted(c for c, k in cnt.items() if k == 1)
                bad.update(uniq[:h])
        c = next((c for c in range(1, P + 1) if c not in bad), None)
        if c is None:
            raise EngineFailure(f"chordal greedy ran out of colors at vertex {v}")
        colors[v] = c
    return PartialColoring(tuple(colors), P)


def _merge_bridge(colors, P: int, g: Graph, union: set[int], piece: list[int], a: int, b: int, h: int) -> None:
    """Permute the colors of ``piece`` so the bridge ``ab`` keeps both sides h-CF."""

    def tset(x, side):
        cnt = Counter(colors[y] for y in g.adjacency[x] if y in side)
        uniq = sorted(c for c, k in cnt.items() if k == 1)
        return set(uniq[:h])

    side_b = set(piece)
    s1 = tset(a, union) | {colors[a]}
    s2 = tset(b, side_b) | {colors[b]}
    clash = sorted(s1 & s2)
    if not clash:
        return
    spare = [c for c in range(1, P + 1) if c not in s1 and c not in s2]
    if len(spare) < len(clash):
        raise EngineFailure("palette too small to separate bridge endpoints")
    perm = {}
    for c, d in zip(clash, spare):
        perm[c], perm[d] = d, c
    for x in piece:
        colors[x] = perm.get(colors[x], colors[x])


def _color_piece(pg: Graph, h: int, P: int, seed: int, elog: EngineLog) -> PartialColoring:
    delta = pg.max_degree
    if delta == 0:
        return PartialColoring((1,) * pg.n, 1)
    if delta <= h + 1:
        elog.note("square")
        return square_color(pg, log_=elog)
    if delta == h + 2:
        if delta == 3:
            return _color_delta3(pg, elog)
        elog.note("dm2")
        return color_h_eq_dm2(pg, h)
    elog.note("nice")
    return color_nice(pg, h, P, seed, elog)


def _color_delta3(g: Graph, elog: EngineLog) -> PartialColoring:
    elog.note("exact4")
    res = exact.search(g, "pcf", 4, 1, max_nodes=5_000_000, max_seconds=60.0)
    if res.found:
        return res.coloring
    elog.events.append(f"exact 4-color search status {res.status}; trying 5 colors")
    res = exact.search(g, "pcf", 5, 1, max_nodes=20_000_000, max_seconds=120.0)
    if res.found:
        return res.coloring
    raise EngineFailure(f"Delta=3 exact search failed ({res.status})")


def color_nice(g: Graph, h: int, palette_size: int | None = None, seed: int = 0,
               elog: EngineLog | None = None) -> PartialColoring:
    """Nice sequence plus endgame on a 2-edge-connected graph with Delta >= h+3."""
    elog = elog if elog is not None else EngineLog()
    P = palette_size or general_bound(g.max_degree, h)
    for attempt in range(RESTARTS + 1):
        trace = nice_sequence_color(g, h, P, seed=None if attempt == 0 else seed + attempt)
        elog.traces.append(trace)
        if trace.stalled:
            elog.events.append(f"nice sequence stalled (attempt {attempt}): {trace.events[-1]}")
            continue
        st = GoodColoringState.from_coloring(g, h, trace.state(g), P)
        try:
            return endgame_complete(g, st, [v for v, _ in trace.steps])
        except EngineFailure as exc:
            elog.events.append(f"endgame failed (attempt {attempt}): {exc}")
    elog.events.append("falling back to exact search within the palette")
    res = exact.search(g, "hcf", P, h, max_nodes=50_000_000, max_seconds=300.0)
    if res.found:
        return res.coloring
    raise EngineFailure(f"no h-CF coloring within {P} colors found ({res.status})", trace=elog)


def _color_two_edge_pieces(g: Graph, h: int, P: int, seed: int, elog: EngineLog) -> list[int]:
    bridges = cut_edges(g)
    colors = [0] * g.n
    if bridges:
        elog.note("bridges")
    core = g.remove_edges(bridges) if bridges else g
    pieces = core.components()
    piece_of = {}
    for i, pc in enumerate(pieces):
        for v in pc:
            piece_of[v] = i
        pg, idx = g.induced(pc)
        sub = _color_piece(pg, h, P, seed, elog)
        if sub.max_color > P:
            raise EngineFailure(f"piece coloring used {sub.max_color} > {P} colors")
        for j, v in enumerate(idx):
            colors[v] = sub.colors[j]
    if not bridges:
        return colors
    tree: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(len(pieces))}
    for a, b in bridges:
        tree[piece_of[a]].append((piece_of[b], a, b))
        tree[piece_of[b]].append((piece_of[a], b, a))
    union = set(pieces[0])
    done = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for p in frontier:
            for q, a, b in sorted(tree[p]):
                if q in done:
                    continue
                _merge_bridge(colors, P, g, union, pieces[q], a, b, h)
                union.update(pieces[q])
                done.add(q)
                nxt.append(q)
        frontier = nxt
    return colors


def _color_component(cg: Graph, h: int, seed: int, elog: EngineLog) -> PartialColoring:
    delta = cg.max_degree
    if delta == 0:
        return PartialColoring((1,) * cg.n, 1)
    if delta <= h + 1:
        elog.note("square")
        return square_color(cg, log_=elog)
    cert = chordal_certificate(cg)
    if cert is not None and chordal_bound(cert, delta, h) <= general_bound(delta, h):
        elog.note("chordal")
        return chordal_hcf(cg, cert, h)
    if delta == h + 2:
        if delta == 3:
            return _color_delta3(cg, elog)
        elog.note("dm2")
        return color_h_eq_dm2(cg, h)
    P = general_bound(delta, h)
    return PartialColoring(tuple(_color_two_edge_pieces(cg, h, P, seed, elog)), P)


ENGINES = ("auto", "nice", "dm2", "chordal", "square", "exact")


def color_hcf(g: Graph, h: int, engine: str = "auto", seed: int = 0,
              elog: EngineLog | None = None) -> PartialColoring:
    """Proper h-CF coloring of any graph.

    ``engine="auto"`` dispatches per connected component; the other values
    force one engine on the whole graph.  The result is compacted to colors
    ``1..k`` and verified; :class:`EngineFailure` is raised with the engine
    log if verification fails.
    """
    if h < 1:
        raise InputError("h must be positive")
    if engine not in ENGINES:
        raise InputError(f"unknown engine {engine!r}")
    elog = elog if elog is not None else EngineLog()
    if g.n == 0:
        return PartialColoring((), 1)
    if engine == "auto":
        colors = [0] * g.n
        for comp in g.components():
            cg, idx = g.induced(comp)
            sub = _color_component(cg, h, seed, elog)
            for j, v in enumerate(idx):
                colors[v] = sub.colors[j]
        col = PartialColoring(tuple(colors), max(colors))
    elif engine == "nice":
        elog.note("nice")
        col = color_nice(g, h, seed=seed, elog=elog)
    elif engine == "dm2":
        elog.note("dm2")
        col = color_h_eq_dm2(g, h)
    elif engine == "chordal":
        elog.note("chordal")
        col = chordal_hcf(g, None, h)
    elif engine == "square":
        elog.note("square")
        col = square_color(g, log_=elog)
    else:
        elog.note("exact")
        res = exact.chromatic(g, exact.ExactQuery("hcf", None, h))
        if res.status != "exact":
            raise EngineFailure("exact search exceeded its budget", trace=elog)
        col = res.witness
    col = col.compacted()
    rep = verify(g, col, h)
    if not (rep.complete and rep.hcf_ok):
        raise EngineFailure(f"engine {elog.engine} produced a coloring that is not {h}-CF", trace=elog)
    return col
