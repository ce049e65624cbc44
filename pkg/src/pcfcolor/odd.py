"""Odd colorings by peeling cliques and adjacent pairs.

A driver repeatedly removes a clique (or an adjacent pair) from the current
graph, colors the residual, then re-inserts the removed vertices in reverse
order.  Re-insertion only uses colors that keep every previously colored
neighbor's designated odd color intact, and the removed vertices are colored
so that each of them ends up with an odd color too.  The palette is fixed
from the input graph and never grows during the recursion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import exact
from .errors import BudgetExceeded, ContractError, EngineFailure, InputError, StructureError
from .graph import Graph
from .structure import dense_pair, lcc, minimum_clique_cover, greedy_clique_cover, star_free
from .verify import PartialColoring, designated_odd_color, verify

BASE_EXACT_LIMIT = 10


# -- palette formulas -------------------------------------------------------

def _ceil_sqrt_frac(num: int, den: int) -> int:
    """Smallest integer t >= 0 with t*t >= num/den."""
    t = math.isqrt(num // den) if den else 0
    while t * t * den < num:
        t += 1
    return t


def lcc_palette(delta: int, ell: int) -> int:
    """``floor((2l-1)Delta/l) + 2``, i.e. ``2Delta - ceil(Delta/l) + 2``."""
    return max(2 * delta - (-(-delta // ell)) + 2, 1)


def starfree_palette(delta: int, ell: int) -> int:
    """``floor((2l-1)Delta/l) + 1 + ceil(sqrt(2Delta/l + 1))``."""
    return max((2 * ell - 1) * delta // ell + 1 + _ceil_sqrt_frac(2 * delta + ell, ell), 1)


def claw_palette(delta: int) -> int:
    """``floor(1.5 Delta) + ceil(sqrt(Delta))``."""
    return max(3 * delta // 2 + _ceil_sqrt_frac(delta, 1), 1)


def clique_requirement(delta: int, k: int) -> int:
    """Smallest palette for which a clique of size ``k`` can be re-inserted."""
    return 2 * delta - k + 3


def pair_requirement(delta: int, k: int) -> int:
    """Smallest palette for re-inserting an adjacent pair with ``k`` common closed neighbors."""
    y = 2 * k - 3
    t = 2
    while (2 * t - 3) ** 2 < 4 * y:
        t += 1
    return 2 * delta - k + t


# -- peel records -----------------------------------------------------------

@dataclass
class PeelLayer:
    kind: str                    # clique | pair | base-exact | base-path | base-pcf | edgeless
    vertices: tuple[int, ...]
    common: tuple[int, ...] = ()
    delta: int = 0
    required: int = 0
    palette: int = 0
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.palette >= self.required

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "common": list(self.common),
            "delta": self.delta,
            "required": self.required,
            "palette": self.palette,
            "holds": self.holds,
            "note": self.note,
        }


@dataclass
class PeelStack:
    """Removals in peel order plus the residual they leave behind."""

    m: int
    layers: list[PeelLayer] = field(default_factory=list)
    base_vertices: tuple[int, ...] = ()
    violations: list[str] = field(default_factory=list)

    def replay(self, g: Graph) -> tuple[Graph, list[int]]:
        gone = set()
        for layer in self.layers:
            if layer.kind in ("clique", "pair"):
                gone.update(layer.vertices)
        return g.induced(v for v in range(g.n) if v not in gone)

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "layers": [x.as_dict() for x in self.layers],
            "base_vertices": list(self.base_vertices),
            "violations": list(self.violations),
        }


# -- extension steps --------------------------------------------------------

def _odd_colors_of(g: Graph, colors, vertices) -> set[int]:
    col = PartialColoring(tuple(colors), max(max(colors, default=1), 1))
    out = set()
    for w in vertices:
        c = designated_odd_color(g, col, w)
        if c is not None:
            out.add(c)
    return out


def _odd_multiset_colors(g: Graph, colors, u: int) -> frozenset[int]:
    """All colors of odd multiplicity among colored neighbors of ``u``."""
    cnt: dict[int, int] = {}
    for w in g.adjacency[u]:
        c = colors[w]
        if c:
            cnt[c] = cnt.get(c, 0) + 1
    return frozenset(c for c, k in cnt.items() if k % 2)


def _is_odd_total(g: Graph, colors) -> bool:
    rep = verify(g, PartialColoring(tuple(colors), max(max(colors, default=1), 1)), 1)
    return rep.complete and rep.odd_ok


def _check_base(g: Graph, phi: PartialColoring, removed, m: int) -> list[int]:
    if len(phi) != g.n:
        raise InputError(f"coloring has {len(phi)} entries for {g.n} vertices")
    removed = set(removed)
    colors = list(phi.colors)
    for v in range(g.n):
        if v in removed:
            colors[v] = 0
        elif not colors[v]:
            raise InputError(f"vertex {v} outside the removed set is uncolored")
        elif colors[v] > m:
            raise ContractError(f"vertex {v} has color {colors[v]} above palette {m}")
    return colors


def _brute_fill(g: Graph, colors, targets, m: int):
    """Last resort: any assignment of ``targets`` from ``1..m`` giving an odd coloring."""
    fixed = {v: c for v, c in enumerate(colors) if c}
    res = exact.search(g, "odd", m, fixed=fixed, max_nodes=5_000_000, max_seconds=30.0)
    return list(res.coloring.colors) if res.found else None


def _extend_clique(g: Graph, colors, K: list[int], m: int, violations: list[str]):
    k = len(K)
    Kset = set(K)
    lists = {}
    forbid_pattern = {}
    for u in K:
        outside = [w for w in g.adjacency[u] if w not in Kset]
        bad = {colors[w] for w in outside} | _odd_colors_of(g, colors, outside)
        lists[u] = [c for c in range(1, m + 1) if c not in bad]
        if len(lists[u]) < k + 1:
            violations.append(f"clique list at {u} has {len(lists[u])} < {k + 1} colors")
        forbid_pattern[u] = _odd_multiset_colors(g, colors, u)
    order = sorted(K, key=lambda u: (-len(forbid_pattern[u]), u))
    chosen: dict[int, int] = {}

    def ok_leaf() -> bool:
        used = set(chosen.values())
        for u in K:
            if used - {chosen[u]} == forbid_pattern[u]:
                return False
        return True

    def rec(i: int) -> bool:
        if i == k:
            return ok_leaf()
        u = order[i]
        used = set(chosen.values())
        for c in lists[u]:
            if c in used:
                continue
            chosen[u] = c
            if rec(i + 1):
                return True
            del chosen[u]
        return False

    if rec(0):
        out = list(colors)
        for u, c in chosen.items():
            out[u] = c
        return out
    violations.append(f"no list coloring of clique {sorted(K)}; searching the full palette")
    return _brute_fill(g, colors, K, m)


def _extend_pair(g: Graph, colors, v1: int, v2: int, m: int, violations: list[str]):
    K = (g.closed_neighbor_set(v1) & g.closed_neighbor_set(v2))
    lists = {}
    for a, b in ((v1, v2), (v2, v1)):
        nb = [w for w in g.adjacency[a] if w != b]
        protect = [w for w in g.adjacency[a] if w not in K] + [b]
        bad = {colors[w] for w in nb} | _odd_colors_of(g, colors, protect)
        lists[a] = [c for c in range(1, m + 1) if c not in bad]
    bad_pairs = set()
    for u in K - {v1, v2}:
        odd = _odd_multiset_colors(g, colors, u)
        if len(odd) == 2:
            bad_pairs.add(odd)
    for c1 in lists[v1]:
        for c2 in lists[v2]:
            if c1 != c2 and frozenset((c1, c2)) not in bad_pairs:
                out = list(colors)
                out[v1], out[v2] = c1, c2
                return out
    violations.append(f"no list coloring of pair ({v1}, {v2}); searching the full palette")
    return _brute_fill(g, colors, [v1, v2], m)


def extend_over_clique(g: Graph, phi: PartialColoring, K, m: int) -> PartialColoring:
    """Odd ``m``-coloring of ``g`` extending an odd coloring of ``g - K``.

    Requires ``K`` to be a clique and ``m >= 2 Delta(g) - |K| + 3``.  Each
    ``u`` in ``K`` draws from colors unused by, and not the designated odd
    color of, its neighbors outside ``K``; the clique is colored with
    distinct colors so that no ``u`` sees exactly its odd-multiplicity set on
    the rest of ``K``.  Cliques of size two go through :func:`extend_over_pair`.
    """
    K = sorted(set(K))
    if not K:
        return phi
    if not g.is_clique(K):
        raise ContractError("K is not a clique")
    if len(K) == 1:
        raise ContractError("single-vertex removal has no extension guarantee")
    if len(K) == 2:
        return extend_over_pair(g, phi, K[0], K[1], m)
    need = clique_requirement(g.max_degree, len(K))
    if m < need:
        raise ContractError(f"palette {m} < 2*Delta - |K| + 3 = {need}")
    colors = _check_base(g, phi, K, m)
    violations: list[str] = []
    out = _extend_clique(g, colors, K, m, violations)
    if out is None or not _is_odd_total(g, out):
        raise EngineFailure(f"clique extension failed: {violations}")
    return PartialColoring(tuple(out), m)


def extend_over_pair(g: Graph, phi: PartialColoring, v1: int, v2: int, m: int) -> PartialColoring:
    """Odd ``m``-coloring of ``g`` extending an odd coloring of ``g - {v1, v2}``.

    With ``K = N[v1] & N[v2]`` the palette must satisfy
    ``m >= 2 Delta - |K| + ceil(3/2 + sqrt(2|K| - 3))``.  A common neighbor
    ``u`` only loses its odd color when the pair's colors are exactly its two
    odd-multiplicity colors, so at most ``2(|K| - 2)`` pairs are excluded.
    """
    if not g.has_edge(v1, v2):
        raise ContractError(f"{v1} and {v2} are not adjacent")
    k = len(g.closed_neighbor_set(v1) & g.closed_neighbor_set(v2))
    need = pair_requirement(g.max_degree, k)
    if m < need:
        raise ContractError(f"palette {m} below the pair requirement {need}")
    colors = _check_base(g, phi, (v1, v2), m)
    violations: list[str] = []
    out = _extend_pair(g, colors, v1, v2, m, violations)
    if out is None or not _is_odd_total(g, out):
        raise EngineFailure(f"pair extension failed: {violations}")
    return PartialColoring(tuple(out), m)


# -- drivers ----------------------------------------------------------------

def _path_cycle_colors(h: Graph) -> list[int]:
    """Proper conflict-free coloring of a graph of maximum degree <= 2.

    Paths repeat ``1,2,3``; a cycle of length ``3a + 4b`` is split into
    blocks ``123`` and ``1234``; the 5-cycle takes five colors.
    """
    colors = [0] * h.n
    for comp in h.components():
        if len(comp) == 1:
            colors[comp[0]] = 1
            continue
        ends = [v for v in comp if h.degree(v) == 1]
        start = ends[0] if ends else comp[0]
        seq = [start]
        prev, cur = -1, start
        while True:
            nxt = [w for w in h.adjacency[cur] if w != prev and w != start]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
        L = len(seq)
        if ends:
            pattern = [(i % 3) + 1 for i in range(L)] if L > 2 else list(range(1, L + 1))
        elif L == 5:
            pattern = [1, 2, 3, 4, 5]
        else:
            b = 0
            while (L - 4 * b) % 3:
                b += 1
            pattern = [1, 2, 3] * ((L - 4 * b) // 3) + [1, 2, 3, 4] * b
        for v, c in zip(seq, pattern):
            colors[v] = c
    return colors


class _Peeler:
    def __init__(self, g: Graph, m: int):
        self.g = g
        self.stack = PeelStack(m)
        self.m = m

    def induced(self, alive):
        return self.g.induced(sorted(alive))

    def finish(self, base_colors: dict[int, int], alive_before: list[set[int]]) -> PartialColoring:
        """Unwind layers in reverse, certifying oddness after each step."""
        g, m = self.g, self.m
        colors = [0] * g.n
        for v, c in base_colors.items():
            colors[v] = c
        peels = [x for x in self.stack.layers if x.kind in ("clique", "pair")]
        for layer, alive in zip(reversed(peels), reversed(alive_before)):
            h, idx = self.induced(alive)
            pos = {v: i for i, v in enumerate(idx)}
            local = [colors[v] for v in idx]
            viol: list[str] = []
            if layer.kind == "clique" and len(layer.vertices) >= 3:
                out = _extend_clique(h, local, [pos[v] for v in layer.vertices], m, viol)
            else:
                a, b = layer.vertices
                out = _extend_pair(h, local, pos[a], pos[b], m, viol)
            self.stack.violations.extend(viol)
            if out is None or not _is_odd_total(h, out):
                raise EngineFailure(f"unwinding {layer.kind} {layer.vertices} failed",
                                    trace=self.stack)
            for i, v in enumerate(idx):
                colors[v] = out[i]
        col = PartialColoring(tuple(colors), max(m, 1))
        return col

    def record(self, layer: PeelLayer) -> None:
        self.stack.layers.append(layer)
        if not layer.holds:
            self.stack.violations.append(
                f"{layer.kind} {layer.vertices}: palette {layer.palette} < required {layer.required}")


def _base_exact(h: Graph, m: int) -> list[int] | None:
    res = exact.search(h, "odd", m, max_nodes=2_000_000, max_seconds=30.0)
    return list(res.coloring.colors) if res.found else None


def odd_color_lcc(g: Graph, ell: int, trace: PeelStack | None = None) -> PartialColoring:
    """Odd coloring with ``2Delta - ceil(Delta/l) + 2`` colors when ``lcc(g) <= l``.

    Peels the largest class of a minimum clique cover of a maximum-degree
    vertex's neighborhood, together with that vertex, until at most ten
    vertices remain; the remainder is colored exactly.
    """
    if ell < 1:
        raise InputError("ell must be positive")
    res = lcc(g, ell, fallback=True)
    if res.exact and res.exceeds_cap:
        raise InputError(f"lcc exceeds {ell} at vertex {res.witness_vertex}")
    m = lcc_palette(g.max_degree, ell)
    p = _Peeler(g, m)
    if trace is not None:
        p.stack = trace
        trace.m = m
    alive = set(range(g.n))
    alive_before: list[set[int]] = []
    while True:
        h, idx = p.induced(alive)
        dh = h.max_degree
        if dh == 0:
            base = {v: 1 for v in idx}
            p.record(PeelLayer("edgeless", tuple(idx), palette=m, required=1))
            break
        if h.n <= BASE_EXACT_LIMIT:
            cols = _base_exact(h, m)
            if cols is None:
                raise EngineFailure(f"no odd {m}-coloring of the {h.n}-vertex base", trace=p.stack)
            base = {v: cols[i] for i, v in enumerate(idx)}
            p.record(PeelLayer("base-exact", tuple(idx), delta=dh, palette=m,
                               required=exact.lower_bound(h, "odd")))
            break
        x = min(range(h.n), key=lambda v: (-h.degree(v), v))
        nb = list(h.adjacency[x])
        try:
            cover = minimum_clique_cover(h, nb)
        except BudgetExceeded:
            cover = None
        if cover is None:
            cover = greedy_clique_cover(h, nb)
            p.stack.violations.append(f"clique cover at {idx[x]} is greedy, not exact")
        best = max(cover, key=lambda c: (len(c), [-v for v in sorted(c)]))
        local = sorted(list(best) + [x])
        K = [idx[v] for v in local]
        if len(K) < -(-dh // ell) + 1:
            raise StructureError(f"clique of size {len(K)} too small for Delta={dh}, l={ell}")
        if len(K) == 2:
            common = tuple(sorted(h.closed_neighbor_set(local[0]) & h.closed_neighbor_set(local[1])))
            req = pair_requirement(dh, len(common))
            p.record(PeelLayer("pair", tuple(K), tuple(idx[v] for v in common), dh, req, m))
        else:
            p.record(PeelLayer("clique", tuple(K), (), dh, clique_requirement(dh, len(K)), m))
        alive -= set(K)
        alive_before.append(set(alive) | set(K))
    p.stack.base_vertices = tuple(sorted(base))
    col = p.finish(base, alive_before)
    if not _is_odd_total(g, col.colors):
        raise EngineFailure("final coloring is not odd", trace=p.stack)
    return col


def odd_color_starfree(g: Graph, ell: int = 2, claw_mode: bool = False,
                       trace: PeelStack | None = None) -> PartialColoring:
    """Odd coloring of a ``K_{1,l+1}``-free graph.

    Palette ``floor((2l-1)Delta/l) + 1 + ceil(sqrt(2Delta/l + 1))``, or
    ``floor(1.5Delta) + ceil(sqrt(Delta))`` in claw mode (``l = 2``).
    Residuals of maximum degree at most two are paths and cycles; those with
    ``3 <= Delta <= l`` (``Delta == 3`` in claw mode) take a proper
    conflict-free coloring with ``2Delta - 1`` colors.  Otherwise a dense
    adjacent pair is peeled, or in claw mode its companion clique when the
    pair's common neighborhood is as small as allowed.
    """
    from .pcf import color_hcf

    if claw_mode:
        ell = 2
    if ell < 1:
        raise InputError("ell must be positive")
    free, witness = star_free(g, ell)
    if not free:
        raise InputError(f"graph contains an induced K_1,{ell + 1}: {witness}")
    delta = g.max_degree
    m = claw_palette(delta) if claw_mode else starfree_palette(delta, ell)
    route_max = 3 if claw_mode else ell
    p = _Peeler(g, m)
    if trace is not None:
        p.stack = trace
        trace.m = m
    alive = set(range(g.n))
    alive_before: list[set[int]] = []
    while True:
        h, idx = p.induced(alive)
        dh = h.max_degree
        if dh <= 2:
            cols = _path_cycle_colors(h)
            base = {v: cols[i] for i, v in enumerate(idx)}
            p.record(PeelLayer("base-path", tuple(idx), delta=dh, palette=m,
                               required=max(cols, default=0)))
            break
        if dh <= route_max:
            cols = list(color_hcf(h, 1).colors)
            base = {v: cols[i] for i, v in enumerate(idx)}
            p.record(PeelLayer("base-pcf", tuple(idx), delta=dh, palette=m, required=2 * dh - 1,
                               note=f"used {max(cols)} colors"))
            if max(cols) > m:
                p.stack.violations.append(f"base-pcf used {max(cols)} > {m} colors")
            break
        dp = dense_pair(h, ell)
        common = tuple(sorted(idx[v] for v in dp.common))
        k = len(common)
        if claw_mode and k == -(-dh // 2) + 1:
            Q = sorted(idx[v] for v in dp.clique)
            p.record(PeelLayer("clique", tuple(Q), common, dh, clique_requirement(dh, len(Q)), m))
            removed = Q
        else:
            pair = (idx[dp.v1], idx[dp.v2])
            p.record(PeelLayer("pair", pair, common, dh, pair_requirement(dh, k), m))
            removed = list(pair)
        alive -= set(removed)
        alive_before.append(set(alive) | set(removed))
    p.stack.base_vertices = tuple(sorted(base))
    col = p.finish(base, alive_before)
    if not _is_odd_total(g, col.colors):
        raise EngineFailure("final coloring is not odd", trace=p.stack)
    return col
