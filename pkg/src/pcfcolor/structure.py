"""Structural decompositions and class recognition.

* ear decompositions from a prescribed initial cycle, and the vertex ordering
  derived from them (ear interiors in reverse ear order, initial cycle last);
* perfect elimination orderings via maximum cardinality search;
* local clique cover number, star-freeness and the dense adjacent pair used
  by the odd-coloring peel.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import InputError, StructureError, BudgetExceeded
from .graph import CyclePath, Graph, cut_edges, girth_cycle

EXACT_NEIGHBORHOOD_BUDGET = 20


# ---------------------------------------------------------------------------
# ear decomposition


@dataclass(frozen=True)
class EarDecomposition:
    ears: tuple[CyclePath, ...]
    internal_vertices: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.ears)


def _require_two_edge_connected(g: Graph) -> None:
    if not g.is_connected():
        raise StructureError("graph is disconnected")
    bridges = cut_edges(g)
    if bridges:
        raise StructureError(f"graph has bridge {bridges[0]}")


def ear_decompose(g: Graph, initial: CyclePath) -> EarDecomposition:
    """Ear decomposition of a 2-edge-connected graph starting from ``initial``.

    Repeatedly takes the smallest uncovered edge ``ab`` leaving the covered
    vertex set at ``a`` and closes it into an ear by a shortest path from
    ``b`` back to the covered set avoiding ``ab``.  A path returning to ``a``
    yields a cycle ear.
    """
    if not initial.is_cycle or not initial.is_valid_in(g):
        raise InputError("initial ear must be a cycle of the graph")
    _require_two_edge_connected(g)

    covered_v = set(initial.vertices)
    covered_e = set(initial.edges)
    ears = [initial]
    internals = [tuple(initial.vertices)]
    total = g.edge_count
    while len(covered_e) < total:
        edge = None
        for a in sorted(covered_v):
            for b in g.adjacency[a]:
                if (min(a, b), max(a, b)) not in covered_e:
                    edge = (a, b)
                    break
            if edge:
                break
        a, b = edge
        if b in covered_v:
            ear = CyclePath((a, b), False)
            inner = ()
        else:
            parent = {b: None}
            queue = deque([b])
            end = None
            while queue and end is None:
                x = queue.popleft()
                for y in g.adjacency[x]:
                    if x == b and y == a:
                        continue
                    if y in parent:
                        continue
                    parent[y] = x
                    if y in covered_v:
                        end = y
                        break
                    queue.append(y)
            if end is None:
                raise StructureError(f"edge ({a}, {b}) lies on no cycle")
            path = [end]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()  # b ... end
            inner = tuple(path[:-1])
            if end == a:
                ear = CyclePath((a,) + inner, True)
            else:
                ear = CyclePath((a,) + tuple(path), False)
        ears.append(ear)
        internals.append(inner)
        covered_v.update(inner)
        covered_e.update(ear.edges)
    return EarDecomposition(tuple(ears), tuple(internals))


def check_ear_decomposition(g: Graph, dec: EarDecomposition) -> list[str]:
    """Independent checker; returns a list of problems (empty when valid)."""
    problems = []
    if not dec.ears or not dec.ears[0].is_cycle:
        return ["first ear is not a cycle"]
    seen_e: set = set()
    seen_v: set = set()
    for i, ear in enumerate(dec.ears):
        if not ear.is_valid_in(g):
            problems.append(f"ear {i} is not a path/cycle of the graph")
            continue
        es = ear.edges
        if len(set(es)) != len(es) or seen_e & set(es):
            problems.append(f"ear {i} reuses an edge")
        vs = ear.vertices
        if i > 0:
            meet = set(vs) & seen_v
            if ear.is_cycle:
                expect = {vs[0]}
            else:
                expect = {vs[0], vs[-1]}
            if meet != expect:
                problems.append(f"ear {i} meets earlier ears in {sorted(meet)}, expected {sorted(expect)}")
            inner = tuple(v for v in vs if v not in seen_v)
            if tuple(dec.internal_vertices[i]) != inner:
                problems.append(f"ear {i} internal vertices mismatch")
        seen_e.update(es)
        seen_v.update(vs)
    if seen_e != set(g.edges()):
        problems.append("ears do not cover every edge")
    if seen_v != set(range(g.n)) and g.n:
        problems.append("ears do not cover every vertex")
    return problems


# ---------------------------------------------------------------------------
# vertex ordering


@dataclass(frozen=True)
class VertexOrdering:
    """Permutation ``order`` with the initial cycle occupying ``order[cycle_start:]``.

    ``cycle_start`` is 0-based; the last vertex has minimum degree among all
    vertices lying on shortest cycles.
    """

    order: tuple[int, ...]
    cycle_start: int

    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def with_cycle_end(self, v: int) -> "VertexOrdering":
        """Rotate the cycle segment so that ``v`` becomes the last vertex."""
        cyc = list(self.order[self.cycle_start:])
        k = cyc.index(v)
        rotated = cyc[k + 1:] + cyc[:k + 1]
        return VertexOrdering(self.order[:self.cycle_start] + tuple(rotated), self.cycle_start)


def check_ordering(g: Graph, ordering: VertexOrdering) -> list[str]:
    """Check the three ordering properties; returns problems (empty when valid).

    (i) every vertex but the last has a later neighbor;
    (ii) every vertex except the first and last has at least two neighbors
         among its predecessor and the later vertices;
    (iii) the tail from ``cycle_start`` is a shortest cycle (length >= 3)
          whose last vertex has minimum degree over all shortest-cycle vertices.
    """
    order = ordering.order
    n = g.n
    problems = []
    if sorted(order) != list(range(n)):
        return ["order is not a permutation of the vertices"]
    pos = ordering.position()
    for i, v in enumerate(order[:-1]):
        if not any(pos[w] > i for w in g.adjacency[v]):
            problems.append(f"(i) fails at position {i}")
    for i in range(1, n - 1):
        v = order[i]
        cnt = sum(1 for w in g.adjacency[v] if pos[w] >= i - 1 and w != v)
        if cnt < 2:
            problems.append(f"(ii) fails at position {i}")
    ell = ordering.cycle_start
    cyc = order[ell:]
    if not (0 <= ell <= n - 3):
        problems.append("(iii) cycle segment shorter than 3")
        return problems
    if not CyclePath(tuple(cyc), True).is_valid_in(g):
        problems.append("(iii) tail is not a cycle")
    gc = girth_cycle(g)
    if gc is None or len(cyc) != len(gc):
        problems.append("(iii) tail is not a shortest cycle")
    else:
        short_vertices = _shortest_cycle_vertices(g, len(gc))
        dmin = min(g.degree(v) for v in short_vertices)
        if g.degree(order[-1]) != dmin:
            problems.append("(iii) last vertex is not of minimum degree on shortest cycles")
    return problems


def _shortest_cycle_vertices(g: Graph, girth: int) -> set[int]:
    from .graph import _shortest_cycle_through

    out = set()
    for r in range(g.n):
        res = _shortest_cycle_through(g, r) if g.degree(r) >= 2 else None
        if res is not None and res[0] == girth:
            out.add(r)
    return out


def paper_ordering(g: Graph) -> VertexOrdering:
    """Ordering built from an ear decomposition whose initial ear is a
    shortest cycle through a minimum-degree shortest-cycle vertex.

    Ear interiors are concatenated in reverse ear order (last ear first),
    each in its natural order along the ear, followed by the initial cycle
    rotated so its minimum-degree vertex comes last.
    """
    _require_two_edge_connected(g)
    cycle = girth_cycle(g)
    if cycle is None:
        raise StructureError("graph is acyclic")
    dec = ear_decompose(g, cycle)
    seq: list[int] = []
    for inner in reversed(dec.internal_vertices[1:]):
        seq.extend(inner)
    cyc = list(cycle.vertices)
    dmin = min(g.degree(v) for v in cyc)
    k = max(i for i, v in enumerate(cyc) if g.degree(v) == dmin)
    cyc = cyc[k + 1:] + cyc[:k + 1]
    ell = len(seq)
    seq.extend(cyc)
    return VertexOrdering(tuple(seq), ell)


# ---------------------------------------------------------------------------
# chordal graphs


@dataclass(frozen=True)
class ChordalCertificate:
    """Perfect elimination ordering: later neighbors of ``peo[i]`` form a clique."""

    peo: tuple[int, ...]
    simplicial_clique_sizes: tuple[int, ...]
    s_value: int

    def later_neighbors(self, g: Graph, i: int) -> list[int]:
        pos = {v: k for k, v in enumerate(self.peo)}
        return [w for w in g.adjacency[self.peo[i]] if pos[w] > i]


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties by smallest id)."""
    weight = [0] * g.n
    visited = [False] * g.n
    out = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        out.append(best)
        for w in g.adjacency[best]:
            if not visited[w]:
                weight[w] += 1
    return out


def is_peo(g: Graph, peo) -> bool:
    """Parent check: for each v, its later neighbors other than the earliest
    one (the parent) must all be adjacent to the parent."""
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [w for w in g.adjacency[v] if pos[w] > i]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        nbp = g.neighbor_set(p)
        if any(w != p and w not in nbp for w in later):
            return False
    return True


def chordal_certificate(g: Graph) -> ChordalCertificate | None:
    peo = list(reversed(mcs_order(g)))
    if not is_peo(g, peo):
        return None
    pos = {v: i for i, v in enumerate(peo)}
    sizes = tuple(1 + sum(1 for w in g.adjacency[v] if pos[w] > i) for i, v in enumerate(peo))
    return ChordalCertificate(tuple(peo), sizes, max(sizes, default=0))


# ---------------------------------------------------------------------------
# small exact subproblems on neighborhoods


def _bitmask_adjacency(g: Graph, vertices):
    idx = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for w in g.adjacency[v]:
            if w in idx:
                m |= 1 << idx[w]
        masks.append(m)
    return masks


def maximum_independent_set(g: Graph, vertices) -> list[int]:
    """Exact maximum independent set of ``g[vertices]`` (branch and bound)."""
    vs = sorted(vertices)
    if len(vs) > EXACT_NEIGHBORHOOD_BUDGET + 20:
        raise BudgetExceeded(f"independent set search on {len(vs)} vertices")
    adj = _bitmask_adjacency(g, vs)
    best = [0]

    def rec(cand: int, chosen: int):
        if cand == 0:
            if bin(chosen).count("1") > bin(best[0]).count("1"):
                best[0] = chosen
            return
        if bin(chosen).count("1") + bin(cand).count("1") <= bin(best[0]).count("1"):
            return
        i = (cand & -cand).bit_length() - 1
        rec(cand & ~(1 << i) & ~adj[i], chosen | (1 << i))
        rec(cand & ~(1 << i), chosen)

    rec((1 << len(vs)) - 1, 0)
    return [vs[i] for i in range(len(vs)) if best[0] >> i & 1]


def minimum_clique_cover(g: Graph, vertices, cap: int | None = None) -> list[list[int]] | None:
    """Exact minimum partition of ``g[vertices]`` into cliques.

    Solved as a coloring of the complement by backtracking.  With ``cap``
    set, returns ``None`` as soon as more than ``cap`` cliques are provably
    needed.
    """
    vs = sorted(vertices)
    k = len(vs)
    if k == 0:
        return []
    if k > EXACT_NEIGHBORHOOD_BUDGET:
        raise BudgetExceeded(f"clique cover search on {k} vertices exceeds budget")
    adj = _bitmask_adjacency(g, vs)
    # order: high degree in complement first
    order = sorted(range(k), key=lambda i: -(k - 1 - bin(adj[i]).count("1")))
    limit = k if cap is None else min(cap, k)
    for q in range(1, limit + 1):
        classes: list[int] = []
        assign = [0] * k

        def rec(t: int) -> bool:
            if t == k:
                return True
            i = order[t]
            for ci in range(len(classes)):
                if classes[ci] & ~adj[i] == 0:  # i adjacent to every member
                    classes[ci] |= 1 << i
                    assign[i] = ci
                    if rec(t + 1):
                        return True
                    classes[ci] &= ~(1 << i)
            if len(classes) < q:
                classes.append(1 << i)
                assign[i] = len(classes) - 1
                if rec(t + 1):
                    return True
                classes.pop()
            return False

        if rec(0):
            return [[vs[i] for i in range(k) if m >> i & 1] for m in classes]
    return None


def greedy_clique_cover(g: Graph, vertices) -> list[list[int]]:
    classes: list[list[int]] = []
    for v in sorted(vertices, key=lambda x: -g.degree(x)):
        for cl in classes:
            if all(g.has_edge(v, w) for w in cl):
                cl.append(v)
                break
        else:
            classes.append([v])
    return classes


@dataclass(frozen=True)
class LccResult:
    value: int | None
    exceeds_cap: bool
    exact: bool = True
    witness_vertex: int | None = None


def lcc(g: Graph, cap: int | None = None, budget: int = EXACT_NEIGHBORHOOD_BUDGET,
        fallback: bool = False) -> LccResult:
    """Local clique cover number: max over v of the clique cover number of N(v).

    Neighborhoods above ``budget`` raise :class:`BudgetExceeded` unless
    ``fallback`` is set, in which case a greedy cover gives an upper bound and
    ``exact`` is cleared.
    """
    best = 0
    arg = None
    exact = True
    for v in range(g.n):
        nb = g.adjacency[v]
        if not nb:
            continue
        if len(nb) > budget:
            if not fallback:
                raise BudgetExceeded(f"neighborhood of {v} has {len(nb)} > {budget} vertices")
            q = len(greedy_clique_cover(g, nb))
            exact = False
        else:
            cover = minimum_clique_cover(g, nb, cap=None if cap is None else cap)
            if cover is None:
                return LccResult(None, True, exact, v)
            q = len(cover)
        if q > best:
            best, arg = q, v
        if cap is not None and best > cap:
            return LccResult(None, True, exact, arg)
    return LccResult(best, False, exact, arg)


@dataclass(frozen=True)
class StarWitness:
    center: int
    leaves: tuple[int, ...]


def star_free(g: Graph, ell: int) -> tuple[bool, StarWitness | None]:
    """Whether ``g`` has no induced ``K_{1, ell+1}``; else a star witness."""
    if ell < 1:
        raise InputError("ell must be at least 1")
    for v in range(g.n):
        nb = g.adjacency[v]
        if len(nb) <= ell:
            continue
        indep = maximum_independent_set(g, nb)
        if len(indep) >= ell + 1:
            return False, StarWitness(v, tuple(sorted(indep[: ell + 1])))
    return True, None


@dataclass(frozen=True)
class DensePair:
    v1: int
    v2: int
    common: frozenset[int]          # N[v1] ∩ N[v2]
    clique: tuple[int, ...] | None  # (N(v1) \ N[v2]) ∪ {v1}, claw-free case only

    @property
    def size(self) -> int:
        return len(self.common)


def dense_pair(g: Graph, ell: int) -> DensePair:
    """Adjacent pair whose closed neighborhoods share at least
    ``ceil(Delta/ell) + 1`` vertices in a ``K_{1,ell+1}``-free graph.

    ``v1`` is the smallest-id maximum-degree vertex; ``v2`` is the member of a
    maximum independent set of ``N(v1)`` with the most neighbors in ``N(v1)``.
    For ``ell == 2`` the clique ``(N(v1) \\ N[v2]) ∪ {v1}`` is also returned.
    """
    delta = g.max_degree
    if delta == 0:
        raise StructureError("graph has no edges")
    v1 = min(v for v in range(g.n) if g.degree(v) == delta)
    nb1 = g.neighbor_set(v1)
    indep = maximum_independent_set(g, nb1)
    if len(indep) > ell:
        raise StructureError(
            f"vertex {v1} has {len(indep)} independent neighbors; graph is not K_1,{ell + 1}-free")
    v2 = max(indep, key=lambda x: (len(g.neighbor_set(x) & nb1), -x))
    common = g.closed_neighbor_set(v1) & g.closed_neighbor_set(v2)
    need = math.ceil(delta / ell) + 1
    if len(common) < need:
        raise StructureError(f"dense pair bound fails: |K|={len(common)} < {need}")
    clique = None
    if ell == 2:
        clique = tuple(sorted((nb1 - g.closed_neighbor_set(v2)) | {v1}))
        if not g.is_clique(clique):
            raise StructureError("claw-free clique certificate failed")
    return DensePair(v1, v2, frozenset(common), clique)
