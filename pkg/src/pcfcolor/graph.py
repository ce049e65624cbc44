"""Immutable simple graphs on dense integer vertex ids.

Vertices are ``0..n-1``.  Every "removal" returns a fresh :class:`Graph`
together with an index map from new ids back to the ids of the source graph,
so recursive engines can color a subgraph and lift the result.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

Edge = tuple[int, int]


class Graph:
    """A finite simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (u, v)
        Edge list; duplicates and orientation are normalized away.
    labels : sequence of str, optional
        Sidecar names for the vertices (kept for I/O and reports only).
    """

    __slots__ = ("n", "adjacency", "edge_count", "labels", "_nbr_sets", "_hash")

    def __init__(self, n: int, edges: Iterable[Edge] = (), labels: Sequence[str] | None = None):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self._nbr_sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)
        self.edge_count = sum(len(s) for s in sets) // 2
        if labels is not None and len(labels) != n:
            raise InputError("labels must have one entry per vertex")
        self.labels = tuple(labels) if labels is not None else None
        self._hash = None

    # -- basic queries -----------------------------------------------------

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adjacency))
        return self._hash

    def __len__(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._nbr_sets[v]

    def closed_neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v] | {v}

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._nbr_sets[u]

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, in sorted order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"unknown vertex {v}")

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bfs_distances(self, source: int) -> list[int]:
        """Hop distances from ``source``; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    # -- derived graphs ----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced on ``vertices``.

        Returns the subgraph and ``index_map`` where ``index_map[new] = old``.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        new_id = {old: i for i, old in enumerate(keep)}
        edges = [(new_id[u], new_id[v]) for u in keep for v in self.adjacency[u]
                 if u < v and v in new_id]
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Graph(len(keep), edges, labels), keep

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        for v in drop:
            self._check_vertex(v)
        return self.induced(v for v in range(self.n) if v not in drop)

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertex set with the given edges deleted (ids are unchanged)."""
        drop = set()
        for u, v in edges:
            if not self.has_edge(u, v):
                raise InputError(f"edge ({u}, {v}) is not in the graph")
            drop.add((min(u, v), max(u, v)))
        return Graph(self.n, (e for e in self.edges() if e not in drop), self.labels)

    def remove_edge(self, u: int, v: int) -> "Graph":
        return self.remove_edges([(u, v)])

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        return Graph(self.n, list(self.edges()) + list(edges), self.labels)

    def relabeled(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self.n, self.edges(), labels)


@dataclass(frozen=True)
class CyclePath:
    """An ear: an ordered vertex list that is a path or (if ``is_cycle``) a cycle."""

    vertices: tuple[int, ...]
    is_cycle: bool

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> list[Edge]:
        vs = self.vertices
        out = [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:])]
        if self.is_cycle and len(vs) >= 3:
            out.append((min(vs[-1], vs[0]), max(vs[-1], vs[0])))
        return out

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if self.is_cycle and len(vs) < 3:
            return False
        return all(g.has_edge(a, b) for a, b in self.edges)


def square(g: Graph) -> Graph:
    """Add an edge between every pair of vertices at distance exactly 2."""
    edges = set(g.edges())
    for v in range(g.n):
        nb = g.adjacency[v]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                edges.add((a, b))
    return Graph(g.n, edges, g.labels)


def cut_edges(g: Graph) -> list[Edge]:
    """Bridges of ``g`` via an iterative low-link DFS, sorted."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: (vertex, parent, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack[-1]
            nbrs = g.adjacency[v]
            if idx < len(nbrs):
                stack[-1] = (v, parent, idx + 1)
                w = nbrs[idx]
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.append((min(parent, v), max(parent, v)))
    return sorted(bridges)


def _shortest_cycle_through(g: Graph, r: int) -> tuple[int, tuple[int, ...]] | None:
    """Shortest cycle through ``r`` as (length, vertices ending at r)."""
    nbrs = g.adjacency[r]
    best = None
    for i, a in enumerate(nbrs):
        # BFS from a in g - r, parents chosen by smallest id
        parent = {a: None}
        queue = deque([a])
        dist = {a: 0}
        targets = set(nbrs[i + 1:])
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] + 2 >= best[0]:
                break
            for y in g.adjacency[x]:
                if y == r or y in parent:
                    continue
                parent[y] = x
                dist[y] = dist[x] + 1
                queue.append(y)
        for b in nbrs[i + 1:]:
            if b in dist:
                length = dist[b] + 2
                if best is None or length < best[0]:
                    path = [b]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()  # a ... b
                    best = (length, tuple(path) + (r,))
    return best


def girth_cycle(g: Graph) -> CyclePath | None:
    """A shortest cycle containing a minimum-degree vertex among all
    shortest-cycle vertices, rotated so that vertex comes last.

    Returns ``None`` for forests.  Deterministic: the smallest-id qualifying
    vertex is used, with BFS paths preferring smaller ids.
    """
    through = {}
    for r in range(g.n):
        if g.degree(r) >= 2:
            res = _shortest_cycle_through(g, r)
            if res is not None:
                through[r] = res
    if not through:
        return None
    girth = min(length for length, _ in through.values())
    on_short = [r for r, (length, _) in through.items() if length == girth]
    dmin = min(g.degree(r) for r in on_short)
    r = min(v for v in on_short if g.degree(v) == dmin)
    return CyclePath(through[r][1], True)

