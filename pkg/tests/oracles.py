"""Independent brute-force references used to cross-check the library.

Nothing here imports the algorithms under test except the Graph container.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product

import networkx as nx

from pcfcolor.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle (length >= 3), each once, by DFS from its smallest vertex."""
    out = []
    for s in range(g.n):
        stack = [(s, [s])]
        while stack:
            v, path = stack.pop()
            for w in g.adjacency[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > s and w not in path:
                    stack.append((w, path + [w]))
    return out


def bridges(g: Graph) -> set[tuple[int, int]]:
    base = nx.number_connected_components(to_nx(g))
    out = set()
    for u, v in g.edges():
        h = to_nx(g)
        h.remove_edge(u, v)
        if nx.number_connected_components(h) > base:
            out.add((u, v))
    return out


def is_chordal(g: Graph) -> bool:
    """No chordless cycle of length >= 4."""
    for cyc in all_cycles(g):
        if len(cyc) < 4:
            continue
        k = len(cyc)
        chord = any(g.has_edge(cyc[i], cyc[j]) for i in range(k) for j in range(i + 2, k)
                    if not (i == 0 and j == k - 1))
        if not chord:
            return False
    return True


def distances(g: Graph) -> dict:
    return dict(nx.all_pairs_shortest_path_length(to_nx(g)))


def neighbor_counts(g: Graph, colors, v) -> Counter:
    return Counter(colors[u] for u in g.adjacency[v] if colors[u])


def unique_set(g: Graph, colors, v) -> set[int]:
    return {c for c, k in neighbor_counts(g, colors, v).items() if k == 1}


def is_proper(g: Graph, colors) -> bool:
    return all(not colors[u] or colors[u] != colors[v] for u, v in g.edges())


def is_good(g: Graph, colors, h: int) -> bool:
    """Proper partial coloring where each vertex has h unique colors or no repeated color."""
    if not is_proper(g, colors):
        return False
    for v in range(g.n):
        cnt = neighbor_counts(g, colors, v)
        uq = sum(1 for k in cnt.values() if k == 1)
        if uq < h and any(k > 1 for k in cnt.values()):
            return False
    return True


def available_by_enumeration(g: Graph, colors, v: int, h: int, palette: int) -> set[int]:
    out = set()
    for c in range(1, palette + 1):
        if any(colors[w] == c for w in g.adjacency[v]):
            continue
        trial = list(colors)
        trial[v] = c
        if is_good(g, trial, h):
            out.add(c)
    return out


def hcf_ok(g: Graph, colors, h: int) -> bool:
    if not all(colors) or not is_proper(g, colors):
        return False
    return all(len(unique_set(g, colors, v)) >= min(g.degree(v), h) for v in range(g.n))


def odd_ok(g: Graph, colors) -> bool:
    if not all(colors) or not is_proper(g, colors):
        return False
    for v in range(g.n):
        if g.degree(v) and not any(k % 2 for k in neighbor_counts(g, colors, v).values()):
            return False
    return True


def dynamic_ok(g: Graph, colors, h: int) -> bool:
    if not all(colors) or not is_proper(g, colors):
        return False
    return all(len(neighbor_counts(g, colors, v)) >= min(g.degree(v), h) for v in range(g.n))


def brute_min(g: Graph, pred, limit: int) -> int | None:
    """Least k <= limit such that some coloring in 1..k satisfies ``pred``."""
    for k in range(1, limit + 1):
        for colors in product(range(1, k + 1), repeat=g.n):
            if pred(colors):
                return k
    return None


def brute_exists(g: Graph, pred, k: int) -> bool:
    return any(pred(colors) for colors in product(range(1, k + 1), repeat=g.n))


def max_clique_size(g: Graph) -> int:
    return max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)


def independence_number(g: Graph, vertices) -> int:
    vs = list(vertices)
    for r in range(len(vs), 0, -1):
        for sub in combinations(vs, r):
            if all(not g.has_edge(a, b) for a, b in combinations(sub, 2)):
                return r
    return 0
