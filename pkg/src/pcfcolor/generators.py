"""Graph families: classic small graphs, seeded random classes and the
orthogonal-Latin-square family ``G_n``.

Random generators take an explicit ``seed`` and use their own
``random.Random`` instance, so outputs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import Graph, square


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "both sides must be non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with center 0."""
    return complete_bipartite(1, k)


def wheel(k: int) -> Graph:
    """Hub 0 joined to the cycle ``1..k``."""
    _need(k >= 3, "wheel needs a rim of at least 3 vertices")
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return Graph(k + 1, rim + [(0, 1 + i) for i in range(k)])


def empty(n: int) -> Graph:
    return Graph(n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def theta(a: int, b: int, c: int) -> Graph:
    """Two poles joined by internally disjoint paths with ``a``, ``b``, ``c`` inner vertices."""
    _need(sum(1 for x in (a, b, c) if x == 0) <= 1, "at most one direct edge between the poles")
    edges, n = [], 2
    for k in (a, b, c):
        prev = 0
        for _ in range(k):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return Graph(n, edges)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` (in sorted order); adjacent when sharing an endpoint."""
    es = g.edges()
    at: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(es):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    edges = set()
    for ids in at.values():
        edges.update(combinations(ids, 2))
    labels = [f"{u}-{v}" for u, v in es]
    return Graph(len(es), edges, labels)


linegraph = line_graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    _need(n >= 0 and 0.0 <= p <= 1.0, "need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_maxdeg(n: int, delta: int, p: float, seed: int) -> Graph:
    """``G(n, p)`` with edges visited in random order and skipped once an
    endpoint reaches degree ``delta``."""
    _need(n >= 1 and delta >= 0 and 0.0 <= p <= 1.0, "bad random_maxdeg parameters")
    rng = random.Random(seed)
    pairs = [e for e in combinations(range(n), 2) if rng.random() < p]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < delta and deg[v] < delta:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def random_regular(d: int, n: int, seed: int) -> Graph:
    import networkx as nx

    _need(n * d % 2 == 0 and 0 <= d < n, "need n*d even and d < n")
    h = nx.random_regular_graph(d, n, seed=seed)
    return Graph(n, h.edges())


def random_two_edge_connected(n: int, chords: int, seed: int) -> Graph:
    """A Hamiltonian cycle on a random permutation plus ``chords`` random chords."""
    _need(n >= 3, "need n >= 3")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[(i + 1) % n]))) for i in range(n)}
    rest = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(rest)
    edges.update(rest[:chords])
    return Graph(n, edges)


def ktree(k: int, n: int, seed: int) -> Graph:
    """Random ``k``-tree: ``K_{k+1}`` grown by vertices attached to random ``k``-cliques."""
    _need(k >= 1 and n >= k + 1, "ktree needs k >= 1 and n >= k + 1")
    rng = random.Random(seed)
    edges = list(combinations(range(k + 1), 2))
    cliques = [c for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = rng.choice(cliques)
        edges.extend((u, v) for u in base)
        for x in base:
            cliques.append(tuple(sorted(set(base) - {x} | {v})))
    return Graph(n, edges)


def random_chordal(n: int, seed: int, max_attach: int = 4) -> Graph:
    """Connected chordal graph: each new vertex is joined to a random
    non-empty subset of an earlier closed neighborhood clique."""
    _need(n >= 1 and max_attach >= 1, "bad random_chordal parameters")
    rng = random.Random(seed)
    cliques = [(0,)]
    edges = []
    for v in range(1, n):
        c = rng.choice(cliques)
        s = rng.sample(c, rng.randint(1, min(len(c), max_attach)))
        edges.extend((u, v) for u in s)
        cliques.append(tuple(sorted(s)) + (v,))
    return Graph(n, edges)


def atlas_graphs(max_n: int = 7, connected: bool = True) -> list[Graph]:
    """Every graph on ``1..max_n`` vertices up to isomorphism (``max_n <= 7``)."""
    import networkx as nx

    _need(1 <= max_n <= 7, "the graph atlas covers up to 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if k == 0 or k > max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(Graph(k, h.edges()))
    return out


# -- orthogonal Latin squares ------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class LatinFamily:
    """``n - 1`` squares ``L_k(i, j) = (k*i + j) mod n`` for ``k = 1..n-1`` (0-based symbols)."""

    order: int
    squares: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def build(cls, n: int) -> "LatinFamily":
        _need(is_prime(n), f"order {n} is not prime")
        sq = tuple(
            tuple(tuple((k * i + j) % n for j in range(n)) for i in range(n))
            for k in range(1, n)
        )
        fam = cls(n, sq)
        problems = fam.check()
        if problems:
            raise AssertionError("; ".join(problems))
        return fam

    def symbol(self, k: int, i: int, j: int) -> int:
        """Entry of square ``k`` (1-based) at 0-based cell ``(i, j)``."""
        return self.squares[k - 1][i][j]

    def check(self) -> list[str]:
        n = self.order
        out = []
        cells = [(i, j) for i in range(n) for j in range(n)]
        for k, L in enumerate(self.squares, 1):
            for i in range(n):
                if sorted(L[i]) != list(range(n)):
                    out.append(f"square {k} row {i} is not a permutation")
                if sorted(L[r][i] for r in range(n)) != list(range(n)):
                    out.append(f"square {k} column {i} is not a permutation")
        for a, b in combinations(range(len(self.squares)), 2):
            pairs = {(self.squares[a][i][j], self.squares[b][i][j]) for i, j in cells}
            if len(pairs) != n * n:
                out.append(f"squares {a + 1} and {b + 1} are not orthogonal")
        return out


def latin_ids(n: int):
    """Vertex-id helpers for ``G_n``: cell, symbol, row and column vertices."""
    base_s = n * n
    base_r = base_s + (n - 1) * n
    base_c = base_r + n
    return {
        "v": lambda i, j: i * n + j,
        "s": lambda k, t: base_s + (k - 1) * n + t,
        "r": lambda i: base_r + i,
        "c": lambda j: base_c + j,
        "count": base_c + n,
    }


def gen_latin_gn(n: int) -> Graph:
    """The graph ``G_n`` for prime ``n``.

    Cell vertex ``v_{i,j}`` is joined to its row vertex ``r_i``, column vertex
    ``c_j`` and, for every square ``k``, to the symbol vertex ``s_{k, L_k(i,j)}``.
    Cell vertices have degree ``n + 1``; all other vertices degree ``n``.
    Labels are 1-based (``v1,2``, ``s3,1``, ``r2``, ``c5``).
    """
    fam = LatinFamily.build(n)
    ids = latin_ids(n)
    edges = []
    for i in range(n):
        for j in range(n):
            v = ids["v"](i, j)
            edges.append((v, ids["r"](i)))
            edges.append((v, ids["c"](j)))
            for k in range(1, n):
                edges.append((v, ids["s"](k, fam.symbol(k, i, j))))
    labels = [""] * ids["count"]
    for i in range(n):
        for j in range(n):
            labels[ids["v"](i, j)] = f"v{i + 1},{j + 1}"
        labels[ids["r"](i)] = f"r{i + 1}"
        labels[ids["c"](i)] = f"c{i + 1}"
    for k in range(1, n):
        for t in range(n):
            labels[ids["s"](k, t)] = f"s{k},{t + 1}"
    return Graph(ids["count"], edges, labels)


def latin_roles(g: Graph) -> dict[str, list[int]]:
    roles: dict[str, list[int]] = {"v": [], "s": [], "r": [], "c": []}
    for v in range(g.n):
        roles[g.label(v)[0]].append(v)
    return roles


def latin_square_clique(n: int) -> list[int]:
    """The ``n^2`` cell vertices, pairwise within distance two in ``G_n``."""
    ids = latin_ids(n)
    return [ids["v"](i, j) for i in range(n) for j in range(n)]


def check_latin_certificate(g: Graph, n: int) -> list[str]:
    """Degree formulas and the cell clique in the square; returns problems."""
    out = []
    ids = latin_ids(n)
    if g.n != ids["count"]:
        out.append(f"expected {ids['count']} vertices, got {g.n}")
        return out
    cells = set(latin_square_clique(n))
    for v in range(g.n):
        want = n + 1 if v in cells else n
        if g.degree(v) != want:
            out.append(f"vertex {g.label(v)} has degree {g.degree(v)}, expected {want}")
    if not square(g).is_clique(cells):
        out.append("cell vertices do not form a clique in the square")
    return out


# -- spec strings -------------------------------------------------------------

FAMILIES = {
    "cycle": (cycle, ["n"]),
    "path": (path, ["n"]),
    "complete": (complete, ["n"]),
    "bipartite": (complete_bipartite, ["a", "b"]),
    "star": (star, ["k"]),
    "wheel": (wheel, ["k"]),
    "empty": (empty, ["n"]),
    "petersen": (petersen, []),
    "theta": (theta, ["a", "b", "c"]),
    "random": (random_graph, ["n", "p", "seed"]),
    "random_maxdeg": (random_maxdeg, ["n", "delta", "p", "seed"]),
    "random_regular": (random_regular, ["d", "n", "seed"]),
    "two_edge_connected": (random_two_edge_connected, ["n", "chords", "seed"]),
    "ktree": (ktree, ["k", "n", "seed"]),
    "chordal": (random_chordal, ["n", "seed", "max_attach"]),
    "latin": (gen_latin_gn, ["n"]),
}


def _num(text: str):
    try:
        return int(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise InputError(f"not a number: {text!r}") from None


def gen_family(spec: str) -> Graph:
    """Build a graph from ``kind:arg,arg`` or ``kind:key=val,...``.

    ``line:<spec>`` wraps any other spec in a line graph, e.g.
    ``line:random:10,0.4,7``.
    """
    kind, _, rest = spec.partition(":")
    if kind == "line":
        return line_graph(gen_family(rest))
    if kind not in FAMILIES:
        raise InputError(f"unknown family {kind!r}; choose from {sorted(FAMILIES) + ['line']}")
    fn, names = FAMILIES[kind]
    args, kwargs = [], {}
    for tok in filter(None, rest.split(",")):
        if "=" in tok:
            key, val = tok.split("=", 1)
            if key not in names:
                raise InputError(f"{kind} has no parameter {key!r}")
            kwargs[key] = _num(val)
        else:
            args.append(_num(tok))
    try:
        return fn(*args, **kwargs)
    except TypeError as exc:
        raise InputError(f"bad parameters for {kind}: {exc}") from None
