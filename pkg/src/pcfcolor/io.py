"""Readers and writers for DIMACS ``.col``, plain edge lists and coloring files.

DIMACS::

    c comment
    p edge <n> <m>
    e <u> <v>        (1-based)

Edge list::

    <n> <m>
    <u> <v>          (0-based)

Both writers emit edges in canonical sorted order so that
``write(read(text)) == text`` for canonical input.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .graph import Graph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, tok in _content_lines(text):
        if tok[0] == "p":
            if len(tok) < 4:
                raise InputError(f"line {lineno}: malformed problem line")
            n, declared_m = int(tok[2]), int(tok[3])
        elif tok[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(tok) < 3:
                raise InputError(f"line {lineno}: malformed edge line")
            u, v = int(tok[1]) - 1, int(tok[2]) - 1
            edges.append((u, v))
        else:
            raise InputError(f"line {lineno}: unexpected record {tok[0]!r}")
    if n is None:
        raise InputError("missing 'p edge n m' header")
    g = Graph(n, edges)
    if declared_m is not None and g.edge_count != declared_m:
        raise InputError(f"header declares {declared_m} edges, found {g.edge_count}")
    return g


def parse_edgelist(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty edge list")
    (lineno, header), body = lines[0], lines[1:]
    if len(header) != 2:
        raise InputError(f"line {lineno}: expected header 'n m'")
    n, declared_m = int(header[0]), int(header[1])
    edges = []
    for lineno, tok in body:
        if len(tok) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        edges.append((int(tok[0]), int(tok[1])))
    g = Graph(n, edges)
    if g.edge_count != declared_m:
        raise InputError(f"header declares {declared_m} edges, found {g.edge_count}")
    return g


def format_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.edge_count}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def format_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def detect_format(text: str) -> str:
    for _, tok in _content_lines(text):
        return "dimacs" if tok[0] == "p" else "edgelist"
    raise InputError("empty graph file")


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


def format_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "dimacs":
        return format_dimacs(g)
    if fmt == "edgelist":
        return format_edgelist(g)
    raise InputError(f"unknown graph format {fmt!r}")


def read_graph(path, fmt: str | None = None) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text, fmt)


def write_graph(g: Graph, path, fmt: str = "edgelist") -> None:
    Path(path).write_text(format_graph(g, fmt))


# -- colorings ------------------------------------------------------------

def parse_coloring(text: str, n: int | None = None):
    """Parse a coloring file: JSON ``{"palette_size": k, "colors": [...]}``
    or a whitespace-separated list of colors (0 = uncolored).
    """
    from .verify import PartialColoring

    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad coloring JSON: {exc}") from exc
        colors = [int(c) for c in obj["colors"]]
        k = obj.get("palette_size")
    else:
        try:
            colors = [int(tok) for tok in text.split()]
        except ValueError as exc:
            raise InputError(f"bad coloring list: {exc}") from exc
        k = None
    if n is not None and len(colors) != n:
        raise InputError(f"coloring has {len(colors)} entries for {n} vertices")
    if k is None:
        k = max(colors, default=0) or 1
    return PartialColoring(tuple(colors), int(k))


def format_coloring(coloring) -> str:
    return json.dumps({"palette_size": coloring.palette_size, "colors": list(coloring.colors)})


def read_coloring(path, n: int | None = None):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_coloring(text, n)
