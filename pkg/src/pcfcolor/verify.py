"""Coloring values and the verifier for proper, odd, h-CF and h-dynamic colorings.

Colors are positive integers ``1..palette_size``; ``0`` means uncolored.
A vertex ``v`` must see ``h_v = min(deg(v), h)`` colors exactly once on its
neighborhood to be h-CF, and ``h_v`` distinct colors to be h-dynamic.  Isolated
vertices satisfy every neighborhood condition vacuously.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class PartialColoring:
    """Vertex colors indexed by vertex id; ``0`` marks an uncolored vertex."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        if self.palette_size < 1:
            raise InputError("palette_size must be positive")
        for v, c in enumerate(self.colors):
            if c < 0 or c > self.palette_size:
                raise InputError(f"color {c} of vertex {v} is outside 1..{self.palette_size}")

    @classmethod
    def empty(cls, n: int, palette_size: int) -> "PartialColoring":
        return cls((0,) * n, palette_size)

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, int], palette_size: int | None = None):
        colors = [0] * n
        for v, c in mapping.items():
            colors[v] = c
        k = palette_size if palette_size is not None else max(colors, default=0) or 1
        return cls(tuple(colors), k)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @property
    def colored_set(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.colors) if c)

    @property
    def is_total(self) -> bool:
        return all(self.colors)

    @property
    def assignment(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.colors) if c}

    @property
    def num_colors(self) -> int:
        """Number of distinct colors in use."""
        return len({c for c in self.colors if c})

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    def with_color(self, v: int, c: int) -> "PartialColoring":
        colors = list(self.colors)
        colors[v] = c
        return PartialColoring(tuple(colors), max(self.palette_size, c))

    def compacted(self) -> "PartialColoring":
        """Relabel used colors to ``1..k`` preserving their relative order."""
        used = sorted({c for c in self.colors if c})
        remap = {c: i + 1 for i, c in enumerate(used)}
        return PartialColoring(tuple(remap.get(c, 0) for c in self.colors), max(len(used), 1))


Coloring = PartialColoring


def _neighbor_counts(g: Graph, colors, v: int) -> Counter:
    return Counter(colors[u] for u in g.adjacency[v] if colors[u])


def unique_colors(g: Graph, coloring: PartialColoring, v: int) -> set[int]:
    """Colors appearing exactly once among the colored neighbors of ``v``."""
    if not (0 <= v < g.n):
        raise InputError(f"unknown vertex {v}")
    counts = _neighbor_counts(g, coloring.colors, v)
    return {c for c, k in counts.items() if k == 1}


def designated_odd_color(g: Graph, coloring: PartialColoring, v: int) -> int | None:
    """Smallest color with odd multiplicity on the colored neighborhood of ``v``."""
    counts = _neighbor_counts(g, coloring.colors, v)
    odd = [c for c, k in counts.items() if k % 2 == 1]
    return min(odd) if odd else None


def odd_colors(g: Graph, coloring: PartialColoring, vertices: Iterable[int]) -> set[int]:
    """Set of designated odd colors over ``vertices`` (``None`` entries dropped)."""
    out = set()
    for w in vertices:
        c = designated_odd_color(g, coloring, w)
        if c is not None:
            out.add(c)
    return out


@dataclass(frozen=True)
class ColoringReport:
    """Verdicts of :func:`verify` for one coloring and one ``h``.

    ``hcf_ok``, ``odd_ok`` and ``dynamic_ok`` include properness, as each
    notion is defined as a proper coloring with an extra neighborhood
    condition.  For partial colorings (``complete`` false) every condition is
    evaluated on colored neighbors only and the verdicts are advisory.
    """

    h: int
    complete: bool
    proper: bool
    violating_edge: tuple[int, int] | None
    unique_counts: tuple[int, ...]
    distinct_counts: tuple[int, ...]
    odd_color: tuple[int | None, ...]
    hcf_violation: int | None
    odd_violation: int | None
    dynamic_violation: int | None
    colors_used: int
    degrees: tuple[int, ...]

    @property
    def hcf_ok(self) -> bool:
        return self.proper and self.hcf_violation is None

    @property
    def odd_ok(self) -> bool:
        return self.proper and self.odd_violation is None

    @property
    def pcf_ok(self) -> bool:
        """1-CF, i.e. proper conflict-free (independent of ``h``)."""
        return self.proper and all(
            u >= 1 or d == 0 for u, d in zip(self.unique_counts, self.degrees)
        )

    @property
    def dynamic_ok(self) -> bool:
        return self.proper and self.dynamic_violation is None

    def as_dict(self) -> dict:
        return {
            "h": self.h,
            "complete": self.complete,
            "proper": self.proper,
            "violating_edge": self.violating_edge,
            "odd": self.odd_ok,
            "odd_violation": self.odd_violation,
            "pcf": self.pcf_ok,
            "hcf": self.hcf_ok,
            "hcf_violation": self.hcf_violation,
            "dynamic": self.dynamic_ok,
            "dynamic_violation": self.dynamic_violation,
            "colors_used": self.colors_used,
            "unique_counts": list(self.unique_counts),
        }


def verify(g: Graph, coloring: PartialColoring, h: int = 1) -> ColoringReport:
    """Check every coloring notion at once.

    Raises :class:`InputError` if the coloring length does not match ``g`` or
    ``h`` is not positive.  Out-of-palette colors are rejected when the
    :class:`PartialColoring` is built.
    """
    if len(coloring) != g.n:
        raise InputError(f"coloring has {len(coloring)} entries for {g.n} vertices")
    if h < 1:
        raise InputError("h must be positive")
    colors = coloring.colors
    violating_edge = None
    for u, v in g.edges():
        if colors[u] and colors[u] == colors[v]:
            violating_edge = (u, v)
            break
    uniques, distincts, odds = [], [], []
    hcf_bad = odd_bad = dyn_bad = None
    for v in range(g.n):
        counts = _neighbor_counts(g, colors, v)
        uq = sum(1 for k in counts.values() if k == 1)
        odd = [c for c, k in counts.items() if k % 2 == 1]
        uniques.append(uq)
        distincts.append(len(counts))
        odds.append(min(odd) if odd else None)
        deg = len(g.adjacency[v])
        hv = min(deg, h)
        if hcf_bad is None and uq < hv:
            hcf_bad = v
        if dyn_bad is None and len(counts) < hv:
            dyn_bad = v
        if odd_bad is None and deg > 0 and not odd:
            odd_bad = v
    return ColoringReport(
        h=h,
        complete=coloring.is_total,
        proper=violating_edge is None,
        violating_edge=violating_edge,
        unique_counts=tuple(uniques),
        distinct_counts=tuple(distincts),
        odd_color=tuple(odds),
        hcf_violation=hcf_bad,
        odd_violation=odd_bad,
        dynamic_violation=dyn_bad,
        colors_used=coloring.num_colors,
        degrees=tuple(g.degrees()),
    )


def is_hcf(g: Graph, coloring: PartialColoring, h: int) -> bool:
    rep = verify(g, coloring, h)
    return rep.complete and rep.hcf_ok


def is_odd(g: Graph, coloring: PartialColoring) -> bool:
    rep = verify(g, coloring, 1)
    return rep.complete and rep.odd_ok
