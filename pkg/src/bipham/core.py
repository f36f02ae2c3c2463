"""Model and text format for balanced bipartite digraphs.

A graph has two sides ``x`` and ``y`` of equal size ``a`` (so 2a vertices in
total) and arcs that only cross sides.  Opposite arcs (u -> v and v -> u) are
allowed and are how an undirected edge is represented; loops and parallel
arcs cannot exist by construction.

The text format is::

    bbd 1
    a 4
    x0 y0
    y0 x0
    ...

``#`` starts a comment line and blank lines are ignored.  Canonical
serialization orders arcs by (source side, source index, target index) and
emits no comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Literal, NamedTuple

from .errors import ContractViolationError, GraphParseError

FORMAT_MAGIC = "bbd 1"

Direction = Literal["out", "in"]

_VERTEX_RE = re.compile(r"^([xy])(0|[1-9][0-9]*)$")


@dataclass(frozen=True, order=True)
class VertexId:
    """One vertex: side ``"x"`` or ``"y"`` plus a 0-based index.

    Ordering is (side, index), so every x-vertex sorts before every
    y-vertex; that order is used everywhere determinism matters.
    """

    side: str
    index: int

    def __post_init__(self):
        if self.side not in ("x", "y"):
            raise ContractViolationError(f"vertex side must be 'x' or 'y', got {self.side!r}")
        if self.index < 0:
            raise ContractViolationError(f"vertex index must be >= 0, got {self.index}")

    @classmethod
    def parse(cls, token: str) -> "VertexId":
        m = _VERTEX_RE.match(token)
        if m is None:
            raise ValueError(f"invalid vertex token {token!r}")
        return vertex(m.group(1), int(m.group(2)))

    @property
    def opposite_side(self) -> str:
        return "y" if self.side == "x" else "x"

    def __str__(self) -> str:
        return f"{self.side}{self.index}"

    # Compact repr keeps assertion diffs involving arc sets readable.
    __repr__ = __str__


@lru_cache(maxsize=None)
def vertex(side: str, index: int) -> VertexId:
    """Interned VertexId constructor; the cache makes bulk graph building cheap."""
    return VertexId(side, index)


Arc = tuple[VertexId, VertexId]


class DegreeTriple(NamedTuple):
    out_degree: int
    in_degree: int
    total: int


@lru_cache(maxsize=None)
def arc_positions(a: int) -> tuple[Arc, ...]:
    """All 2*a*a possible arcs, in canonical (source side, source, target) order.

    Position ``i`` in this tuple is the meaning of bit ``i`` in the integer
    encoding used by :func:`graph_from_bits` and exhaustive enumeration.
    """
    if a < 1:
        raise ContractViolationError(f"half-order must be >= 1, got {a}")
    out: list[Arc] = []
    for src_side, dst_side in (("x", "y"), ("y", "x")):
        for i in range(a):
            for j in range(a):
                out.append((vertex(src_side, i), vertex(dst_side, j)))
    return tuple(out)


@dataclass(frozen=True)
class BipartiteDigraph:
    """Immutable balanced bipartite digraph of order ``2 * a``."""

    a: int
    arcs: frozenset[Arc]

    def __post_init__(self):
        if self.a < 1:
            raise ContractViolationError(f"half-order must be >= 1, got {self.a}")
        if not isinstance(self.arcs, frozenset):
            object.__setattr__(self, "arcs", frozenset(self.arcs))
        for u, v in self.arcs:
            _validate_arc(self.a, u, v)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_arcs(cls, a: int, arcs: Iterable[Arc]) -> "BipartiteDigraph":
        return cls(a, frozenset(arcs))

    @classmethod
    def from_arc_strings(cls, a: int, specs: Iterable[str]) -> "BipartiteDigraph":
        """Build from strings like ``"x0 y3"``; handy in tests and generators."""
        arcs = []
        for spec in specs:
            parts = spec.split()
            if len(parts) != 2:
                raise ContractViolationError(f"arc spec must be two tokens, got {spec!r}")
            arcs.append((VertexId.parse(parts[0]), VertexId.parse(parts[1])))
        return cls(a, frozenset(arcs))

    # -- derived views -----------------------------------------------------

    @property
    def order(self) -> int:
        return 2 * self.a

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(vertex("x", i) for i in range(self.a)) + tuple(
            vertex("y", i) for i in range(self.a)
        )

    @cached_property
    def x_vertices(self) -> tuple[VertexId, ...]:
        return self.vertices[: self.a]

    @cached_property
    def y_vertices(self) -> tuple[VertexId, ...]:
        return self.vertices[self.a :]

    @cached_property
    def out_map(self) -> dict[VertexId, tuple[VertexId, ...]]:
        return self._adjacency(0)

    @cached_property
    def in_map(self) -> dict[VertexId, tuple[VertexId, ...]]:
        return self._adjacency(1)

    def _adjacency(self, key_end: int) -> dict[VertexId, tuple[VertexId, ...]]:
        acc: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices}
        for arc in self.arcs:
            acc[arc[key_end]].append(arc[1 - key_end])
        return {v: tuple(sorted(ws)) for v, ws in acc.items()}

    def out_neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        self._require_member(v)
        return self.out_map[v]

    def in_neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        self._require_member(v)
        return self.in_map[v]

    def has_arc(self, u: VertexId, v: VertexId) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def _require_member(self, v: VertexId) -> None:
        if v.index >= self.a:
            raise ContractViolationError(f"vertex {v} out of range for a={self.a}")


def _validate_arc(a: int, u: VertexId, v: VertexId) -> None:
    if u.side == v.side:
        raise ContractViolationError(f"arc {u} -> {v} joins two {u.side}-side vertices")
    if u.index >= a or v.index >= a:
        raise ContractViolationError(f"arc {u} -> {v} out of range for a={a}")


def graph_from_bits(a: int, bits: int) -> BipartiteDigraph:
    """Decode an integer arc-set encoding (bit i <=> ``arc_positions(a)[i]``)."""
    positions = arc_positions(a)
    if bits < 0 or bits >= 1 << len(positions):
        raise ContractViolationError(f"bits out of range for a={a}")
    arcs = frozenset(positions[i] for i in range(len(positions)) if bits >> i & 1)
    return BipartiteDigraph(a, arcs)


def degree(g: BipartiteDigraph, v: VertexId) -> DegreeTriple:
    """Out-, in- and total degree of ``v``."""
    out_d = len(g.out_neighbors(v))
    in_d = len(g.in_neighbors(v))
    return DegreeTriple(out_d, in_d, out_d + in_d)


def neighbor_set(
    g: BipartiteDigraph, vertices_: Iterable[VertexId], direction: Direction
) -> frozenset[VertexId]:
    """Union of out- (or in-) neighborhoods over a same-side vertex set."""
    if direction not in ("out", "in"):
        raise ContractViolationError(f"direction must be 'out' or 'in', got {direction!r}")
    vs = list(vertices_)
    if len({v.side for v in vs}) > 1:
        raise ContractViolationError("neighbor_set requires all vertices on one side")
    adj = g.out_map if direction == "out" else g.in_map
    result: set[VertexId] = set()
    for v in vs:
        g._require_member(v)
        result.update(adj[v])
    return frozenset(result)


# -- text format -------------------------------------------------------------


def parse_graph(text: str) -> BipartiteDigraph:
    """Parse the ``bbd 1`` text format; errors name the offending line."""
    significant: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        significant.append((lineno, line))

    if not significant:
        raise GraphParseError(1, f"missing header {FORMAT_MAGIC!r}")
    lineno, header = significant[0]
    if header != FORMAT_MAGIC:
        raise GraphParseError(lineno, f"expected header {FORMAT_MAGIC!r}, got {header!r}")

    if len(significant) < 2:
        raise GraphParseError(lineno, "missing 'a <count>' line")
    lineno, a_line = significant[1]
    parts = a_line.split()
    if len(parts) != 2 or parts[0] != "a" or not parts[1].isdigit():
        raise GraphParseError(lineno, f"expected 'a <count>', got {a_line!r}")
    a = int(parts[1])
    if a < 1:
        raise GraphParseError(lineno, f"half-order must be >= 1, got {a}")

    arcs: set[Arc] = set()
    for lineno, line in significant[2:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(lineno, f"expected '<vertex> <vertex>', got {line!r}")
        try:
            u, v = VertexId.parse(tokens[0]), VertexId.parse(tokens[1])
        except ValueError as exc:
            raise GraphParseError(lineno, str(exc)) from None
        if u.side == v.side:
            raise GraphParseError(lineno, f"arc {u} -> {v} joins two {u.side}-side vertices")
        if u.index >= a or v.index >= a:
            raise GraphParseError(lineno, f"arc {u} -> {v} out of range for a={a}")
        if (u, v) in arcs:
            raise GraphParseError(lineno, f"duplicate arc {u} -> {v}")
        arcs.add((u, v))
    return BipartiteDigraph(a, frozenset(arcs))


def serialize_graph(g: BipartiteDigraph) -> str:
    """Canonical text form: header, half-order, then arcs in sorted order."""
    lines = [FORMAT_MAGIC, f"a {g.a}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"
