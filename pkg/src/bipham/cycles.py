"""Exact cycle and bypass search.

All searches are deterministic: anchors and neighbors are tried in sorted
vertex order, and a cycle is only ever discovered anchored at its smallest
vertex, so repeated runs return identical results.

Backtracking searches charge one unit per node expansion against an
explicit budget and raise :class:`ResourceLimitError` when it runs out —
that outcome is "unknown", never "absent".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import BipartiteDigraph, VertexId
from .errors import ContractViolationError, ResourceLimitError

DEFAULT_NODE_BUDGET = 10**8


@dataclass
class SearchBudget:
    """Mutable node-expansion allowance shared across related searches."""

    limit: int = DEFAULT_NODE_BUDGET
    spent: int = 0

    def charge(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise ResourceLimitError(
                f"cycle search exceeded its node budget of {self.limit}"
            )


@dataclass(frozen=True)
class Cycle:
    """A directed cycle, stored rotated so it starts at its smallest vertex.

    The arc sequence is vertices[0] -> vertices[1] -> ... -> vertices[0].
    Sides must alternate (always true for cycles of a bipartite host), so the
    length is even and at least 2.
    """

    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 2 or len(vs) % 2:
            raise ContractViolationError(f"cycle length must be even and >= 2, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise ContractViolationError("cycle repeats a vertex")
        for i, v in enumerate(vs):
            if v.side == vs[i - 1].side:
                raise ContractViolationError("cycle sides must alternate")
        if min(vs) != vs[0]:
            raise ContractViolationError("cycle must start at its smallest vertex")

    @classmethod
    def from_vertices(cls, vs) -> "Cycle":
        """Normalize an arbitrary rotation to the canonical one."""
        vs = tuple(vs)
        if not vs:
            raise ContractViolationError("empty cycle")
        pivot = vs.index(min(vs))
        return cls(vs[pivot:] + vs[:pivot])

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[VertexId, VertexId]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def gap(self, x: VertexId, y: VertexId) -> int:
        """Arc count from x to y following the cycle's orientation."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        if x not in pos or y not in pos:
            raise ContractViolationError("gap endpoints must lie on the cycle")
        return (pos[y] - pos[x]) % len(self.vertices)


@dataclass(frozen=True)
class Bypass:
    """A path leaving a cycle at ``path[0]`` and re-entering at ``path[-1]``.

    Interior vertices are off the cycle and there is at least one of them.
    ``gap`` is the arc count from entry to exit along the cycle.
    """

    path: tuple[VertexId, ...]
    host_cycle: Cycle
    gap: int


def validate_cycle(g: BipartiteDigraph, c: Cycle) -> None:
    """Raise unless every arc of ``c`` (including the closing one) is in ``g``."""
    for u, v in c.arcs():
        if u.index >= g.a or v.index >= g.a or not g.has_arc(u, v):
            raise ContractViolationError(f"cycle arc {u} -> {v} is not in the graph")


def cycle_of_length(
    g: BipartiteDigraph, length: int, *, budget: Optional[SearchBudget] = None
) -> Optional[Cycle]:
    """Some cycle of exactly ``length`` arcs, or None if none exists.

    Backtracking over anchors in sorted order; only vertices greater than the
    anchor may appear later in the path, so each cycle is seen exactly once,
    already normalized.
    """
    if length % 2 or not 2 <= length <= g.order:
        raise ContractViolationError(f"cycle length must be even in [2, {g.order}], got {length}")
    bd = budget if budget is not None else SearchBudget()
    # A cycle through `anchor` needs length-1 vertices greater than it.
    anchors = g.vertices[: g.order - length + 1]
    for anchor in anchors:
        path = [anchor]
        in_path = {anchor}
        if _extend_to_length(g, anchor, path, in_path, length, bd):
            return Cycle(tuple(path))
    return None


def _extend_to_length(g, anchor, path, in_path, length, bd) -> bool:
    bd.charge()
    tail = path[-1]
    if len(path) == length:
        return g.has_arc(tail, anchor)
    for w in g.out_neighbors(tail):
        if w > anchor and w not in in_path:
            path.append(w)
            in_path.add(w)
            if _extend_to_length(g, anchor, path, in_path, length, bd):
                return True
            in_path.discard(w)
            path.pop()
    return False


def hamiltonian_cycle(
    g: BipartiteDigraph, *, budget: Optional[SearchBudget] = None
) -> Optional[Cycle]:
    """A cycle through all 2a vertices, or None."""
    return cycle_of_length(g, g.order, budget=budget)


def even_spectrum(g: BipartiteDigraph, *, budget: Optional[SearchBudget] = None) -> set[int]:
    """The set of cycle lengths present in ``g`` (all cycle lengths are even)."""
    bd = budget if budget is not None else SearchBudget()
    return {
        length
        for length in range(2, g.order + 1, 2)
        if cycle_of_length(g, length, budget=bd) is not None
    }


def longest_cycle(
    g: BipartiteDigraph, *, budget: Optional[SearchBudget] = None
) -> Optional[Cycle]:
    """A maximum-length cycle, or None exactly when the graph is acyclic."""
    bd = budget if budget is not None else SearchBudget()
    for length in range(g.order, 1, -2):
        found = cycle_of_length(g, length, budget=bd)
        if found is not None:
            return found
    return None


def non_hamiltonian_long_cycle(
    g: BipartiteDigraph, *, budget: Optional[SearchBudget] = None
) -> Optional[Cycle]:
    """A cycle of even length in [4, 2a - 2], or None."""
    bd = budget if budget is not None else SearchBudget()
    for length in range(4, g.order - 1, 2):
        found = cycle_of_length(g, length, budget=bd)
        if found is not None:
            return found
    return None


def iter_cycles(g: BipartiteDigraph, max_length: Optional[int] = None) -> Iterator[Cycle]:
    """Yield every cycle of length <= ``max_length`` exactly once, normalized.

    Deterministic order: by anchor, then depth-first with sorted neighbors.
    """
    limit = g.order if max_length is None else max_length
    for anchor in g.vertices:
        path = [anchor]
        in_path = {anchor}
        yield from _emit_cycles(g, anchor, path, in_path, limit)


def _emit_cycles(g, anchor, path, in_path, limit) -> Iterator[Cycle]:
    tail = path[-1]
    if len(path) >= 2 and g.has_arc(tail, anchor):
        yield Cycle(tuple(path))
    if len(path) >= limit:  # >=, so a max_length below 2 yields nothing
        return
    for w in g.out_neighbors(tail):
        if w > anchor and w not in in_path:
            path.append(w)
            in_path.add(w)
            yield from _emit_cycles(g, anchor, path, in_path, limit)
            in_path.discard(w)
            path.pop()


def find_bypass(g: BipartiteDigraph, c: Cycle) -> Optional[Bypass]:
    """A minimum-gap bypass of ``c``, or None.

    For each cycle vertex x (in cycle order) the off-cycle vertices reachable
    from x are explored breadth-first, so the interior of the returned path
    is as short as possible for the chosen endpoints; among all bypasses the
    smallest gap wins, earliest discovery breaking ties.
    """
    return _bypass_search(g, c, existence_only=False)


def has_bypass(g: BipartiteDigraph, c: Cycle) -> bool:
    """Cheaper existence-only variant of :func:`find_bypass`."""
    return _bypass_search(g, c, existence_only=True) is not None


def _bypass_search(g, c, *, existence_only: bool) -> Optional[Bypass]:
    validate_cycle(g, c)
    on_cycle = {v: i for i, v in enumerate(c.vertices)}
    best: Optional[tuple[int, tuple[VertexId, ...]]] = None
    for x in c.vertices:
        # Breadth-first over off-cycle vertices only.
        parents: dict[VertexId, Optional[VertexId]] = {}
        queue: list[VertexId] = []
        for w in g.out_neighbors(x):
            if w not in on_cycle and w not in parents:
                parents[w] = None
                queue.append(w)
        head = 0
        while head < len(queue):
            r = queue[head]
            head += 1
            for w in g.out_neighbors(r):
                if w not in on_cycle and w not in parents:
                    parents[w] = r
                    queue.append(w)
        if not parents:
            continue
        if existence_only:
            for r in queue:  # BFS order, so the interior path is shortest
                for y in g.out_neighbors(r):
                    if y in on_cycle and y != x:
                        return Bypass(
                            (x, *_interior_path(parents, r), y), c, c.gap(x, y)
                        )
            continue
        # Smallest gap from this x, preferring smaller (y, r) on ties.
        candidate: Optional[tuple[int, VertexId, VertexId]] = None
        for r in sorted(parents):
            for y in g.out_neighbors(r):
                if y in on_cycle and y != x:
                    gap = c.gap(x, y)
                    key = (gap, y, r)
                    if candidate is None or key < candidate:
                        candidate = key
        if candidate is None:
            continue
        gap, y, r = candidate
        if best is None or gap < best[0]:
            best = (gap, (x, *_interior_path(parents, r), y))
            if gap == 1:
                break  # no bypass can beat a gap of 1
    if best is None:
        return None
    return Bypass(best[1], c, best[0])


def _interior_path(parents: dict, last: VertexId) -> list[VertexId]:
    chain = [last]
    while parents[chain[-1]] is not None:
        chain.append(parents[chain[-1]])
    chain.reverse()
    return chain
