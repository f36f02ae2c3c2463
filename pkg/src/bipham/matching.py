"""Directional perfect matchings, Hall violators, and cycle factors.

A matching in direction ``x_to_y`` uses only arcs whose source is on the x
side (and vice versa).  Exactly one of :func:`perfect_matching` and
:func:`hall_violator` returns something for a given graph and direction:
either all ``a`` sources are matched, or the vertex set reachable by
alternating paths from the unmatched sources is a set S with fewer than
``|S|`` out-neighbors.

A cycle factor is the union of one perfect matching per direction: every
vertex then has exactly one successor, and the orbits of that permutation
are vertex-disjoint cycles covering the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .core import Arc, BipartiteDigraph, VertexId
from .cycles import Cycle
from .errors import ContractViolationError

MatchDirection = Literal["x_to_y", "y_to_x"]

DIRECTIONS: tuple[str, str] = ("x_to_y", "y_to_x")


@dataclass(frozen=True)
class Matching:
    """Arc set in which no vertex repeats as a source or as a target."""

    direction: str
    arcs: frozenset[Arc]


@dataclass(frozen=True)
class CycleFactor:
    """Vertex-disjoint cycles covering all 2a vertices."""

    cycles: tuple[Cycle, ...]


def _sources(g: BipartiteDigraph, direction: str) -> tuple[VertexId, ...]:
    if direction not in DIRECTIONS:
        raise ContractViolationError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    return g.x_vertices if direction == "x_to_y" else g.y_vertices


def _augment(g, source, matched_source_of, visited) -> bool:
    # Classic augmenting-path step; neighbor order is sorted, so the
    # resulting maximum matching is deterministic.
    for target in g.out_map[source]:
        if target in visited:
            continue
        visited.add(target)
        if target not in matched_source_of or _augment(
            g, matched_source_of[target], matched_source_of, visited
        ):
            matched_source_of[target] = source
            return True
    return False


def _maximum_matching(g: BipartiteDigraph, direction: str) -> dict[VertexId, VertexId]:
    """target -> source map of a maximum matching, built source by source."""
    matched_source_of: dict[VertexId, VertexId] = {}
    for source in _sources(g, direction):
        _augment(g, source, matched_source_of, set())
    return matched_source_of


def perfect_matching(g: BipartiteDigraph, direction: str) -> Optional[Matching]:
    """A perfect matching in the given direction, or None."""
    matched = _maximum_matching(g, direction)
    if len(matched) < g.a:
        return None
    return Matching(direction, frozenset((src, tgt) for tgt, src in matched.items()))


def hall_violator(g: BipartiteDigraph, direction: str) -> Optional[frozenset[VertexId]]:
    """A source set S with fewer than |S| out-neighbors, or None.

    S is the set of sources reachable from the unmatched sources by
    alternating paths; its out-neighborhood is exactly the matched targets
    reached, which is |S| minus the number of unmatched sources.
    """
    matched = _maximum_matching(g, direction)
    if len(matched) >= g.a:
        return None
    matched_sources = set(matched.values())
    frontier = [s for s in _sources(g, direction) if s not in matched_sources]
    reachable_sources = set(frontier)
    seen_targets: set[VertexId] = set()
    while frontier:
        source = frontier.pop()
        for target in g.out_map[source]:
            if target in seen_targets:
                continue
            seen_targets.add(target)
            partner = matched.get(target)
            if partner is not None and partner not in reachable_sources:
                reachable_sources.add(partner)
                frontier.append(partner)
    assert len(seen_targets) < len(reachable_sources)
    return frozenset(reachable_sources)


def cycle_factor(g: BipartiteDigraph) -> Optional[CycleFactor]:
    """Cycle factor from one perfect matching per direction, or None.

    Absence means at least one direction has no perfect matching, which
    :func:`hall_violator` certifies for that direction.
    """
    forward = perfect_matching(g, "x_to_y")
    backward = perfect_matching(g, "y_to_x")
    if forward is None or backward is None:
        return None
    successor = {src: tgt for src, tgt in forward.arcs}
    successor.update({src: tgt for src, tgt in backward.arcs})
    cycles: list[Cycle] = []
    visited: set[VertexId] = set()
    for start in g.x_vertices:  # ascending, so each cycle starts at its smallest vertex
        if start in visited:
            continue
        orbit = [start]
        visited.add(start)
        current = successor[start]
        while current != start:
            orbit.append(current)
            visited.add(current)
            current = successor[current]
        cycles.append(Cycle(tuple(orbit)))
    return CycleFactor(tuple(cycles))
