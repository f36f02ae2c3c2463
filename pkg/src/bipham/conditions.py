"""Dominating-pair degree conditions and connectivity certificates.

A *dominating pair* is a pair of distinct vertices with at least one common
out-neighbor.  In a bipartite digraph both members necessarily sit on the
same side (their out-neighborhoods live on opposite sides otherwise); the
code asserts this rather than assuming it.

The degree conditions all quantify over dominating pairs:

* ``check_condition_Bk``: max of the two total degrees >= 2a - 2 + k,
* ``check_degree_sum``: sum of the two total degrees >= a given bound,
* ``check_wang``: one member has total degree >= 2a - 1 and the other
  >= a + 1.

Each returns a report carrying the lexicographically smallest violating
pair, so failures are reproducible verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import BipartiteDigraph, VertexId, degree
from .errors import ContractViolationError

CERT_STRONG = "strong"
CERT_NOT_STRONG = "not_strong"
CERT_TWO_CONNECTED = "two_connected"
CERT_CUT_VERTEX = "cut_vertex"


@dataclass(frozen=True)
class DominatingPair:
    """Normalized pair (u < v, same side) plus its smallest common out-neighbor."""

    u: VertexId
    v: VertexId
    witness: VertexId

    def __post_init__(self):
        if self.u.side != self.v.side or not self.u < self.v:
            raise ContractViolationError(f"pair ({self.u}, {self.v}) is not normalized")


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one degree condition over all dominating pairs.

    ``threshold`` is the bound the condition compares against (for the
    two-tier Wang condition it is the high-degree bound 2a - 1).  On failure
    ``violating_pair`` is the lexicographically smallest offending pair and
    ``violating_values`` holds its two total degrees in pair order.
    """

    holds: bool
    threshold: int
    violating_pair: Optional[DominatingPair] = None
    violating_values: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class ConnectivityCertificate:
    """Checkable evidence for a connectivity verdict.

    * ``strong`` / ``two_connected``: no detail needed.
    * ``not_strong``: ``partition`` is (S, V - S) with no arcs from S out.
    * ``cut_vertex``: removing ``cut_vertex`` disconnects the underlying
      undirected graph.
    """

    kind: str
    partition: Optional[tuple[frozenset[VertexId], frozenset[VertexId]]] = None
    cut_vertex: Optional[VertexId] = None


def dominating_pairs(g: BipartiteDigraph) -> list[DominatingPair]:
    """All dominating pairs, sorted lexicographically.

    Iterating potential witnesses in sorted order means the first witness
    recorded for a pair is its smallest one.
    """
    found: dict[tuple[VertexId, VertexId], VertexId] = {}
    for w in g.vertices:
        for u, v in combinations(g.in_map[w], 2):  # in_map tuples are sorted
            assert u.side == v.side, "common out-neighbor across sides is impossible"
            found.setdefault((u, v), w)
    return [DominatingPair(u, v, w) for (u, v), w in sorted(found.items())]


def _total_degrees(g: BipartiteDigraph) -> dict[VertexId, int]:
    return {v: len(g.out_map[v]) + len(g.in_map[v]) for v in g.vertices}


def _scan_pairs(g: BipartiteDigraph, threshold: int, satisfied) -> ConditionReport:
    deg = _total_degrees(g)
    for pair in dominating_pairs(g):
        du, dv = deg[pair.u], deg[pair.v]
        if not satisfied(du, dv):
            return ConditionReport(False, threshold, pair, (du, dv))
    return ConditionReport(True, threshold)


def check_condition_Bk(g: BipartiteDigraph, k: int) -> ConditionReport:
    """Every dominating pair has a member of total degree >= 2a - 2 + k."""
    threshold = 2 * g.a - 2 + k
    return _scan_pairs(g, threshold, lambda du, dv: max(du, dv) >= threshold)


def max_Bk(g: BipartiteDigraph) -> int | float:
    """Largest k for which ``check_condition_Bk(g, k)`` holds.

    ``math.inf`` when there are no dominating pairs (every k holds vacuously).
    """
    deg = _total_degrees(g)
    pairs = dominating_pairs(g)
    if not pairs:
        return math.inf
    worst = min(max(deg[p.u], deg[p.v]) for p in pairs)
    return worst - (2 * g.a - 2)


def check_degree_sum(g: BipartiteDigraph, bound: int) -> ConditionReport:
    """Every dominating pair has total-degree sum >= ``bound``."""
    return _scan_pairs(g, bound, lambda du, dv: du + dv >= bound)


def check_wang(g: BipartiteDigraph) -> ConditionReport:
    """Every dominating pair has degrees >= 2a - 1 and >= a + 1 in some order."""
    high, low = 2 * g.a - 1, g.a + 1
    return _scan_pairs(
        g, high, lambda du, dv: (du >= high and dv >= low) or (dv >= high and du >= low)
    )


# -- connectivity -------------------------------------------------------------


def _reachable(adj: dict[VertexId, tuple[VertexId, ...]], start: VertexId) -> set[VertexId]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strong(g: BipartiteDigraph) -> ConnectivityCertificate:
    """Strong connectivity; failure is certified by an out-closed vertex set.

    The partition (S, V - S) has no arcs from S to the rest: S is the
    forward-reachable set of the smallest vertex whose closure is not the
    whole graph.
    """
    everything = set(g.vertices)
    root = g.vertices[0]
    forward = _reachable(g.out_map, root)
    if forward == everything:
        backward = _reachable(g.in_map, root)
        if backward == everything:
            return ConnectivityCertificate(CERT_STRONG)
        # root reaches everyone, so the smallest vertex with a proper
        # closure is the smallest one that cannot reach root.
        culprit = min(everything - backward)
    else:
        culprit = root
    closure = _reachable(g.out_map, culprit)
    return ConnectivityCertificate(
        CERT_NOT_STRONG, partition=(frozenset(closure), frozenset(everything - closure))
    )


def _undirected_adjacency(g: BipartiteDigraph) -> dict[VertexId, set[VertexId]]:
    adj: dict[VertexId, set[VertexId]] = {v: set() for v in g.vertices}
    for u, v in g.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _connected_avoiding(
    adj: dict[VertexId, set[VertexId]], removed: Optional[VertexId]
) -> bool:
    nodes = [v for v in adj if v != removed]
    if not nodes:
        return True
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w != removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def ug_two_connected(g: BipartiteDigraph) -> ConnectivityCertificate:
    """2-connectivity of the underlying undirected graph (order >= 3 required).

    Failure modes: a cut vertex (smallest one is reported), or a disconnected
    underlying graph, certified by a component partition with no crossing
    arcs in either direction (same shape as a non-strong certificate).
    """
    if g.order < 3:
        raise ContractViolationError("2-connectivity needs order >= 3")
    adj = _undirected_adjacency(g)
    if not _connected_avoiding(adj, None):
        component = frozenset(_reachable({v: tuple(ws) for v, ws in adj.items()}, g.vertices[0]))
        rest = frozenset(set(g.vertices) - component)
        return ConnectivityCertificate(CERT_NOT_STRONG, partition=(component, rest))
    for v in g.vertices:
        if not _connected_avoiding(adj, v):
            return ConnectivityCertificate(CERT_CUT_VERTEX, cut_vertex=v)
    return ConnectivityCertificate(CERT_TWO_CONNECTED)
