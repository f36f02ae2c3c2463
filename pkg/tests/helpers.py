"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive: permutation enumeration, subset
Hall checks, closure-based reachability.  Slow but obviously correct on
the small orders the tests use.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from hypothesis import strategies as st

from bipham import BipartiteDigraph, VertexId, graph_from_bits, vertex


def adjacency(g: BipartiteDigraph) -> dict[VertexId, set[VertexId]]:
    adj: dict[VertexId, set[VertexId]] = {v: set() for v in g.vertices}
    for u, v in g.arcs:
        adj[u].add(v)
    return adj


def brute_strong(g: BipartiteDigraph) -> bool:
    """Reachability closure from every vertex."""
    adj = adjacency(g)
    for start in g.vertices:
        seen = {start}
        frontier = [start]
        while frontier:
            frontier = [w for u in frontier for w in adj[u] if w not in seen]
            seen.update(frontier)
        if len(seen) != g.order:
            return False
    return True


def brute_hamiltonian(g: BipartiteDigraph) -> bool:
    """Try every alternating vertex ordering that starts at x0.

    a! orderings of the y side times (a-1)! of the remaining x side.
    """
    a = g.a
    adj = adjacency(g)
    xs = [vertex("x", i) for i in range(a)]
    ys = [vertex("y", j) for j in range(a)]
    for y_order in itertools.permutations(ys):
        for x_rest in itertools.permutations(xs[1:]):
            seq = [xs[0]]
            for k in range(a):
                seq.append(y_order[k])
                if k + 1 < a:
                    seq.append(x_rest[k])
            if all(seq[i + 1] in adj[seq[i]] for i in range(2 * a - 1)) and seq[0] in adj[seq[-1]]:
                return True
    return False


def brute_cycles(g: BipartiteDigraph) -> set[tuple[VertexId, ...]]:
    """Every cycle, as a normalized vertex tuple starting at its smallest vertex.

    The smallest vertex of any cycle is an x (x sorts before y), so sequences
    are built x-first with the anchor fixed.
    """
    adj = adjacency(g)
    found: set[tuple[VertexId, ...]] = set()
    a = g.a
    xs = [vertex("x", i) for i in range(a)]
    ys = [vertex("y", j) for j in range(a)]
    for k in range(1, a + 1):
        for x_set in itertools.combinations(xs, k):
            anchor = x_set[0]
            for y_set in itertools.combinations(ys, k):
                for x_rest in itertools.permutations(x_set[1:]):
                    for y_perm in itertools.permutations(y_set):
                        seq = [anchor]
                        for i in range(k):
                            seq.append(y_perm[i])
                            if i + 1 < k:
                                seq.append(x_rest[i])
                        if all(
                            seq[i + 1] in adj[seq[i]] for i in range(2 * k - 1)
                        ) and seq[0] in adj[seq[-1]]:
                            found.add(tuple(seq))
    return found


def brute_matching_exists(g: BipartiteDigraph, direction: str) -> bool:
    """Permutation check: some bijection source->target realized by arcs."""
    a = g.a
    adj = adjacency(g)
    src_side, dst_side = ("x", "y") if direction == "x_to_y" else ("y", "x")
    sources = [vertex(src_side, i) for i in range(a)]
    for perm in itertools.permutations(range(a)):
        if all(vertex(dst_side, perm[i]) in adj[sources[i]] for i in range(a)):
            return True
    return False


def hall_subset_violations(g: BipartiteDigraph, direction: str) -> list[frozenset[VertexId]]:
    """All source subsets S with |N+(S)| < |S|, exhaustively."""
    a = g.a
    adj = adjacency(g)
    src_side = "x" if direction == "x_to_y" else "y"
    sources = [vertex(src_side, i) for i in range(a)]
    bad = []
    for r in range(1, a + 1):
        for subset in itertools.combinations(sources, r):
            image = set().union(*(adj[u] for u in subset))
            if len(image) < r:
                bad.append(frozenset(subset))
    return bad


def brute_isomorphic(g1: BipartiteDigraph, g2: BipartiteDigraph) -> bool:
    """Try all 2 * a! * a! relabelings directly on the arc sets."""
    if g1.a != g2.a or g1.arc_count != g2.arc_count:
        return False
    a = g1.a
    target = {(u.side, u.index, v.side, v.index) for u, v in g2.arcs}
    sides = {False: {"x": "x", "y": "y"}, True: {"x": "y", "y": "x"}}
    for swap in (False, True):
        rename = sides[swap]
        for xp in itertools.permutations(range(a)):
            for yp in itertools.permutations(range(a)):
                perm = {"x": xp, "y": yp}
                mapped = {
                    (rename[u.side], perm[u.side][u.index], rename[v.side], perm[v.side][v.index])
                    for u, v in g1.arcs
                }
                if mapped == target:
                    return True
    return False


def brute_bypasses(
    g: BipartiteDigraph, cycle_vertices: tuple[VertexId, ...]
) -> list[tuple[tuple[VertexId, ...], int]]:
    """All paths that leave the cycle, run through off-cycle vertices, and re-enter.

    Returns (path, gap) pairs; gap counts cycle arcs from entry to exit.
    """
    adj = adjacency(g)
    position = {v: i for i, v in enumerate(cycle_vertices)}
    n = len(cycle_vertices)
    off = [v for v in g.vertices if v not in position]
    results = []
    for x in cycle_vertices:
        for k in range(1, len(off) + 1):
            for interior in itertools.permutations(off, k):
                if interior[0] not in adj[x]:
                    continue
                if any(interior[i + 1] not in adj[interior[i]] for i in range(k - 1)):
                    continue
                for y in adj[interior[-1]]:
                    if y in position and y != x:
                        gap = (position[y] - position[x]) % n
                        results.append(((x, *interior, y), gap))
    return results


def bits_for(a: int) -> st.SearchStrategy[int]:
    return st.integers(min_value=0, max_value=2 ** (2 * a * a) - 1)


@st.composite
def small_graphs(draw: st.DrawFn, min_a: int = 1, max_a: int = 4) -> BipartiteDigraph:
    a = draw(st.integers(min_value=min_a, max_value=max_a))
    return graph_from_bits(a, draw(bits_for(a)))


def graph_pairs(a: int) -> st.SearchStrategy[tuple[BipartiteDigraph, BipartiteDigraph]]:
    one = bits_for(a).map(lambda b: graph_from_bits(a, b))
    return st.tuples(one, one)
