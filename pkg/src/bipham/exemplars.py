"""Generators for the bundled example graphs, plus isomorphism tooling.

Fixed-size families
    d8         the 8-vertex exceptional graph: strong, satisfies the max-degree
               pair condition at k=1, yet has no hamiltonian cycle
    d6         6 vertices, strong, k=1, underlying graph has a cut vertex
    h6         6 vertices, strong, k=0, no x-to-y perfect matching
    hprime6    6 vertices, strong, k=1, not hamiltonian

Parametric families
    ex4(a, size_a)      strong, k=-1, no x-to-y perfect matching (a >= 4)
    ex5(a)              strong, k=0, underlying graph has a cut vertex (a >= 4)
    directed_cycle(a)   the single directed cycle through all 2a vertices
    complete_bipartite(a)
    symmetric_cycle(a)  undirected 2a-cycle with every edge doubled (a >= 2)
    symmetric_path(a)   undirected 2a-path with every edge doubled

Isomorphism here allows the two sides to swap: a bijection must preserve
arcs and map sides onto sides, but may exchange the x- and y-roles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .core import Arc, BipartiteDigraph, VertexId, serialize_graph, vertex
from .errors import ContractViolationError, ResourceLimitError

FAMILY_NAMES = (
    "d8",
    "d6",
    "h6",
    "hprime6",
    "ex4",
    "ex5",
    "directed_cycle",
    "complete_bipartite",
    "symmetric_cycle",
    "symmetric_path",
)

CANONICAL_MAX_A = 6
_EXHAUSTIVE_MAX_A = 4


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters (``a``, ``size_a``)."""

    name: str
    params: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, name: str, **params: int) -> "FamilySpec":
        if name not in FAMILY_NAMES:
            raise ContractViolationError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")
        return cls(name, tuple(sorted(params.items())))

    def params_dict(self) -> dict[str, int]:
        return dict(self.params)


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    mapping: Optional[tuple[tuple[VertexId, VertexId], ...]] = None
    swapped_sides: bool = False

    def mapping_dict(self) -> Optional[dict[VertexId, VertexId]]:
        return None if self.mapping is None else dict(self.mapping)


def _two_cycle(u: VertexId, v: VertexId) -> list[Arc]:
    return [(u, v), (v, u)]


def d8() -> BipartiteDigraph:
    arcs: list[Arc] = []
    for i in range(4):
        arcs.extend(_two_cycle(vertex("x", i), vertex("y", i)))
    for j in (0, 1):
        for i in (2, 3):
            arcs.extend(_two_cycle(vertex("y", j), vertex("x", i)))
    arcs += [
        (vertex("y", 0), vertex("x", 1)),
        (vertex("y", 1), vertex("x", 0)),
        (vertex("x", 2), vertex("y", 3)),
        (vertex("x", 3), vertex("y", 2)),
    ]
    return BipartiteDigraph.from_arcs(4, arcs)


def d6() -> BipartiteDigraph:
    arcs: list[Arc] = []
    for i in range(3):
        arcs.extend(_two_cycle(vertex("x", i), vertex("y", i)))
    arcs.extend(_two_cycle(vertex("x", 0), vertex("y", 2)))
    arcs.extend(_two_cycle(vertex("x", 1), vertex("y", 2)))
    arcs += [(vertex("x", 1), vertex("y", 0)), (vertex("x", 0), vertex("y", 1))]
    return BipartiteDigraph.from_arcs(3, arcs)


def h6() -> BipartiteDigraph:
    return BipartiteDigraph.from_arc_strings(
        3,
        [
            "x0 y0",
            "x1 y0",
            "y0 x0",
            "y1 x0",
            "y2 x0",
            "y1 x1",
            "y1 x2",
            "x2 y1",
            "x2 y2",
            "y0 x2",
        ],
    )


def hprime6() -> BipartiteDigraph:
    arcs: list[Arc] = []
    for i in range(3):
        arcs.extend(_two_cycle(vertex("x", i), vertex("y", i)))
    arcs.extend(_two_cycle(vertex("x", 0), vertex("y", 1)))
    arcs.extend(_two_cycle(vertex("x", 1), vertex("y", 2)))
    arcs += [
        (vertex("y", 0), vertex("x", 1)),
        (vertex("y", 1), vertex("x", 2)),
        (vertex("x", 0), vertex("y", 2)),
    ]
    return BipartiteDigraph.from_arcs(3, arcs)


def ex4(a: int, size_a: int = 1) -> BipartiteDigraph:
    """x side: block A (size_a vertices), block B, then z last; y side: block C
    (a - 2 vertices), then u, then v.

    All of the x side is doubly joined to C; z -> u, z <-> v; u feeds A and v
    feeds B.  No x-to-y perfect matching exists: A and B together see only C.
    """
    if a < 4:
        raise ContractViolationError(f"ex4 needs a >= 4, got {a}")
    if not 1 <= size_a <= a - 2:
        raise ContractViolationError(f"ex4 needs 1 <= size_a <= a - 2, got size_a={size_a}")
    z = vertex("x", a - 1)
    u = vertex("y", a - 2)
    v = vertex("y", a - 1)
    arcs: list[Arc] = []
    for i in range(a):
        for j in range(a - 2):
            arcs.extend(_two_cycle(vertex("x", i), vertex("y", j)))
    arcs.append((z, u))
    arcs.extend(_two_cycle(z, v))
    for i in range(size_a):
        arcs.append((u, vertex("x", i)))
    for i in range(size_a, a - 1):
        arcs.append((v, vertex("x", i)))
    return BipartiteDigraph.from_arcs(a, arcs)


def ex5(a: int) -> BipartiteDigraph:
    """Complete double join minus the 0-indexed pair, which hangs off x0.

    y0's only neighbor is x0, so x0 is a cut vertex of the underlying graph
    even though the digraph is strong and satisfies the k=0 pair condition.
    """
    if a < 4:
        raise ContractViolationError(f"ex5 needs a >= 4, got {a}")
    arcs: list[Arc] = []
    for i in range(1, a):
        for j in range(1, a):
            arcs.extend(_two_cycle(vertex("x", i), vertex("y", j)))
    arcs.extend(_two_cycle(vertex("x", 0), vertex("y", 0)))
    arcs.extend(_two_cycle(vertex("x", 0), vertex("y", 1)))
    return BipartiteDigraph.from_arcs(a, arcs)


def directed_cycle(a: int) -> BipartiteDigraph:
    if a < 1:
        raise ContractViolationError(f"directed_cycle needs a >= 1, got {a}")
    arcs: list[Arc] = []
    for i in range(a):
        arcs.append((vertex("x", i), vertex("y", i)))
        arcs.append((vertex("y", i), vertex("x", (i + 1) % a)))
    return BipartiteDigraph.from_arcs(a, arcs)


def complete_bipartite(a: int) -> BipartiteDigraph:
    if a < 1:
        raise ContractViolationError(f"complete_bipartite needs a >= 1, got {a}")
    arcs: list[Arc] = []
    for i in range(a):
        for j in range(a):
            arcs.extend(_two_cycle(vertex("x", i), vertex("y", j)))
    return BipartiteDigraph.from_arcs(a, arcs)


def symmetric_cycle(a: int) -> BipartiteDigraph:
    """The undirected cycle x0 y0 x1 y1 ... with every edge replaced by a 2-cycle."""
    if a < 2:
        raise ContractViolationError(f"symmetric_cycle needs a >= 2, got {a}")
    arcs: list[Arc] = []
    for i in range(a):
        arcs.extend(_two_cycle(vertex("x", i), vertex("y", i)))
        arcs.extend(_two_cycle(vertex("y", i), vertex("x", (i + 1) % a)))
    return BipartiteDigraph.from_arcs(a, arcs)


def symmetric_path(a: int) -> BipartiteDigraph:
    """The undirected path on 2a vertices with every edge replaced by a 2-cycle."""
    if a < 1:
        raise ContractViolationError(f"symmetric_path needs a >= 1, got {a}")
    arcs: list[Arc] = []
    for i in range(a):
        arcs.extend(_two_cycle(vertex("x", i), vertex("y", i)))
        if i + 1 < a:
            arcs.extend(_two_cycle(vertex("y", i), vertex("x", i + 1)))
    return BipartiteDigraph.from_arcs(a, arcs)


_FIXED_FAMILIES = {"d8": d8, "d6": d6, "h6": h6, "hprime6": hprime6}
_PARAMETRIC_FAMILIES = {
    "ex4": ex4,
    "ex5": ex5,
    "directed_cycle": directed_cycle,
    "complete_bipartite": complete_bipartite,
    "symmetric_cycle": symmetric_cycle,
    "symmetric_path": symmetric_path,
}


def generate(spec: FamilySpec) -> BipartiteDigraph:
    """Build the graph a :class:`FamilySpec` describes; rejects stray params."""
    params = spec.params_dict()
    if spec.name in _FIXED_FAMILIES:
        if params:
            raise ContractViolationError(f"family {spec.name!r} takes no parameters")
        return _FIXED_FAMILIES[spec.name]()
    if spec.name not in _PARAMETRIC_FAMILIES:
        raise ContractViolationError(f"unknown family {spec.name!r}; known: {FAMILY_NAMES}")
    if "a" not in params:
        raise ContractViolationError(f"family {spec.name!r} requires parameter 'a'")
    allowed = {"a", "size_a"} if spec.name == "ex4" else {"a"}
    stray = set(params) - allowed
    if stray:
        raise ContractViolationError(f"family {spec.name!r} got unknown parameters {sorted(stray)}")
    return _PARAMETRIC_FAMILIES[spec.name](**params)


def is_directed_cycle(g: BipartiteDigraph) -> bool:
    """True iff the graph is a single directed cycle through all vertices."""
    from .conditions import CERT_STRONG, is_strong

    if any(len(g.out_map[v]) != 1 or len(g.in_map[v]) != 1 for v in g.vertices):
        return False
    return is_strong(g).kind == CERT_STRONG


# -- relabeling and isomorphism ------------------------------------------------


def relabel(
    g: BipartiteDigraph,
    x_perm: Sequence[int],
    y_perm: Sequence[int],
    swap_sides: bool = False,
) -> BipartiteDigraph:
    """New graph with x_i renamed to position ``x_perm[i]`` (landing on the y
    side when ``swap_sides``) and likewise for ``y_perm``."""
    for perm in (x_perm, y_perm):
        if sorted(perm) != list(range(g.a)):
            raise ContractViolationError(f"not a permutation of range({g.a}): {list(perm)}")
    x_side, y_side = ("y", "x") if swap_sides else ("x", "y")
    mapping = {vertex("x", i): vertex(x_side, x_perm[i]) for i in range(g.a)}
    mapping.update({vertex("y", j): vertex(y_side, y_perm[j]) for j in range(g.a)})
    return BipartiteDigraph.from_arcs(g.a, ((mapping[u], mapping[v]) for u, v in g.arcs))


def _degree_pairs(g: BipartiteDigraph, side_vertices) -> list[tuple[int, int]]:
    return sorted((len(g.out_map[v]), len(g.in_map[v])) for v in side_vertices)


def is_isomorphic(g1: BipartiteDigraph, g2: BipartiteDigraph) -> IsoResult:
    """Arc-preserving vertex bijection between g1 and g2, if one exists.

    Sides must map onto sides but the two roles may swap; the result records
    whether they did.  Backtracking assigns g1's vertices in sorted order to
    degree-compatible targets, so the mapping found first is deterministic.
    """
    if g1.a != g2.a or len(g1.arcs) != len(g2.arcs):
        return IsoResult(False)
    for swapped in (False, True):
        if swapped:
            targets_for_x, targets_for_y = g2.y_vertices, g2.x_vertices
        else:
            targets_for_x, targets_for_y = g2.x_vertices, g2.y_vertices
        if _degree_pairs(g1, g1.x_vertices) != _degree_pairs(g2, targets_for_x):
            continue
        if _degree_pairs(g1, g1.y_vertices) != _degree_pairs(g2, targets_for_y):
            continue
        assignment: dict[VertexId, VertexId] = {}
        used: set[VertexId] = set()
        if _extend_isomorphism(g1, g2, targets_for_x, targets_for_y, assignment, used, 0):
            return IsoResult(True, tuple(sorted(assignment.items())), swapped)
    return IsoResult(False)


def _extend_isomorphism(g1, g2, targets_for_x, targets_for_y, assignment, used, position) -> bool:
    if position == len(g1.vertices):
        return True
    u = g1.vertices[position]
    pool = targets_for_x if u.side == "x" else targets_for_y
    u_out, u_in = len(g1.out_map[u]), len(g1.in_map[u])
    for candidate in pool:
        if candidate in used:
            continue
        if len(g2.out_map[candidate]) != u_out or len(g2.in_map[candidate]) != u_in:
            continue
        if not _consistent(g1, g2, assignment, u, candidate):
            continue
        assignment[u] = candidate
        used.add(candidate)
        if _extend_isomorphism(g1, g2, targets_for_x, targets_for_y, assignment, used, position + 1):
            return True
        del assignment[u]
        used.discard(candidate)
    return False


def _consistent(g1, g2, assignment, u, candidate) -> bool:
    for w, img in assignment.items():
        if g1.has_arc(u, w) != g2.has_arc(candidate, img):
            return False
        if g1.has_arc(w, u) != g2.has_arc(img, candidate):
            return False
    return True


# -- canonical form ------------------------------------------------------------
#
# The canonical form of a graph is the lexicographically smallest canonical
# serialization over all relabelings (side-preserving and side-swapping).
# Internally a relabeled arc set is compared as a sorted tuple of triples:
# (0, i, j) encodes x_i -> y_j and (1, j, i) encodes y_j -> x_i, which sorts
# exactly like serialized arc lines.

_ArcKey = tuple[tuple[int, int, int], ...]


def canonical_form(g: BipartiteDigraph) -> str:
    """Canonical serialization, equal for two graphs iff they are isomorphic.

    Exhaustive over all relabelings up to a=4; for a=5..6 a pruned search
    over target-side orderings is used.  Larger graphs are refused.
    """
    if g.a > CANONICAL_MAX_A:
        raise ResourceLimitError(
            f"canonical form is limited to a <= {CANONICAL_MAX_A}, got a={g.a}"
        )
    if g.a <= _EXHAUSTIVE_MAX_A:
        key = _canonical_key_exhaustive(g)
    else:
        key = _canonical_key_refined(g)
    return serialize_graph(_decode_arc_key(g.a, key))


def _decode_arc_key(a: int, key: _ArcKey) -> BipartiteDigraph:
    arcs = []
    for flag, i, j in key:
        if flag == 0:
            arcs.append((vertex("x", i), vertex("y", j)))
        else:
            arcs.append((vertex("y", i), vertex("x", j)))
    return BipartiteDigraph.from_arcs(a, arcs)


def _arc_key_for(g: BipartiteDigraph, xp, yp, swap: bool) -> _ArcKey:
    key = []
    for u, v in g.arcs:
        if u.side == "x":
            src, dst = xp[u.index], yp[v.index]
            flag = 1 if swap else 0
        else:
            src, dst = yp[u.index], xp[v.index]
            flag = 0 if swap else 1
        key.append((flag, src, dst))
    return tuple(sorted(key))


def _canonical_key_exhaustive(g: BipartiteDigraph) -> _ArcKey:
    best: Optional[_ArcKey] = None
    for swap in (False, True):
        for xp in permutations(range(g.a)):
            for yp in permutations(range(g.a)):
                key = _arc_key_for(g, xp, yp, swap)
                if best is None or key < best:
                    best = key
    assert best is not None
    return best


def _canonical_key_refined(g: BipartiteDigraph) -> _ArcKey:
    """Branch-and-bound canonicalization for a = 5..6.

    For each side orientation and each ordering of the vertices that land on
    the y side, the x-slot assignment minimizing the leading arc block is
    forced up to ties: sort by out-neighbor rows, padded so that shorter rows
    sort *after* their extensions (an absent arc position compares greater
    than any present arc).  Tie groups are then permuted, deduplicated by
    in-neighbor signature, to settle the trailing block.
    """
    a = g.a
    best: Optional[_ArcKey] = None
    for swap in (False, True):
        # originals landing in x slots / y slots under this orientation
        x_pool = g.y_vertices if swap else g.x_vertices
        y_pool = g.x_vertices if swap else g.y_vertices
        for y_order in permutations(y_pool):
            slot_of = {t: j for j, t in enumerate(y_order)}
            rows = {
                u: tuple(sorted(slot_of[w] for w in g.out_map[u])) for u in x_pool
            }
            padded = {u: rows[u] + (a,) * (a - len(rows[u])) for u in x_pool}
            ordered = sorted(x_pool, key=lambda u: padded[u])
            block1 = tuple(
                (0, i, t) for i, u in enumerate(ordered) for t in rows[u]
            )
            if best is not None and block1 > best[: len(block1)]:
                continue
            sig2 = {
                u: tuple(sorted(slot_of[w] for w in g.in_map[u])) for u in x_pool
            }
            for arrangement in _tie_arrangements(ordered, padded, sig2):
                x_slot_of = {u: i for i, u in enumerate(arrangement)}
                block2 = tuple(
                    (1, j, s)
                    for j, t in enumerate(y_order)
                    for s in sorted(x_slot_of[w] for w in g.out_map[t])
                )
                key = block1 + block2
                if best is None or key < best:
                    best = key
    assert best is not None
    return best


def _tie_arrangements(ordered, padded, sig2) -> Iterator[tuple]:
    """All orderings compatible with the row sort, deduplicated within tie
    groups by in-neighbor signature (equal-signature vertices are
    interchangeable in both arc blocks)."""
    groups: list[list] = []
    for u in ordered:
        if groups and padded[groups[-1][0]] == padded[u]:
            groups[-1].append(u)
        else:
            groups.append([u])
    per_group: list[list[tuple]] = []
    for group in groups:
        if len(group) == 1:
            per_group.append([tuple(group)])
            continue
        seen: set[tuple] = set()
        variants: list[tuple] = []
        for perm in permutations(group):
            signature = tuple(sig2[u] for u in perm)
            if signature not in seen:
                seen.add(signature)
                variants.append(perm)
        per_group.append(variants)
    return (_flatten(combo) for combo in _product(per_group))


def _product(per_group):
    if not per_group:
        yield ()
        return
    for head in per_group[0]:
        for rest in _product(per_group[1:]):
            yield (head,) + rest


def _flatten(combo) -> tuple:
    out: list = []
    for part in combo:
        out.extend(part)
    return tuple(out)
