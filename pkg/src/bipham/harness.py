"""Population checks: sampling, exhaustive enumeration, theorem verdicts.

Every claim checked here has the same shape: over a population of graphs,
each graph satisfying a hypothesis must satisfy a conclusion.  A graph that
fails is a counterexample and is embedded in the verdict as a full
serialization, so it can be re-validated from the report alone.  A graph
whose conclusion check blows a search budget is *inconclusive*; a verdict
passes only with zero counterexamples and zero inconclusive graphs.

Sampling draws every possible arc independently with a fixed probability
from a seeded PCG64 stream and rejects graphs violating the requested
constraints, so identical configs reproduce identical populations.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Union

import numpy as np

from . import conditions, cycles, exemplars, matching
from .core import BipartiteDigraph, arc_positions, degree
from .errors import ContractViolationError, ResourceLimitError, SamplingInfeasibleError

REPORT_FORMAT_VERSION = 1
MAX_REJECTION_ATTEMPTS = 10**6
ENUMERATION_MAX_A = 3
CHECK_MAX_A = 10

# Constraint names usable during sampling (cheap, polynomial checks) ...
SAMPLE_CONSTRAINTS = ("strong", "B1", "B0", "degree_sum_4a_minus_3", "wang")
# ... and the superset enumeration filters may use (ordered cheapest first).
ENUMERATION_CONSTRAINTS = SAMPLE_CONSTRAINTS + (
    "not_directed_cycle",
    "hamiltonian",
    "not_hamiltonian",
)


def _is_strong(g: BipartiteDigraph) -> bool:
    return conditions.is_strong(g).kind == conditions.CERT_STRONG


_CONSTRAINT_PREDICATES: dict[str, Callable[[BipartiteDigraph], bool]] = {
    "strong": _is_strong,
    "B1": lambda g: conditions.check_condition_Bk(g, 1).holds,
    "B0": lambda g: conditions.check_condition_Bk(g, 0).holds,
    "degree_sum_4a_minus_3": lambda g: conditions.check_degree_sum(g, 4 * g.a - 3).holds,
    "wang": lambda g: conditions.check_wang(g).holds,
    "not_directed_cycle": lambda g: not exemplars.is_directed_cycle(g),
    "hamiltonian": lambda g: cycles.hamiltonian_cycle(g) is not None,
    "not_hamiltonian": lambda g: cycles.hamiltonian_cycle(g) is None,
}


def _validate_constraints(names: Iterable[str], allowed: tuple[str, ...]) -> tuple[str, ...]:
    names = list(names)
    unknown = [n for n in names if n not in allowed]
    if unknown:
        raise ContractViolationError(f"unknown constraints {unknown}; allowed: {list(allowed)}")
    # evaluation order is the fixed registry order, cheapest first
    return tuple(n for n in allowed if n in names)


@dataclass(frozen=True)
class SampleConfig:
    a: int
    arc_probability: float
    seed: int
    count: int
    constraints: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.a < 1:
            raise ContractViolationError(f"half-order must be >= 1, got {self.a}")
        if not 0 < self.arc_probability <= 1:
            raise ContractViolationError(
                f"arc_probability must be in (0, 1], got {self.arc_probability}"
            )
        if not 0 <= self.seed < 2**64:
            raise ContractViolationError("seed must be an unsigned 64-bit integer")
        if self.count < 1:
            raise ContractViolationError(f"count must be >= 1, got {self.count}")
        if not isinstance(self.constraints, frozenset):
            object.__setattr__(self, "constraints", frozenset(self.constraints))
        _validate_constraints(self.constraints, SAMPLE_CONSTRAINTS)

    def descriptor(self) -> dict:
        return {
            "kind": "sample",
            "a": self.a,
            "arc_probability": self.arc_probability,
            "seed": self.seed,
            "count": self.count,
            "constraints": sorted(self.constraints),
        }


def sample_random(
    cfg: SampleConfig, *, max_attempts_per_graph: int = MAX_REJECTION_ATTEMPTS
) -> list[BipartiteDigraph]:
    """Rejection-sample ``cfg.count`` graphs; deterministic in ``cfg.seed``.

    Each of the 2*a*a arc slots is drawn independently per attempt, then the
    whole attempt is kept or rejected, so the accepted sequence depends only
    on the seed, never on constraint evaluation order.
    """
    ordered = _validate_constraints(cfg.constraints, SAMPLE_CONSTRAINTS)
    predicates = [_CONSTRAINT_PREDICATES[name] for name in ordered]
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    positions = arc_positions(cfg.a)
    min_arcs = 2 * cfg.a if "strong" in cfg.constraints else 0
    accepted: list[BipartiteDigraph] = []
    for _ in range(cfg.count):
        for _attempt in range(max_attempts_per_graph):
            hits = np.flatnonzero(rng.random(len(positions)) < cfg.arc_probability)
            if hits.size < min_arcs:  # strongness needs out-degree >= 1 everywhere
                continue
            g = BipartiteDigraph(cfg.a, frozenset(positions[i] for i in hits))
            if all(p(g) for p in predicates):
                accepted.append(g)
                break
        else:
            raise SamplingInfeasibleError(
                f"no graph satisfying {sorted(cfg.constraints)} found in "
                f"{max_attempts_per_graph} attempts (a={cfg.a}, "
                f"p={cfg.arc_probability})"
            )
    return accepted


def enumerate_all(
    a: int, constraints: Iterable[str] = (), *, dedupe: bool = False
) -> Iterator[BipartiteDigraph]:
    """Yield every arc set on 2a vertices (as integers 0..2^(2a^2)-1, ascending)
    that passes the filter; optionally only one representative per isomorphism
    class."""
    if a > ENUMERATION_MAX_A:
        raise ResourceLimitError(
            f"exhaustive enumeration is limited to a <= {ENUMERATION_MAX_A}, got a={a}"
        )
    ordered = _validate_constraints(constraints, ENUMERATION_CONSTRAINTS)
    predicates = [_CONSTRAINT_PREDICATES[name] for name in ordered]
    positions = arc_positions(a)
    seen_forms: set[str] = set()
    for bits in range(1 << len(positions)):
        arcs = frozenset(positions[i] for i in range(len(positions)) if bits >> i & 1)
        g = BipartiteDigraph(a, arcs)
        if not all(p(g) for p in predicates):
            continue
        if dedupe:
            form = exemplars.canonical_form(g)
            if form in seen_forms:
                continue
            seen_forms.add(form)
        yield g


# -- theorem verification ------------------------------------------------------


@dataclass(frozen=True)
class TheoremInfo:
    theorem_id: str
    description: str
    default_min_order: int
    hypothesis: Callable[[BipartiteDigraph], bool]
    conclusion: Callable[[BipartiteDigraph], tuple[bool, str]]
    sample_constraints: frozenset[str]


def _hyp_B1(g):
    return _is_strong(g) and conditions.check_condition_Bk(g, 1).holds


def _hyp_B0(g):
    return _is_strong(g) and conditions.check_condition_Bk(g, 0).holds


def _concl_hamiltonian_or_exception(g):
    if cycles.hamiltonian_cycle(g) is not None:
        return True, ""
    if exemplars.is_isomorphic(g, exemplars.d8()).isomorphic:
        return True, ""
    return False, "not hamiltonian and not the exceptional 8-vertex graph"


def _concl_hamiltonian(g):
    if cycles.hamiltonian_cycle(g) is not None:
        return True, ""
    return False, "not hamiltonian"


def _concl_two_connected_with_bypasses(g):
    cert = conditions.ug_two_connected(g)
    if cert.kind != conditions.CERT_TWO_CONNECTED:
        return False, f"underlying graph not 2-connected ({cert.kind}: {cert.cut_vertex})"
    for cycle in cycles.iter_cycles(g, max_length=g.order - 2):
        if not cycles.has_bypass(g, cycle):
            path = " ".join(str(v) for v in cycle.vertices)
            return False, f"cycle ({path}) has no bypass"
    return True, ""


def _concl_matchings_and_factor(g):
    for direction in matching.DIRECTIONS:
        if matching.perfect_matching(g, direction) is None:
            return False, f"no perfect matching in direction {direction}"
    if matching.cycle_factor(g) is None:
        return False, "no cycle factor"
    return True, ""


def _concl_non_hamiltonian_long_cycle(g):
    if cycles.non_hamiltonian_long_cycle(g) is not None:
        return True, ""
    return False, f"no cycle of even length in [4, {g.order - 2}]"


def _concl_even_pancyclic_or_exception(g):
    missing = [
        length
        for length in range(4, g.order + 1, 2)
        if cycles.cycle_of_length(g, length) is None
    ]
    if not missing:
        return True, ""
    if exemplars.is_isomorphic(g, exemplars.d8()).isomorphic:
        return True, ""
    return False, f"missing cycle lengths {missing} and not the exceptional graph"


THEOREMS: dict[str, TheoremInfo] = {
    t.theorem_id: t
    for t in (
        TheoremInfo(
            "T1_9",
            "strong + max-degree pair condition (k=1) implies hamiltonian or the"
            " exceptional 8-vertex graph",
            8,
            _hyp_B1,
            _concl_hamiltonian_or_exception,
            frozenset({"strong", "B1"}),
        ),
        TheoremInfo(
            "T1_10",
            "strong + pair degree sum >= 4a-3 implies hamiltonian (exceptional"
            " graph excluded)",
            8,
            lambda g: _is_strong(g) and conditions.check_degree_sum(g, 4 * g.a - 3).holds,
            _concl_hamiltonian_or_exception,
            frozenset({"strong", "degree_sum_4a_minus_3"}),
        ),
        TheoremInfo(
            "C5_1",
            "strong + two-tier pair condition (2a-1 / a+1) implies hamiltonian",
            10,
            lambda g: _is_strong(g) and conditions.check_wang(g).holds,
            _concl_hamiltonian,
            frozenset({"strong", "wang"}),
        ),
        TheoremInfo(
            "L4_1",
            "strong + pair degree sum >= 2a+3 implies 2-connected underlying"
            " graph and a bypass for every cycle of length <= 2a-2",
            4,
            lambda g: _is_strong(g) and conditions.check_degree_sum(g, 2 * g.a + 3).holds,
            _concl_two_connected_with_bypasses,
            frozenset({"strong"}),
        ),
        TheoremInfo(
            "L4_2",
            "strong + max-degree pair condition (k=1) implies 2-connected"
            " underlying graph and a bypass for every cycle of length <= 2a-2",
            8,
            _hyp_B1,
            _concl_two_connected_with_bypasses,
            frozenset({"strong", "B1"}),
        ),
        TheoremInfo(
            "L4_3",
            "strong + max-degree pair condition (k=0) implies perfect matchings"
            " in both directions and a cycle factor",
            8,
            _hyp_B0,
            _concl_matchings_and_factor,
            frozenset({"strong", "B0"}),
        ),
        TheoremInfo(
            "L4_4",
            "strong + max-degree pair condition (k=0), not a directed cycle,"
            " implies a non-hamiltonian cycle of length >= 4",
            8,
            lambda g: _hyp_B0(g) and not exemplars.is_directed_cycle(g),
            _concl_non_hamiltonian_long_cycle,
            frozenset({"strong", "B0"}),
        ),
        TheoremInfo(
            "T6_1",
            "strong + max-degree pair condition (k=1), not a directed cycle,"
            " implies cycles of every even length 4..2a or the exceptional graph",
            8,
            lambda g: _hyp_B1(g) and not exemplars.is_directed_cycle(g),
            _concl_even_pancyclic_or_exception,
            frozenset({"strong", "B1"}),
        ),
    )
}


@dataclass(frozen=True)
class ExplicitPopulation:
    graphs: tuple[BipartiteDigraph, ...]

    def descriptor(self) -> dict:
        return {"kind": "explicit", "count": len(self.graphs)}


@dataclass(frozen=True)
class ExhaustivePopulation:
    a: int
    constraints: frozenset[str] = frozenset()

    def descriptor(self) -> dict:
        return {"kind": "exhaustive", "a": self.a, "constraints": sorted(self.constraints)}


@dataclass(frozen=True)
class SampledPopulation:
    config: SampleConfig

    def descriptor(self) -> dict:
        return self.config.descriptor()


Population = Union[ExplicitPopulation, ExhaustivePopulation, SampledPopulation]


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    population: dict
    min_order: int
    checked: int
    passed: int
    skipped_hypothesis: int
    counterexamples: tuple[dict, ...]
    inconclusive: tuple[dict, ...]

    @property
    def passes(self) -> bool:
        return not self.counterexamples and not self.inconclusive

    def to_json_dict(self) -> dict:
        return {
            "format_version": REPORT_FORMAT_VERSION,
            "theorem": self.theorem_id,
            "population": self.population,
            "min_order": self.min_order,
            "checked": self.checked,
            "passed": self.passed,
            "skipped_hypothesis": self.skipped_hypothesis,
            "counterexamples": list(self.counterexamples),
            "inconclusive": list(self.inconclusive),
            "passes": self.passes,
        }

    def summary(self) -> str:
        return (
            f"{self.theorem_id}: checked={self.checked} passed={self.passed} "
            f"counterexamples={len(self.counterexamples)} "
            f"inconclusive={len(self.inconclusive)} "
            f"skipped={self.skipped_hypothesis} -> "
            f"{'PASS' if self.passes else 'FAIL'}"
        )


def graph_to_dict(g: BipartiteDigraph) -> dict:
    return {"a": g.a, "arcs": [f"{u} {v}" for u, v in g.sorted_arcs()]}


def _population_graphs(population: Population) -> Iterable[BipartiteDigraph]:
    if isinstance(population, ExplicitPopulation):
        return population.graphs
    if isinstance(population, ExhaustivePopulation):
        return enumerate_all(population.a, population.constraints)
    if isinstance(population, SampledPopulation):
        return sample_random(population.config)
    raise ContractViolationError(f"unknown population type {type(population).__name__}")


def _evaluate_one(theorem_id: str, min_order: int, g: BipartiteDigraph) -> tuple[str, str]:
    theorem = THEOREMS[theorem_id]
    if g.order < min_order or not theorem.hypothesis(g):
        return "skip", ""
    try:
        ok, reason = theorem.conclusion(g)
    except ResourceLimitError as exc:
        return "inconclusive", str(exc)
    return ("pass", "") if ok else ("fail", reason)


def _evaluate_for_pool(args: tuple[str, int, BipartiteDigraph]) -> tuple[str, str]:
    return _evaluate_one(*args)


def verify_theorem(
    theorem_id: str,
    population: Population,
    *,
    min_order: Optional[int] = None,
    workers: int = 1,
) -> TheoremVerdict:
    """Check one theorem over a population and aggregate a verdict.

    ``min_order`` overrides the theorem's stated lower bound on 2a, which
    makes it possible to probe how far below its stated order a claim
    actually survives.  ``workers`` > 1 evaluates graphs in a process pool;
    verdicts are aggregated in population order either way.
    """
    if theorem_id not in THEOREMS:
        raise ContractViolationError(
            f"unknown theorem {theorem_id!r}; known: {sorted(THEOREMS)}"
        )
    theorem = THEOREMS[theorem_id]
    bound = theorem.default_min_order if min_order is None else min_order
    if workers < 1:
        raise ContractViolationError(f"workers must be >= 1, got {workers}")

    graphs = _population_graphs(population)
    checked = passed = skipped = 0
    counterexamples: list[dict] = []
    inconclusive: list[dict] = []

    if workers == 1:
        outcomes: Iterable[tuple[BipartiteDigraph, tuple[str, str]]] = (
            (g, _evaluate_one(theorem_id, bound, g)) for g in graphs
        )
        for g, (status, reason) in outcomes:
            checked, passed, skipped = _tally(
                g, status, reason, checked, passed, skipped, counterexamples, inconclusive
            )
    else:
        graph_list = list(graphs)
        chunk = max(1, len(graph_list) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                _evaluate_for_pool,
                ((theorem_id, bound, g) for g in graph_list),
                chunksize=chunk,
            )
            for g, (status, reason) in zip(graph_list, results):
                checked, passed, skipped = _tally(
                    g, status, reason, checked, passed, skipped, counterexamples, inconclusive
                )

    return TheoremVerdict(
        theorem_id=theorem_id,
        population=population.descriptor(),
        min_order=bound,
        checked=checked,
        passed=passed,
        skipped_hypothesis=skipped,
        counterexamples=tuple(counterexamples),
        inconclusive=tuple(inconclusive),
    )


def _tally(g, status, reason, checked, passed, skipped, counterexamples, inconclusive):
    if status == "skip":
        return checked, passed, skipped + 1
    if status == "inconclusive":
        inconclusive.append({"graph": graph_to_dict(g), "reason": reason})
        return checked, passed, skipped
    checked += 1
    if status == "pass":
        return checked, passed + 1, skipped
    counterexamples.append({"graph": graph_to_dict(g), "reason": reason})
    return checked, passed, skipped


# -- single-graph report ---------------------------------------------------------

UNKNOWN = "unknown"


@dataclass(frozen=True)
class ReportDocument:
    data: dict

    def to_json(self) -> str:
        return dump_json(self.data)

    def to_text(self) -> str:
        d = self.data
        lines = [
            f"half-order a: {d['graph']['a']}",
            f"arcs: {len(d['graph']['arcs'])}",
            f"strong: {_fmt(d['strong'], 'holds')}",
            f"underlying 2-connected: {_fmt(d['ug_two_connected'], 'holds')}",
            f"dominating pairs: {d['dominating_pair_count']}",
            f"max pair-condition level: {d['max_bk']}",
        ]
        for name in sorted(d["conditions"]):
            lines.append(f"condition {name}: {_fmt(d['conditions'][name], 'holds')}")
        for direction in matching.DIRECTIONS:
            lines.append(
                f"perfect matching {direction}: {_fmt(d['matchings'][direction], 'perfect')}"
            )
        lines.append(f"cycle factor: {_fmt(d['cycle_factor'], 'exists')}")
        lines.append(f"even cycle spectrum: {d['even_spectrum']}")
        lines.append(f"hamiltonian: {_fmt(d['hamiltonian'], 'found')}")
        lines.append(f"isomorphic to exceptional 8-vertex graph: {d['iso_d8']}")
        return "\n".join(lines) + "\n"


def _fmt(value, key: str):
    if value == UNKNOWN or value is None:
        return UNKNOWN
    return value[key]


def _certificate_dict(cert: conditions.ConnectivityCertificate) -> dict:
    out: dict = {"kind": cert.kind}
    if cert.partition is not None:
        out["partition"] = [sorted(str(v) for v in part) for part in cert.partition]
    if cert.cut_vertex is not None:
        out["cut_vertex"] = str(cert.cut_vertex)
    return out


def _condition_dict(report: conditions.ConditionReport) -> dict:
    out: dict = {"holds": report.holds, "threshold": report.threshold}
    if report.violating_pair is not None:
        out["violating_pair"] = [str(report.violating_pair.u), str(report.violating_pair.v)]
        out["violating_degrees"] = list(report.violating_values)
        out["pair_witness"] = str(report.violating_pair.witness)
    return out


def run_check(g: BipartiteDigraph) -> ReportDocument:
    """Full property report for one graph (a <= 10).

    Fields whose computation exhausts a search budget are reported as
    ``"unknown"`` rather than failing the whole report.
    """
    if g.a > CHECK_MAX_A:
        raise ContractViolationError(f"run_check is limited to a <= {CHECK_MAX_A}, got {g.a}")

    strong_cert = conditions.is_strong(g)
    data: dict = {
        "format_version": REPORT_FORMAT_VERSION,
        "graph": graph_to_dict(g),
        "degrees": {
            str(v): dict(zip(("out", "in", "total"), degree(g, v))) for v in g.vertices
        },
        "strong": {
            "holds": strong_cert.kind == conditions.CERT_STRONG,
            "certificate": _certificate_dict(strong_cert),
        },
    }
    if g.order >= 3:
        cert = conditions.ug_two_connected(g)
        data["ug_two_connected"] = {
            "holds": cert.kind == conditions.CERT_TWO_CONNECTED,
            "certificate": _certificate_dict(cert),
        }
    else:
        data["ug_two_connected"] = None  # undefined below order 3

    pairs = conditions.dominating_pairs(g)
    data["dominating_pair_count"] = len(pairs)
    level = conditions.max_Bk(g)
    data["max_bk"] = "infinity" if level == math.inf else level
    data["conditions"] = {
        "B0": _condition_dict(conditions.check_condition_Bk(g, 0)),
        "B1": _condition_dict(conditions.check_condition_Bk(g, 1)),
        "degree_sum_4a_minus_3": _condition_dict(
            conditions.check_degree_sum(g, 4 * g.a - 3)
        ),
        "wang": _condition_dict(conditions.check_wang(g)),
    }

    matchings: dict = {}
    for direction in matching.DIRECTIONS:
        found = matching.perfect_matching(g, direction)
        if found is not None:
            matchings[direction] = {
                "perfect": True,
                "matching": [f"{u} {v}" for u, v in sorted(found.arcs)],
            }
        else:
            violator = matching.hall_violator(g, direction)
            matchings[direction] = {
                "perfect": False,
                "hall_violator": sorted(str(v) for v in violator),
            }
    data["matchings"] = matchings

    factor = matching.cycle_factor(g)
    if factor is not None:
        data["cycle_factor"] = {
            "exists": True,
            "cycles": [[str(v) for v in c.vertices] for c in factor.cycles],
        }
    else:
        data["cycle_factor"] = {"exists": False}

    try:
        spectrum = cycles.even_spectrum(g)
        data["even_spectrum"] = sorted(spectrum)
        ham = cycles.hamiltonian_cycle(g)
        data["hamiltonian"] = {
            "found": ham is not None,
            "cycle": None if ham is None else [str(v) for v in ham.vertices],
        }
    except ResourceLimitError:
        data["even_spectrum"] = UNKNOWN
        data["hamiltonian"] = UNKNOWN

    data["iso_d8"] = exemplars.is_isomorphic(g, exemplars.d8()).isomorphic
    return ReportDocument(data)


def export_dot(g: BipartiteDigraph) -> str:
    """Graphviz rendering with each side pinned to one rank."""
    lines = ["digraph bipham {", "  rankdir=LR;"]
    lines.append("  { rank=same; " + " ".join(f"{v};" for v in g.x_vertices) + " }")
    lines.append("  { rank=same; " + " ".join(f"{v};" for v in g.y_vertices) + " }")
    for u, v in g.sorted_arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(obj) -> str:
    """Stable JSON rendering (sorted keys, fixed indentation, trailing LF)."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
