"""Toolkit for balanced bipartite digraphs: degree conditions over dominating
pairs, connectivity and matching certificates, exact cycle search, example
generators, and an empirical verification harness for the hamiltonicity
results those conditions support."""

from .conditions import (
    CERT_CUT_VERTEX,
    CERT_NOT_STRONG,
    CERT_STRONG,
    CERT_TWO_CONNECTED,
    ConditionReport,
    ConnectivityCertificate,
    DominatingPair,
    check_condition_Bk,
    check_degree_sum,
    check_wang,
    dominating_pairs,
    is_strong,
    max_Bk,
    ug_two_connected,
)
from .core import (
    Arc,
    BipartiteDigraph,
    DegreeTriple,
    VertexId,
    arc_positions,
    degree,
    graph_from_bits,
    neighbor_set,
    parse_graph,
    serialize_graph,
    vertex,
)
from .cycles import (
    Bypass,
    Cycle,
    SearchBudget,
    cycle_of_length,
    even_spectrum,
    find_bypass,
    has_bypass,
    hamiltonian_cycle,
    iter_cycles,
    longest_cycle,
    non_hamiltonian_long_cycle,
    validate_cycle,
)
from .errors import (
    ContractViolationError,
    GraphParseError,
    ResourceLimitError,
    SamplingInfeasibleError,
)
from .exemplars import (
    FAMILY_NAMES,
    FamilySpec,
    IsoResult,
    canonical_form,
    complete_bipartite,
    d6,
    d8,
    directed_cycle,
    ex4,
    ex5,
    generate,
    h6,
    hprime6,
    is_directed_cycle,
    is_isomorphic,
    relabel,
    symmetric_cycle,
    symmetric_path,
)
from .harness import (
    ExhaustivePopulation,
    ExplicitPopulation,
    ReportDocument,
    SampleConfig,
    SampledPopulation,
    THEOREMS,
    TheoremVerdict,
    dump_json,
    enumerate_all,
    export_dot,
    run_check,
    sample_random,
    verify_theorem,
)
from .matching import (
    CycleFactor,
    Matching,
    cycle_factor,
    hall_violator,
    perfect_matching,
)

__version__ = "0.1.0"
