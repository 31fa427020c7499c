"""Interval-style structure on pure simplicial complexes.

Builders for the connected-subset complex Δ_d(G) and the d-independence
complex Ind_d(G), labeled predicates (under closed, unit interval,
exchange conditions, chordal complex, closed graph), certificate
producing recognizers, forbidden-pattern scans, sortability of
independence faces, and exhaustive verification suites for the
theorems tying these together on small instances.
"""

from .errors import ConsistencyError, GuardError, InputError
from .graphs import (
    Graph,
    complete_graph,
    corona,
    corona_graphs,
    cycle_graph,
    empty_graph,
    enumerate_graphs,
    enumerate_trees,
    format_graph,
    parse_graph,
    path_graph,
    star_graph,
)
from .canonical import canonical_form, canonical_representatives
from .complexes import (
    FaceSet,
    PureComplex,
    delta_complex,
    format_complex,
    independence_face_sets,
    independence_faces,
    independence_facets,
    parse_complex,
)
from .predicates import (
    COMPLEX_PREDICATES,
    GRAPH_PREDICATES,
    IntervalSystem,
    is_chordal_complex,
    is_closed_graph,
    is_under_closed_def,
    is_under_closed_local,
    is_unit_interval,
    satisfies_conditional_exchange,
    satisfies_strict_exchange,
    satisfies_witnessed_exchange,
    union_is_interval,
    validate_interval_representation,
)
from .recognition import (
    GRAPH_CLASSES,
    STRONG_MODES,
    RecognitionResult,
    build_clique_interval_representation,
    find_closed_graph_labeling,
    find_conditional_exchange_labeling,
    find_strong_interval_representation,
    find_under_closed_labeling,
    find_unit_interval_labeling,
    recognize_graph_class,
    representation_sort_labeling,
)
from .forbidden import (
    PatternWitness,
    find_d_claw,
    find_d_paw,
    find_induced_cycle_geq,
    is_chordal_graph,
)
from .sortability import (
    independence_complex_sortable,
    is_sortable_complex,
    is_sortable_set,
    sort_pair,
)
from .harness import SUITE_IDS, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "GuardError",
    "InputError",
    "Graph",
    "complete_graph",
    "corona",
    "corona_graphs",
    "cycle_graph",
    "empty_graph",
    "enumerate_graphs",
    "enumerate_trees",
    "format_graph",
    "parse_graph",
    "path_graph",
    "star_graph",
    "canonical_form",
    "canonical_representatives",
    "FaceSet",
    "PureComplex",
    "delta_complex",
    "format_complex",
    "independence_face_sets",
    "independence_faces",
    "independence_facets",
    "parse_complex",
    "COMPLEX_PREDICATES",
    "GRAPH_PREDICATES",
    "IntervalSystem",
    "is_chordal_complex",
    "is_closed_graph",
    "is_under_closed_def",
    "is_under_closed_local",
    "is_unit_interval",
    "satisfies_conditional_exchange",
    "satisfies_strict_exchange",
    "satisfies_witnessed_exchange",
    "union_is_interval",
    "validate_interval_representation",
    "GRAPH_CLASSES",
    "STRONG_MODES",
    "RecognitionResult",
    "build_clique_interval_representation",
    "find_closed_graph_labeling",
    "find_conditional_exchange_labeling",
    "find_strong_interval_representation",
    "find_under_closed_labeling",
    "find_unit_interval_labeling",
    "recognize_graph_class",
    "representation_sort_labeling",
    "PatternWitness",
    "find_d_claw",
    "find_d_paw",
    "find_induced_cycle_geq",
    "is_chordal_graph",
    "independence_complex_sortable",
    "is_sortable_complex",
    "is_sortable_set",
    "sort_pair",
    "SUITE_IDS",
    "SuiteReport",
    "run_suite",
    "__version__",
]
