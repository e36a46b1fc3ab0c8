"""critickit: exact verification of graph-coloring criticality.

Decides, with machine-checkable witnesses, whether small graphs are
critical, vertex-critical, strongly critical, strongly chromatic-choosable
or robustly critical, and computes chromatic, list-chromatic and DP-chromatic
numbers plus coloring and transversal counts.
"""

from .coloring import (
    ColoringVerdict,
    Polynomial,
    chromatic_number,
    chromatic_polynomial,
    classify_criticality,
    count_proper_colorings,
    find_coloring,
    is_k_colorable,
)
from .covers import (
    Cover,
    PdpResult,
    RobustVerdict,
    canonical_labeling,
    complete_to_full,
    count_transversals,
    cover_from_assignment,
    cover_violation,
    dp_chromatic_number,
    enumerate_full_covers,
    find_transversal,
    is_bad,
    is_full,
    make_canonical_cover,
    make_cover,
    make_near_canonical,
    normalize_cover,
    pdp_value,
    relabel_cover,
    robust_criticality_verdict,
    validate_cover,
)
from .errors import (
    AssignmentError,
    BudgetExceeded,
    CoverError,
    CritickitError,
    DisconnectedError,
    Graph6Error,
    GraphError,
)
from .graphs import (
    EkabParams,
    Graph,
    build_graph,
    clique,
    complete_bipartite,
    cycle,
    encode_graph6,
    generate_ekab,
    generate_named,
    join,
    parse_edgelist,
    parse_graph6,
    format_edgelist,
    spanning_tree,
)
from .lemmas import (
    LemmaReport,
    check_excess_lemma,
    check_full_extension_lemma,
    check_induction_lemma,
    check_join_preserves,
    check_pair_reduction,
)
from .limits import DEFAULT_NODE_BUDGET, SearchLimits
from .listcoloring import (
    BlockSystem,
    ListAssignment,
    StrongVerdict,
    assignment_from_blocks,
    block_systems,
    find_bad_nonconstant_assignment,
    find_list_coloring,
    is_constant_assignment,
    is_list_colorable,
    list_chromatic_number,
    strong_criticality_verdict,
)

__version__ = "0.1.0"
