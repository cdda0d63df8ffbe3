"""Hoffman-graph machinery and exact feasibility tools for distance-regular
graphs with classical parameters."""

from .errors import (
    BoundViolation,
    CliqueLimitExceeded,
    CliqueTooSmall,
    ConvergenceFailure,
    HoffmanError,
    IndexOutOfFamily,
    IndexOutOfRange,
    InvalidSubset,
    NegativeIntersectionNumber,
    NotEquitable,
    OrderingViolation,
    SearchBudgetExhausted,
    SizeLimit,
    VerificationError,
)
from .graphs import (
    CliqueSet,
    Graph,
    complete_graph,
    cycle_graph,
    graph_from_json,
    graph_to_json,
    load_graph,
    max_independent_set_in_neighborhood,
    maximal_cliques,
    maximum_independent_set,
    mu_parameter,
    parse_graph6,
)
from .exact import (
    Partition,
    RationalMatrix,
    det_exact,
    eigenvalues_float,
    is_psd_exact,
    lambda_min_float,
    psd_witness,
    quadratic_form,
    quotient_eigenvalues_float,
    quotient_matrix,
)
from .hgraphs import (
    CatalogEntry,
    HoffmanGraph,
    SpecialMatrix,
    catalog,
    clique_with_two_fats,
    decompose,
    expand,
    hoffman_at_least,
    hoffman_isomorphic,
    induced_by_slim,
    is_t_fat,
    lambda_min_hoffman,
    m_matrix,
    pendant_slim_pair,
    slim_with_fats,
    special_matrix,
)
from .forbidden import (
    ForbiddenHit,
    PROP_CAL_PAIRS,
    adjacency_rational,
    certify_lambda_min_below,
    find_min_p_below,
    graph_lambda_min_float,
    graph_quadratic_form,
    graph_quotient_matrix,
    permutation_equivalent,
    prop215,
    scan_M_t,
    verify_proposition_cal,
)
from .structure import (
    AssociatedGraph,
    CliqueExtraction,
    Thresholds,
    associated_hoffman,
    bose_laskar,
    corep_degree_bound,
    find_line_structure,
    hat_dichotomy,
    lemma9_vertex,
    n1_threshold,
    n2_threshold,
    theorem_intro2_check,
    thresholds,
    verify_clique_cover,
    verify_representation,
)
from .drg import (
    BetaBounds,
    ClassicalParams,
    IntersectionArray,
    LocalGraphParams,
    check_ie1,
    delsarte_bound,
    eigenvalues,
    feasibility_scan,
    gaussian,
    intersection_array,
    local_graph_params,
    p66_leading_constant,
    p_number,
    theorem_beta_bounds,
)

__version__ = "0.1.0"
