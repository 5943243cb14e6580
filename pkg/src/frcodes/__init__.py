"""Fractional repetition codes: constructions, file sizes, and minimum-distance bounds."""

from .errors import *  # noqa: F401,F403
from .incidence import (
    FrCode,
    IncidenceStructure,
    disjoint_union,
    dual,
    fr_code,
    from_json,
    has_repeated_blocks,
    load_json,
    make_structure,
    relabel_contiguous,
    to_json,
    validate_fr,
)
from .graphs import (
    ACYCLIC,
    Graph,
    circulant_graph,
    complete_graph,
    cycle_graph,
    girth,
    graph_to_fr,
    make_graph,
    petersen_graph,
    projective_plane_incidence_graph,
    turan_graph,
)
from .designs import (
    LatinSquare,
    ResolvableDesign,
    affine_design,
    affine_fr_code,
    are_orthogonal,
    is_maximal_arc,
    is_resolvable,
    is_steiner_system,
    load_latin_squares,
    maximal_arc_search,
    mols_design,
    mols_fr_code,
    mols_prime,
    steiner_triple_system,
)
from .filesize import (
    DEFAULT_BUDGET,
    FileSizeProfile,
    dual_indicator_bound,
    file_size_from_dual,
    file_size_profile,
    phi_bound,
    psi_bound,
    supported_file_size,
)
from .distance import (
    BoundReport,
    Interval,
    affine_k0,
    attains_locality_bound,
    attains_singleton,
    bound_report,
    dual_graph_optimal_cases,
    improved_bound,
    local_structure_bound,
    locality_bound,
    min_distance,
    repair_locality,
    singleton_bound,
    singleton_range_affine,
    singleton_range_mols,
    singleton_range_regular,
    singleton_range_regular_beyond,
    singleton_range_steiner,
    singleton_range_turan,
    table3_predicate,
)

__version__ = "0.1.0"
