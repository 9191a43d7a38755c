"""Soft-set topology with per-point scope functions.

A space pairs a soft topology over (universe, parameters) with a scope
function assigning each point an open soft set containing it everywhere.
The scope drives closure/interior operators, generalized openness classes,
continuity of point/parameter mappings, separation axioms, and rough
lower/upper approximation of soft targets.
"""

from .errors import (
    CapExceeded,
    ContextMismatch,
    DocumentError,
    ExtraParameter,
    InternalNonMonotone,
    InvalidPartition,
    MembershipViolation,
    MissingParameter,
    NotOpen,
    NotSingletonE,
    PreconditionUnmet,
    ScopeViolations,
    SizeGuard,
    SoftAuraError,
    SpaceMismatch,
    TopologyViolation,
    UnknownParameter,
    UnknownPoint,
)
from .softset import (
    DEFAULT_UNIVERSE_LIMIT,
    Context,
    SoftSet,
    big_intersect,
    big_union,
    iter_all_soft_sets,
    make_soft_set,
)
from .space import (
    DEFAULT_CAP,
    DISCRETE,
    EXPLICIT,
    GENERATED,
    INDISCRETE,
    ScopeFunction,
    SoftAuraSpace,
    SoftTopology,
    discrete_topology,
    generate_topology,
    indiscrete_topology,
    make_space,
    trivial_scope,
    validate_scope,
    validate_topology,
)
from .operators import (
    CECH,
    KURATOWSKI,
    KuratowskiResult,
    aura_closure,
    aura_interior,
    enumerate_aura_topology,
    is_aura_closed,
    is_aura_open,
    kuratowski_closure,
    per_parameter_alexandrov,
    singleton_e_inclusion_check,
)
from .genopen import (
    AlphaMeetWitness,
    OpennessProfile,
    UNION_CLOSED_CLASSES,
    check_union_closure,
    classify,
    search_alpha_intersection_failure,
)
from .mapping import (
    ContinuityProfile,
    SoftMapping,
    TARGET_AMBIENT,
    TARGET_AURA,
    TARGET_KURATOWSKI,
    compose,
    continuity_profile,
    identity_mapping,
    inverse_image,
    verify_closure_characterization,
    verify_decomposition,
)
from .separation import (
    PairWitness,
    RegularityWitness,
    SeparationReport,
    SingletonClosureCheck,
    separation_report,
    t1_singleton_closure,
    t1_via_singleton_scopes,
)
from .rough import (
    Accuracy,
    ApproximationReport,
    PawlakPartition,
    accuracy,
    approximation_report,
    boundary,
    lower_approx,
    pawlak_equivalence_check,
    pawlak_scope,
    upper_approx,
)
from .harness import (
    LAWS,
    MappingScanResult,
    REPORT_ROWS,
    SpaceFamilySpec,
    STRICTNESS_EDGES,
    SuiteResult,
    Witness,
    decomposition_mapping_scan,
    enumerate_scope_functions,
    find_strictness_witnesses,
    iter_family_spaces,
    oracle_closure,
    oracle_interior,
    replay_space,
    replay_witness,
    run_law_suite,
    witness_from_json,
)
from .documents import (
    DecodedSpace,
    canonicalize_space_doc,
    decode_mapping,
    decode_space,
    encode_space,
    load_mapping,
    load_space,
    resolve_target_set,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
