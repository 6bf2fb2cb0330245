"""Economy-wide substitution analysis for a three-factor, two-good
competitive economy: share validation, Allen-elasticity aggregation,
subregion classification of the normalized substitution vector, and
output/price sign patterns cross-checked against a dense solver."""

from .errors import (
    AsymptotePole,
    ClosedFormMismatch,
    ConsistencyError,
    DegenerateT,
    Ews32Error,
    GenerationExhausted,
    InconsistentLevels,
    Infeasible,
    InvalidAes,
    NonPositiveLevels,
    NonStochasticColumns,
    OnLine,
    OutOfRangeShare,
    ParseError,
    RankingViolation,
    SingularSystem,
    UnmatchedSignature,
    ValidationError,
)
from .figure import render_figure
from .geometry import (
    AnchorSet,
    LineCoeffs,
    OrderingReport,
    Subregion,
    anchor_points,
    boundary_value,
    check_feasible,
    classify_subregion,
    line_coefficients,
    verify_anchor_ordering,
)
from .scenario import (
    Report,
    Scenario,
    format_report,
    load_scenario,
    run_report,
    scenario_from_mapping,
)
from .shares import (
    CAPITAL,
    FACTOR_NAMES,
    LABOR,
    LAND,
    RankingReport,
    ShareTable,
    build_share_table,
    check_intensity_ranking,
    require_ranking,
)
from .statics import (
    CofactorReport,
    DeltaReport,
    ResponseVector,
    ShockVector,
    SignPattern,
    SystemMatrix,
    assemble_system,
    cofactors,
    determinant_delta,
    rybczynski_matrix,
    sign_pattern_from_values,
    sign_pattern_lookup,
    solve_responses,
    stolper_samuelson_matrix,
    strong_rybczynski,
)
from .substitution import (
    AesTensor,
    EpsilonTensor,
    EwsMatrix,
    EwsRatioVector,
    ValidityReport,
    aggregate_substitution,
    cobb_douglas_aes,
    epsilon_from_aes,
    ews_from_epsilon,
    ews_from_stu,
    ews_ratio_vector,
    require_valid_aes,
    sample_valid_aes,
    validate_aes,
)
from .sweep import format_csv, parse_grid, sweep

__version__ = "0.1.0"

__all__ = [
    "AesTensor",
    "AnchorSet",
    "AsymptotePole",
    "CAPITAL",
    "ClosedFormMismatch",
    "CofactorReport",
    "ConsistencyError",
    "DegenerateT",
    "DeltaReport",
    "EpsilonTensor",
    "Ews32Error",
    "EwsMatrix",
    "EwsRatioVector",
    "FACTOR_NAMES",
    "GenerationExhausted",
    "InconsistentLevels",
    "Infeasible",
    "InvalidAes",
    "LABOR",
    "LAND",
    "LineCoeffs",
    "NonPositiveLevels",
    "NonStochasticColumns",
    "OnLine",
    "OrderingReport",
    "OutOfRangeShare",
    "ParseError",
    "RankingReport",
    "RankingViolation",
    "Report",
    "ResponseVector",
    "Scenario",
    "ShareTable",
    "ShockVector",
    "SignPattern",
    "SingularSystem",
    "Subregion",
    "SystemMatrix",
    "UnmatchedSignature",
    "ValidationError",
    "ValidityReport",
    "aggregate_substitution",
    "anchor_points",
    "assemble_system",
    "boundary_value",
    "build_share_table",
    "check_feasible",
    "check_intensity_ranking",
    "classify_subregion",
    "cobb_douglas_aes",
    "cofactors",
    "determinant_delta",
    "epsilon_from_aes",
    "ews_from_epsilon",
    "ews_from_stu",
    "ews_ratio_vector",
    "format_csv",
    "format_report",
    "line_coefficients",
    "load_scenario",
    "parse_grid",
    "render_figure",
    "require_ranking",
    "require_valid_aes",
    "rybczynski_matrix",
    "run_report",
    "sample_valid_aes",
    "scenario_from_mapping",
    "sign_pattern_from_values",
    "sign_pattern_lookup",
    "solve_responses",
    "stolper_samuelson_matrix",
    "strong_rybczynski",
    "sweep",
    "validate_aes",
    "verify_anchor_ordering",
]
