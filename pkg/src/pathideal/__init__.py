"""Powers of path ideals of path graphs: exact invariants plus a brute-force
homological oracle and a sweep harness that confronts the two.
"""

from ._version import __version__
from .errors import (
    AmbientMismatchError,
    ColonFormMismatchError,
    ExponentOverflowError,
    PathIdealError,
    SizeCapExceededError,
)
from .monomials import (
    EXPONENT_CAP,
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    format_monomial,
    generated_by_variables,
    ideal_power,
    ideal_sum,
    minimalize,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    mono_pow,
    mono_quotient,
    parse_monomial,
    unit,
    variable,
)
from .path_ideals import (
    Composition,
    PathIdealSpec,
    composition_count,
    composition_to_monomial,
    compositions_desc,
    line_graph_generators,
    path_ideal,
    power_generators,
)
from .oracle import (
    DEFAULT_LATTICE_CAP,
    GF2,
    BettiTable,
    FieldSpec,
    SimplicialComplexFaces,
    betti_table,
    has_linear_resolution,
    lcm_lattice,
    projective_dimension_of_quotient,
    reduced_homology_dims,
    regularity_of_quotient,
    upper_koszul_complex,
)
from .linearity import (
    QuasiLinearBreak,
    QuasiLinearResult,
    QuotientCertificate,
    QuotientFailure,
    closed_form_colon,
    linear_quotients_check,
    quasi_linear_check,
    quasi_linear_witness,
    sort_for_linear_quotients,
)
from .formulas import (
    betti_closed_form,
    gamma,
    gamma_shift_identity,
    gamma_superadditive,
    linear_resolution_predicate,
    pd_closed_form,
    reg_linear_case,
    reg_power,
    reg_power_augmented,
    s_k_closed_form,
)
from .cache import BettiCache, betti_cache_key, cached_betti_table
from .verify import (
    Row,
    SweepConfig,
    VerificationReport,
    emit_table,
    run_sweep,
    sweep_cells,
)

__all__ = [
    "__version__",
    "PathIdealError",
    "AmbientMismatchError",
    "ExponentOverflowError",
    "SizeCapExceededError",
    "ColonFormMismatchError",
    "EXPONENT_CAP",
    "Monomial",
    "MonomialIdeal",
    "variable",
    "unit",
    "parse_monomial",
    "format_monomial",
    "mono_divides",
    "mono_gcd",
    "mono_lcm",
    "mono_mul",
    "mono_pow",
    "mono_quotient",
    "minimalize",
    "colon_by_monomial",
    "ideal_sum",
    "ideal_power",
    "generated_by_variables",
    "PathIdealSpec",
    "Composition",
    "line_graph_generators",
    "path_ideal",
    "composition_to_monomial",
    "compositions_desc",
    "power_generators",
    "composition_count",
    "DEFAULT_LATTICE_CAP",
    "FieldSpec",
    "GF2",
    "SimplicialComplexFaces",
    "BettiTable",
    "lcm_lattice",
    "upper_koszul_complex",
    "reduced_homology_dims",
    "betti_table",
    "regularity_of_quotient",
    "projective_dimension_of_quotient",
    "has_linear_resolution",
    "QuotientCertificate",
    "QuotientFailure",
    "QuasiLinearResult",
    "QuasiLinearBreak",
    "sort_for_linear_quotients",
    "closed_form_colon",
    "linear_quotients_check",
    "quasi_linear_check",
    "quasi_linear_witness",
    "gamma",
    "reg_power",
    "reg_linear_case",
    "betti_closed_form",
    "pd_closed_form",
    "s_k_closed_form",
    "linear_resolution_predicate",
    "gamma_shift_identity",
    "gamma_superadditive",
    "reg_power_augmented",
    "BettiCache",
    "betti_cache_key",
    "cached_betti_table",
    "SweepConfig",
    "Row",
    "VerificationReport",
    "sweep_cells",
    "run_sweep",
    "emit_table",
]
