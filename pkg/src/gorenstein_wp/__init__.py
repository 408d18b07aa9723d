"""Exact Weierstrass-point computations on Gorenstein curves."""

from .enumerative import (
    ChernModel,
    DegreeAssignment,
    DivisorClass,
    SwClassBreakdown,
    ad_node,
    evaluate_class,
    harris_mumford_degrees,
    hyperelliptic_class_g3,
    hyperflex_class_g3,
    hyperflex_count,
    jet_c1,
    jet_c2,
    multiplicity_m,
    pencil_nodes,
    quartic_pencil_degrees,
    sw_class,
)
from .errors import (
    InconsistentModel,
    LinearDependenceError,
    NonGorenstein,
    ParseError,
    PrecisionExhausted,
)
from .localring import (
    BranchModel,
    NumericalSemigroup,
    SingularPointModel,
    build_singular_point,
    gorenstein_test_monomial,
    semigroup_from_generators,
)
from .series import (
    Known,
    TruncatedSeries,
    Undetermined,
    parse_series,
    series_derivative,
    series_det,
    series_mul,
    series_order,
)
from .wronskian import (
    LocalLinearSystem,
    VanishingProfile,
    WeightReport,
    brill_segre,
    cusp_weight,
    point_weight,
    sw_pair_count,
    vanishing_sequence,
    wl_derivative_tower,
    wl_wronskian,
)

__version__ = "0.1.0"

__all__ = [
    "ChernModel",
    "DegreeAssignment",
    "DivisorClass",
    "SwClassBreakdown",
    "ad_node",
    "evaluate_class",
    "harris_mumford_degrees",
    "hyperelliptic_class_g3",
    "hyperflex_class_g3",
    "hyperflex_count",
    "jet_c1",
    "jet_c2",
    "multiplicity_m",
    "pencil_nodes",
    "quartic_pencil_degrees",
    "sw_class",
    "InconsistentModel",
    "LinearDependenceError",
    "NonGorenstein",
    "ParseError",
    "PrecisionExhausted",
    "BranchModel",
    "NumericalSemigroup",
    "SingularPointModel",
    "build_singular_point",
    "gorenstein_test_monomial",
    "semigroup_from_generators",
    "Known",
    "TruncatedSeries",
    "Undetermined",
    "parse_series",
    "series_derivative",
    "series_det",
    "series_mul",
    "series_order",
    "LocalLinearSystem",
    "VanishingProfile",
    "WeightReport",
    "brill_segre",
    "cusp_weight",
    "point_weight",
    "sw_pair_count",
    "vanishing_sequence",
    "wl_derivative_tower",
    "wl_wronskian",
]
