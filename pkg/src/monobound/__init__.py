"""Guaranteed bounds on integrals of monotone functions over [0, 1].

For positive weights a_1..a_n summing to 1, with running totals S_i, and a
decreasing integrable g, the cumulative-weight sum

    T_n(g) = sum_i a_i * g(S_i)

never exceeds the integral of g over [0, 1].  The package computes the
sum, the matching over-estimate from left endpoints, the Abel (discrete
integration by parts) form, the gap and its mesh bound, the
change-of-variables identity behind the probabilistic reading, and the
majorization/Karamata comparison that shares the same cumulative-sum
philosophy.  Every quantity is cross-checked by at least two independent
routes.
"""

from .bounds import (
    BoundReport,
    abel_sum,
    abel_terms,
    bound_report,
    gap_bound,
    refinement_chain,
    riemann_sum_left,
    riemann_sum_right,
)
from .errors import (
    DomainViolation,
    EmptyInput,
    LengthMismatch,
    MonoboundError,
    NonMonotoneFunction,
    NonPositiveWeight,
    NotConvex,
    NotMajorized,
    NotNormalized,
    PointOutsideInterval,
    SumOutOfTolerance,
    ToleranceNotReached,
)
from .functions import (
    CONSTANT,
    DECREASING,
    INCREASING,
    NON_MONOTONE,
    MonotoneFunction,
    MonotonicityVerdict,
    closed_form_integral,
    constant,
    evaluate,
    exponential,
    linear,
    logarithmic,
    power_complement,
    probe_monotonicity,
    quadrature_integral,
    reciprocal,
    tabulated,
    trigonometric,
)
from .jsonio import format_float, render_json
from .majorization import (
    KaramataReport,
    MajorizationVerdict,
    RealVector,
    cumulative_majorization_bridge,
    generate_majorized_pair,
    is_majorized,
    karamata_check,
)
from .partitions import (
    CumulativePartition,
    RefinementPlan,
    WeightVector,
    bisect_all,
    cumulative,
    from_weights,
    partition_from_sequence,
    refine,
    uniform_weights,
    weights_of,
)
from .quadrature import QuadratureResult, adaptive_quadrature
from .transform import (
    CDF,
    Density,
    ExpectationBound,
    TransformReport,
    cdf_of,
    empirical_partition,
    expectation_upper_bound,
    pit_identity_check,
    polynomial_density,
    tabulated_density,
    triangular_density,
    uniform_density,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CDF",
    "CONSTANT",
    "CumulativePartition",
    "DECREASING",
    "Density",
    "DomainViolation",
    "EmptyInput",
    "ExpectationBound",
    "INCREASING",
    "KaramataReport",
    "LengthMismatch",
    "MajorizationVerdict",
    "MonoboundError",
    "MonotoneFunction",
    "MonotonicityVerdict",
    "NON_MONOTONE",
    "NonMonotoneFunction",
    "NonPositiveWeight",
    "NotConvex",
    "NotMajorized",
    "NotNormalized",
    "PointOutsideInterval",
    "QuadratureResult",
    "RealVector",
    "RefinementPlan",
    "SumOutOfTolerance",
    "ToleranceNotReached",
    "TransformReport",
    "WeightVector",
    "abel_sum",
    "abel_terms",
    "adaptive_quadrature",
    "bisect_all",
    "bound_report",
    "cdf_of",
    "closed_form_integral",
    "constant",
    "cumulative",
    "cumulative_majorization_bridge",
    "empirical_partition",
    "evaluate",
    "expectation_upper_bound",
    "exponential",
    "format_float",
    "from_weights",
    "gap_bound",
    "generate_majorized_pair",
    "is_majorized",
    "karamata_check",
    "linear",
    "logarithmic",
    "partition_from_sequence",
    "pit_identity_check",
    "polynomial_density",
    "power_complement",
    "probe_monotonicity",
    "quadrature_integral",
    "reciprocal",
    "refine",
    "refinement_chain",
    "render_json",
    "riemann_sum_left",
    "riemann_sum_right",
    "tabulated",
    "tabulated_density",
    "triangular_density",
    "trigonometric",
    "uniform_density",
    "uniform_weights",
    "weights_of",
]
