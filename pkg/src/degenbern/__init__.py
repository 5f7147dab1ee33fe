"""degenbern: exact arithmetic for the λ-deformed Bernoulli numbers of
the second kind, their coefficient triangles, Stirling-type companions,
and mechanical verification of the identities connecting them.

Everything is computed over Q or Q[λ] with no floating point anywhere;
every cross-check is an exact equality of rationals, λ-polynomials, or
truncated (Laurent) series coefficients.
"""

__version__ = "0.1.0"

from .scalars import (
    DomainError,
    EvaluatedDomain,
    LAMBDA,
    LambdaPoly,
    Rational,
    SYMBOLIC,
    SymbolicDomain,
    domain_from_string,
    poly_eval,
    rational_from_string,
    rational_to_string,
    render_poly_latex,
    render_poly_text,
    scalar_from_json,
    scalar_to_json,
    scalar_to_latex,
    scalar_to_text,
)
from .series import (
    LaurentSeries,
    NonInvertibleConstantTerm,
    TruncatedSeries,
    binom_lambda_series,
    classical_log_over_t_series,
    classical_log_reciprocal,
    degenerate_exp_series,
    degenerate_log_over_t_series,
    degenerate_log_reciprocal,
    one_plus_t_power,
    one_series,
    polynomial_series,
    zero_series,
)
from .combinatorics import (
    StirlingTable,
    bell_partial,
    bell_scaling_check,
    binomial,
    compositions,
    degenerate_stirling2,
    falling_factorial,
    generalized_falling,
    multinomial,
    scaled_degenerate_stirling,
    stirling1_signed,
)
from .ode_coeffs import (
    CoeffTable,
    coeff_explicit_falling,
    coeff_explicit_stirling,
    coeff_limit_at_zero,
    coeff_triangle,
    coeff_unrolled_recurrence,
)
from .bernoulli import (
    BernoulliRow,
    EXPLICIT_FORMS,
    MULTINOMIAL_CAP,
    classical_row,
    classical_series_row,
    convolution_row,
    row_higher_order,
    row_via_explicit,
    row_via_multinomial,
    row_via_recurrence,
    row_via_series,
    value_via_explicit,
    value_via_multinomial,
)
from .verify import (
    HigherOrderContext,
    IdentityReport,
    verify_all,
    verify_classical_derivative,
    verify_convolution,
    verify_higher_order,
    verify_ode,
    verify_route_agreement_a,
    verify_route_agreement_b,
    verify_route_agreement_bell,
    verify_route_agreement_stirling,
    verify_singular,
    verify_stirling_limit,
)

__all__ = [
    "__version__",
    "DomainError",
    "EvaluatedDomain",
    "LAMBDA",
    "LambdaPoly",
    "Rational",
    "SYMBOLIC",
    "SymbolicDomain",
    "domain_from_string",
    "poly_eval",
    "rational_from_string",
    "rational_to_string",
    "render_poly_latex",
    "render_poly_text",
    "scalar_from_json",
    "scalar_to_json",
    "scalar_to_latex",
    "scalar_to_text",
    "LaurentSeries",
    "NonInvertibleConstantTerm",
    "TruncatedSeries",
    "binom_lambda_series",
    "classical_log_over_t_series",
    "classical_log_reciprocal",
    "degenerate_exp_series",
    "degenerate_log_over_t_series",
    "degenerate_log_reciprocal",
    "one_plus_t_power",
    "one_series",
    "polynomial_series",
    "zero_series",
    "StirlingTable",
    "bell_partial",
    "bell_scaling_check",
    "binomial",
    "compositions",
    "degenerate_stirling2",
    "falling_factorial",
    "generalized_falling",
    "multinomial",
    "scaled_degenerate_stirling",
    "stirling1_signed",
    "CoeffTable",
    "coeff_explicit_falling",
    "coeff_explicit_stirling",
    "coeff_limit_at_zero",
    "coeff_triangle",
    "coeff_unrolled_recurrence",
    "BernoulliRow",
    "EXPLICIT_FORMS",
    "MULTINOMIAL_CAP",
    "classical_row",
    "classical_series_row",
    "convolution_row",
    "row_higher_order",
    "row_via_explicit",
    "row_via_multinomial",
    "row_via_recurrence",
    "row_via_series",
    "value_via_explicit",
    "value_via_multinomial",
    "HigherOrderContext",
    "IdentityReport",
    "verify_all",
    "verify_classical_derivative",
    "verify_convolution",
    "verify_higher_order",
    "verify_ode",
    "verify_route_agreement_a",
    "verify_route_agreement_b",
    "verify_route_agreement_bell",
    "verify_route_agreement_stirling",
    "verify_singular",
    "verify_stirling_limit",
]
