"""Derivative values, Maclaurin coefficients and conjecture coefficients of v^j/(1-e^-v)."""

from .analysis import LogConvexityReport, ScanReport, log_convexity_report, scan_nonnegativity
from .exact import (
    G_ROUTES,
    TABLE_ROUTES,
    CoefficientTable,
    F1_derivative_at_zero,
    G_value,
    G_value_bernoulli,
    G_value_closed_form,
    G_value_determinantal,
    G_value_recursive,
    G_value_series,
    G_value_stirling,
    build_table,
    closed_form_coefficients,
    closed_form_leading_sum,
    f_derivative_at_zero,
    f_maclaurin_coeff,
    f_maclaurin_coeff_bernoulli,
    f_maclaurin_coeff_stirling,
    frak_C_coeff,
    frak_C_coeff_bernoulli,
    frak_C_coeff_series,
    frak_C_coeff_stirling,
    gamma_coeff,
    gamma_coeff_bernoulli,
    gamma_coeff_series,
    gamma_coeff_stirling,
)
from .numeric import (
    ALPHA,
    BETA,
    EvalPoint,
    G_eval,
    G_eval_grid,
    G_eval_numeric,
    f_eval_grid,
    f_eval_numeric,
    f_lower_bound_series,
)
