"""Bohr-type radii and inequality verification on the polydisk."""

from ._core import (
    ClosedEval,
    EvalContext,
    ExtremalFunction,
    FunctionalValue,
    RootCertificate,
    TruncatedSeries,
    VerificationReport,
    check_below,
    check_sharp,
    closed_eval,
    derivative_majorant_from,
    enumerate_degree,
    functional_value,
    functional_value_closed,
    known_tags,
    majorant_sum,
    multinomial,
    profile_coefficients,
    radius_in_r,
    refined_sum,
    refined_sum_diagonal,
    solve_radius,
    to_series,
)

__all__ = [
    "ClosedEval",
    "EvalContext",
    "ExtremalFunction",
    "FunctionalValue",
    "RootCertificate",
    "TruncatedSeries",
    "VerificationReport",
    "check_below",
    "check_sharp",
    "closed_eval",
    "derivative_majorant_from",
    "enumerate_degree",
    "functional_value",
    "functional_value_closed",
    "known_tags",
    "majorant_sum",
    "multinomial",
    "profile_coefficients",
    "radius_in_r",
    "refined_sum",
    "refined_sum_diagonal",
    "solve_radius",
    "to_series",
]
