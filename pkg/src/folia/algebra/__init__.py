"""Exact arithmetic foundation: polynomials, series, branches, intersection numbers."""

from fractions import Fraction as Rat

from .branch import Branch, factor_at_node, solve_smooth_branch, tangent_slopes
from .intersection import (
    INFINITY,
    intersection_multiplicity_oracle,
    local_intersection_multiplicity,
    truncated_quotient_dimension,
)
from .poly import BiPoly, W, Z, poly_gcd
from .series import DEFAULT_TRUNCATION_CAP, TruncSeries, compose, series_residue

__all__ = [
    "Rat",
    "BiPoly",
    "Z",
    "W",
    "poly_gcd",
    "TruncSeries",
    "compose",
    "series_residue",
    "DEFAULT_TRUNCATION_CAP",
    "Branch",
    "solve_smooth_branch",
    "factor_at_node",
    "tangent_slopes",
    "INFINITY",
    "local_intersection_multiplicity",
    "intersection_multiplicity_oracle",
    "truncated_quotient_dimension",
]
