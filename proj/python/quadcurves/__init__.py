"""Exact computations for space curves on quadrics in P^3."""

from ._quadcurves import (
    MathError,
    ParseError,
    certify_complex,
    classify,
    classify_ideal,
    construct,
    groebner_basis,
    hilbert,
    ideals_equal,
    intersect,
    normalize,
    quadric_rank,
    rao_dims,
)

__all__ = [
    "MathError",
    "ParseError",
    "certify_complex",
    "classify",
    "classify_ideal",
    "construct",
    "groebner_basis",
    "hilbert",
    "ideals_equal",
    "intersect",
    "normalize",
    "quadric_rank",
    "rao_dims",
]
