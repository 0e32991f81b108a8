"""Exact graded polynomial engine: arithmetic, Groebner bases, quotients."""

from .groebner import (
    ORDER,
    GroebnerBasis,
    QuotientRing,
    RingElement,
    buchberger,
    is_groebner,
    normal_form,
    quotient_monomial_basis,
)
from .kernels import BACKEND
from .poly import Poly, PolyRing, poly_sum
from .symmetric import (
    complete_homogeneous,
    elementary_symmetric,
    power_sum,
    symmetric_in_squares,
)

__all__ = [
    "BACKEND",
    "ORDER",
    "GroebnerBasis",
    "Poly",
    "PolyRing",
    "QuotientRing",
    "RingElement",
    "buchberger",
    "complete_homogeneous",
    "elementary_symmetric",
    "is_groebner",
    "normal_form",
    "poly_sum",
    "power_sum",
    "quotient_monomial_basis",
    "symmetric_in_squares",
]
