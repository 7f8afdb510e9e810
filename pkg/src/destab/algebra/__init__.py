"""Exact commutative algebra kernels: echelon forms, Groebner bases, Hilbert functions."""

from .groebner import groebner_basis, normal_form
from .ideal import (HomogeneousIdeal, coordinate_ideal, hilbert_function, hilbert_polynomial,
                    initial_ideal, is_empty_projective, reembed, standard_monomials,
                    standard_stats)
from .linalg import reduced_echelon
from .polynomial import MonomialOrder, Polynomial, monomials_of_degree, parse_polynomial
from .univariate import UniPoly, interpolate

__all__ = [
    "HomogeneousIdeal", "MonomialOrder", "Polynomial", "UniPoly",
    "coordinate_ideal", "groebner_basis", "hilbert_function", "hilbert_polynomial",
    "initial_ideal", "interpolate", "is_empty_projective", "monomials_of_degree",
    "normal_form", "parse_polynomial", "reduced_echelon", "reembed",
    "standard_monomials", "standard_stats",
]
