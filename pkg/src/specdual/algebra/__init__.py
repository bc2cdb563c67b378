"""Exact polynomial arithmetic over Q."""

from .gcd import bi_gcd, primitive_normal_form, squarefree_primitive, uni_gcd
from .matrix import PolyMatrix, det_bareiss, det_cofactor, det_leibniz, det_poly
from .poly import NEG_INF, BiPoly, LaurentPoly, UniPoly, grlex_key, rational
from .resultant import sylvester_matrix, sylvester_resultant


def swap_xy(f):
    """f(x, y) -> f(y, x)."""
    return f.swap()


def fourier_xy(f):
    """f(x, y) -> f(-y, x); has order 4."""
    return f.fourier()


__all__ = [
    "NEG_INF",
    "BiPoly",
    "LaurentPoly",
    "PolyMatrix",
    "UniPoly",
    "bi_gcd",
    "det_bareiss",
    "det_cofactor",
    "det_leibniz",
    "det_poly",
    "fourier_xy",
    "grlex_key",
    "primitive_normal_form",
    "rational",
    "squarefree_primitive",
    "swap_xy",
    "sylvester_matrix",
    "sylvester_resultant",
    "uni_gcd",
]
