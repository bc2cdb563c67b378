"""Sylvester resultants of polynomials in an eliminated variable."""

from ..errors import ValidationError
from .matrix import PolyMatrix, det_bareiss

__all__ = ["sylvester_matrix", "sylvester_resultant"]


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def sylvester_matrix(f, g):
    """Sylvester matrix of ``f`` and ``g``.

    ``f`` and ``g`` are coefficient sequences, lowest power of the
    eliminated variable first; coefficients are ring elements (BiPoly).
    """
    f, g = _strip(f), _strip(g)
    if not f or not g:
        raise ValidationError("resultant of a zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    if m + n == 0:
        raise ValidationError("resultant of two constants is not defined")
    zero = f[0] * 0
    size = m + n
    rows = []
    for k in range(n):
        row = [zero] * size
        for i, c in enumerate(reversed(f)):
            row[k + i] = c
        rows.append(row)
    for k in range(m):
        row = [zero] * size
        for i, c in enumerate(reversed(g)):
            row[k + i] = c
        rows.append(row)
    return PolyMatrix(rows)


def sylvester_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix."""
    return det_bareiss(sylvester_matrix(f, g))
