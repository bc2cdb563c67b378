"""GCDs over Q[t] and Q[x, y], and squarefree normal forms of plane curves.

Bivariate gcds treat a polynomial as an element of Q[x][y] and run a
primitive pseudo-remainder sequence, with x-contents handled by univariate
Euclid.
"""

from functools import reduce
from fractions import Fraction
from math import gcd, lcm

from ..errors import ValidationError
from .poly import BiPoly, UniPoly

__all__ = [
    "bi_gcd",
    "primitive_normal_form",
    "squarefree_primitive",
    "uni_gcd",
]


def uni_gcd(a, b):
    """Monic gcd of two univariate polynomials; gcd(0, 0) = 0."""
    if a.var != b.var:
        raise ValidationError(f"variable mismatch: {a.var!r} vs {b.var!r}")
    while b:
        a, b = b, a % b
    return a.monic()


def primitive_normal_form(f):
    """Scale ``f`` to integer coefficients with content 1 and positive
    graded-lex leading coefficient.  Zero stays zero."""
    if not f:
        return f
    coeffs = f.term_map.values()
    den = lcm(*(c.denominator for c in coeffs))
    num = gcd(*(c.numerator * (den // c.denominator) for c in coeffs))
    scale = Fraction(den, num)
    if f.lc < 0:
        scale = -scale
    return f * scale


# -- Q[x][y] helpers: a polynomial is a list of UniPoly in x, index = y power --

def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _content(p):
    return reduce(uni_gcd, p[1:], p[0].monic()) if p else UniPoly((), "x")


def _divide_coeffs(p, c):
    return [a.exquo(c) for a in p]


def _primitive(p):
    c = _content(p)
    return list(p) if c == 1 else _divide_coeffs(p, c)


def _prem(a, b):
    """Pseudo-remainder of ``a`` by ``b`` in Q[x][y] (up to a unit power of lc(b))."""
    r = list(a)
    db = len(b) - 1
    lcb = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lcr = r[-1]
        new = [lcb * c for c in r]
        for i, cb in enumerate(b):
            new[i + shift] = new[i + shift] - lcr * cb
        r = _trim(new)
    return r


def _y_gcd_primitive(a, b):
    """Gcd of two primitive elements of Q[x][y] (primitive PRS)."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return a


def bi_gcd(a, b):
    """Gcd in Q[x, y], normalized by :func:`primitive_normal_form`."""
    if not a:
        return primitive_normal_form(b)
    if not b:
        return primitive_normal_form(a)
    pa, pb = a.coeffs_in_y(), b.coeffs_in_y()
    ca, cb = _content(pa), _content(pb)
    cont = uni_gcd(ca, cb)
    g = _y_gcd_primitive(_divide_coeffs(pa, ca), _divide_coeffs(pb, cb))
    if len(g) <= 1:
        g = [UniPoly.constant(1, "x")]
    result = BiPoly.from_coeffs_in_y(g) * BiPoly.from_uni(cont, "x")
    return primitive_normal_form(result)


def squarefree_primitive(f):
    """Canonical representative of the vanishing locus of ``f``.

    Repeated factors and scalar content are removed; the result is
    normalized by :func:`primitive_normal_form`.
    """
    if not f:
        raise ValidationError("the zero polynomial has no squarefree part")
    p = f.coeffs_in_y()
    c = _content(p)
    g = _divide_coeffs(p, c)
    c_sqf = c.exquo(uni_gcd(c, c.derivative()))
    g_poly = BiPoly.from_coeffs_in_y(g)
    if len(g) > 1:
        # every factor of a primitive g has positive y-degree, so d/dy
        # lowers each multiplicity by exactly one
        g_poly = g_poly.exquo(bi_gcd(g_poly, g_poly.diff("y")))
    return primitive_normal_form(g_poly * BiPoly.from_uni(c_sqf, "x"))
