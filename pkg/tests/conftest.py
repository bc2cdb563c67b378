from fractions import Fraction

import pytest
import sympy as sp

from specdual.algebra import BiPoly, UniPoly

X, Y = sp.symbols("x y")

ACCEPTANCE_RESULTS = []


def to_sympy(f, var=None):
    """BiPoly/UniPoly -> sympy expression (independent oracle side)."""
    if isinstance(f, UniPoly):
        t = sp.Symbol(var or f.var)
        return sum((sp.Rational(c.numerator, c.denominator) * t ** k
                    for k, c in enumerate(f.coeffs)), sp.Integer(0))
    return sum((sp.Rational(c.numerator, c.denominator) * X ** ex * Y ** ey
                for (ex, ey), c in f.term_map.items()), sp.Integer(0))


def from_sympy(expr):
    poly = sp.Poly(sp.expand(expr), X, Y)
    return BiPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)


@pytest.fixture
def x():
    return BiPoly.x()


@pytest.fixture
def y():
    return BiPoly.y()
