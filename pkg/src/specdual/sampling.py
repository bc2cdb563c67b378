"""Seeded random instances for the randomized duality suites.

Every case gets its own ``random.Random`` derived from (master seed, suite
name, case index), so results do not depend on evaluation order.
"""

import random
from fractions import Fraction

from .algebra.poly import LaurentPoly, UniPoly
from .weyl import WeylOp

__all__ = [
    "case_rng",
    "random_beh_params",
    "random_laurent_multiplier",
    "random_laurent_pair",
    "random_nonzero_rational",
    "random_poly_mult_pair",
    "random_rational",
    "random_uni",
    "random_weyl_op",
    "random_weyl_pair",
]


def case_rng(seed, suite, index):
    return random.Random(f"{seed}/{suite}/{index}")


def random_rational(rng, bound=5):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_nonzero_rational(rng, bound=5):
    num = rng.choice([k for k in range(-bound, bound + 1) if k])
    den = rng.choice([k for k in range(-bound, bound + 1) if k])
    return Fraction(num, den)


def random_uni(rng, degree, var, bound=5, sparsity=0.0):
    coeffs = [Fraction(0) if rng.random() < sparsity else random_rational(rng, bound)
              for _ in range(degree + 1)]
    return UniPoly(coeffs, var)


def random_weyl_op(rng, order, coeff_degree=2, bound=5, constant_leading=True):
    """Operator of the given D-order; the leading coefficient is a nonzero constant."""
    coeffs = [random_uni(rng, rng.randint(0, coeff_degree), "s", bound, sparsity=0.3)
              for _ in range(order)]
    if constant_leading:
        coeffs.append(UniPoly.constant(random_nonzero_rational(rng, bound), "s"))
    else:
        lead = random_uni(rng, coeff_degree, "s", bound)
        coeffs.append(lead + UniPoly.monomial(random_nonzero_rational(rng, bound), coeff_degree, "s"))
    return WeylOp(coeffs)


def random_weyl_pair(rng, max_order=4, coeff_degree=2):
    p = random_weyl_op(rng, rng.randint(1, max_order), coeff_degree)
    q = random_weyl_op(rng, rng.randint(1, max_order), coeff_degree)
    return p, q


def random_beh_params(rng, max_d=3, bound=3):
    """(gamma, a, b) with gamma * a_d2 * b_d1 != 0."""
    d1, d2 = rng.randint(1, max_d), rng.randint(1, max_d)
    nz = [k for k in range(-bound, bound + 1) if k]
    gamma = Fraction(rng.choice(nz))
    a = [Fraction(rng.randint(-bound, bound)) for _ in range(d2)] + [Fraction(rng.choice(nz))]
    b = [Fraction(rng.randint(-bound, bound)) for _ in range(d1)] + [Fraction(rng.choice(nz))]
    return gamma, a, b


def random_laurent_pair(rng, max_d=3, bound=5):
    """P = g/L + sum b_i L^i, Q = g*L + sum a_i L^-i with rational data."""
    d1, d2 = rng.randint(1, max_d), rng.randint(1, max_d)
    gamma = random_nonzero_rational(rng, bound)
    b = [random_rational(rng, bound) for _ in range(d1)] + [random_nonzero_rational(rng, bound)]
    a = [random_rational(rng, bound) for _ in range(d2)] + [random_nonzero_rational(rng, bound)]
    P = LaurentPoly({-1: gamma, **{i: c for i, c in enumerate(b) if c}})
    Q = LaurentPoly({1: gamma, **{-i: c for i, c in enumerate(a) if c}})
    return P, Q, (gamma, a, b)


def random_laurent_multiplier(rng, max_neg=3, max_pos=3, bound=5):
    """General R = sum_{i=e}^{f} c_i L^i with e < 0 < f and c_e c_f != 0."""
    e, f = -rng.randint(1, max_neg), rng.randint(1, max_pos)
    terms = {i: random_rational(rng, bound) for i in range(e + 1, f)}
    terms[e] = random_nonzero_rational(rng, bound)
    terms[f] = random_nonzero_rational(rng, bound)
    return LaurentPoly(terms)


def random_poly_mult_pair(rng, min_degree=2, max_degree=4, bound=5):
    """Two polynomials in L used as multiplication operators on Q[L]."""
    def one():
        d = rng.randint(min_degree, max_degree)
        p = random_uni(rng, d - 1, "L", bound)
        return p + UniPoly.monomial(random_nonzero_rational(rng, bound), d, "L")
    return one(), one()
