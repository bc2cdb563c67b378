"""Concrete families: M_{q,p}, the large-N two-matrix-model (BEH) matrices,
and the resultant description of spectral curves of multiplication operators.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.gcd import squarefree_primitive
from .algebra.matrix import PolyMatrix, det_poly
from .algebra.poly import BiPoly, LaurentPoly, UniPoly, rational
from .algebra.resultant import sylvester_resultant
from .errors import ValidationError
from .modrep import make_structure, matrix_rep
from .spectral import char_poly
from .weyl import WeylOp

__all__ = [
    "BehInstance",
    "BehReport",
    "beh_duality_check",
    "build_Mqp",
    "build_beh",
    "companion",
    "resultant_curve",
    "unimodular_inverse",
]


def build_Mqp(p, q):
    """p x p matrix of D^q acting on Q[z] with u acting as D^p."""
    if p < 1 or q < 1:
        raise ValidationError("M_{q,p} needs p, q >= 1")
    D = WeylOp.D()
    return matrix_rep(make_structure(D ** p), D ** q)


def companion(last_row, var):
    """Square matrix with ones on the superdiagonal and ``last_row`` at the bottom."""
    n = len(last_row)
    zero, one = UniPoly((), var), UniPoly.constant(1, var)
    rows = [[one if j == i + 1 else zero for j in range(n)] for i in range(n - 1)]
    rows.append(list(last_row))
    return PolyMatrix(rows)


def unimodular_inverse(m):
    """Inverse of a polynomial matrix whose determinant is a nonzero constant."""
    n = m.rows
    det = det_poly(m)
    if not det or not det.is_constant():
        raise ValidationError("matrix determinant is not a nonzero constant")
    inv_det = 1 / det.lc
    rows = m.row_list()
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            # adjugate entry (i, j) is the (j, i) cofactor
            if n == 1:
                minor = det * 0 + 1
            else:
                minor = det_poly([r[:i] + r[i + 1:] for k, r in enumerate(rows) if k != j])
            row.append(minor * (inv_det if (i + j) % 2 == 0 else -inv_det))
        cof.append(row)
    return PolyMatrix(cof)


def _poly_in_matrix(m, coeffs, var, inverse_coeff=0, inverse=None):
    """coeffs[0]*1 + coeffs[1]*m + ... (+ inverse_coeff * inverse)."""
    one = UniPoly.constant(1, var)
    n = m.rows
    total = PolyMatrix.identity(n, one).scale(coeffs[0])
    power = PolyMatrix.identity(n, one)
    for c in coeffs[1:]:
        power = power @ m
        total = total + power.scale(c)
    if inverse_coeff:
        total = total + inverse.scale(inverse_coeff)
    return total


@dataclass(frozen=True)
class BehInstance:
    """Large-N two-matrix-model data.

    ``P = gamma/L + sum b_i L^i`` and ``Q = gamma*L + sum a_i L^(-i)``.
    ``A`` and ``B`` are companion matrices (rows as displayed in the
    literature, i.e. they act on row vectors): ``A`` represents
    multiplication by L on ``L^(N-d2), ..., L^N`` with x acting as Q; ``B``
    represents multiplication by 1/L on ``L^(N-1+d1), ..., L^(N-1)`` with y
    acting as P.
    """

    gamma: Fraction
    a_coeffs: tuple
    b_coeffs: tuple
    N: int
    P: LaurentPoly = field(repr=False)
    Q: LaurentPoly = field(repr=False)
    A: PolyMatrix = field(repr=False)
    B: PolyMatrix = field(repr=False)
    D1: PolyMatrix = field(repr=False)
    D2: PolyMatrix = field(repr=False)

    @property
    def d1(self):
        return len(self.b_coeffs) - 1

    @property
    def d2(self):
        return len(self.a_coeffs) - 1

    @property
    def p_window_start(self):
        return self.N - 1

    @property
    def q_window_start(self):
        return self.N - self.d2

    def to_json(self):
        return {
            "gamma": str(self.gamma),
            "a": [str(a) for a in self.a_coeffs],
            "b": [str(b) for b in self.b_coeffs],
            "N": self.N,
            "P": self.P.to_json(),
            "Q": self.Q.to_json(),
            "A": self.A.to_json("x"),
            "B": self.B.to_json("y"),
            "D1": self.D1.to_json("x"),
            "D2": self.D2.to_json("y"),
        }


def build_beh(gamma, a_coeffs, b_coeffs, N=None):
    gamma = rational(gamma)
    a = tuple(rational(c) for c in a_coeffs)
    b = tuple(rational(c) for c in b_coeffs)
    d1, d2 = len(b) - 1, len(a) - 1
    if d1 <= 0:
        raise ValidationError("standing assumption violated: d1 > 0 (need b_0, ..., b_d1 with d1 >= 1)")
    if d2 <= 0:
        raise ValidationError("standing assumption violated: d2 > 0 (need a_0, ..., a_d2 with d2 >= 1)")
    if not gamma:
        raise ValidationError("standing assumption violated: gamma != 0")
    if not a[-1]:
        raise ValidationError("standing assumption violated: a_d2 != 0")
    if not b[-1]:
        raise ValidationError("standing assumption violated: b_d1 != 0")
    N = d2 + 1 if N is None else int(N)
    if N < d2:
        raise ValidationError(f"N={N} must be at least d2={d2}")

    P = LaurentPoly({-1: gamma, **{i: c for i, c in enumerate(b) if c}})
    Q = LaurentPoly({1: gamma, **{-i: c for i, c in enumerate(a) if c}})
    x = UniPoly.gen("x")
    y = UniPoly.gen("y")
    A = companion([UniPoly.constant(-a[d2 - j] / gamma, "x") for j in range(d2)]
                  + [(x - a[0]) * (1 / gamma)], "x")
    B = companion([UniPoly.constant(-b[d1 - j] / gamma, "y") for j in range(d1)]
                  + [(y - b[0]) * (1 / gamma)], "y")
    # A stands for L, B for 1/L: D1 is P(L), D2 is Q(L) written through B
    D1 = _poly_in_matrix(A, b, "x", gamma, unimodular_inverse(A))
    D2 = _poly_in_matrix(B, a, "y", gamma, unimodular_inverse(B))
    return BehInstance(gamma, a, b, N, P, Q, A, B, D1, D2)


@dataclass(frozen=True)
class BehReport:
    holds: bool
    lhs: BiPoly
    rhs: BiPoly
    d1_matches: bool
    d2_matches: bool
    scalar: Fraction | None

    def to_json(self):
        return {
            "holds": self.holds,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "d1_matches_matrix_rep": self.d1_matches,
            "d2_matches_matrix_rep": self.d2_matches,
            "scalar": None if self.scalar is None else str(self.scalar),
        }


def _proportionality(f, g):
    """c with f == c*g, or None."""
    if not g:
        return None
    c = f.lc / g.lc
    return c if f == g * c else None


def beh_duality_check(inst):
    """det(y - D1(x)) versus det(x - D2(y)), plus D1/D2 against M_{P,Q}, M_{Q,P}.

    D1 and D2 are written in the row convention, so the comparison with
    :func:`matrix_rep` transposes (and, for D2, reverses the basis order).
    """
    d1_x = inst.D1.map(lambda e: e.rename("u"))
    d2_y = inst.D2.map(lambda e: e.rename("u"))
    lhs = char_poly(d1_x, module_var="x", eigen_var="y")
    rhs = char_poly(d2_y, module_var="y", eigen_var="x")
    holds = squarefree_primitive(lhs) == squarefree_primitive(rhs)

    m_pq = matrix_rep(make_structure(inst.Q, inst.q_window_start), inst.P)
    m_qp = matrix_rep(make_structure(inst.P, inst.p_window_start), inst.Q)
    d1_matches = d1_x == m_pq.transpose()
    d2_matches = d2_y == m_qp.transpose().reverse()
    return BehReport(holds, lhs, rhs, d1_matches, d2_matches, _proportionality(lhs, rhs))


def _bipoly_coeffs(p, shift, var):
    """Coefficient list (lowest power first) of L^shift * (p - var)."""
    if isinstance(p, LaurentPoly):
        terms = p.term_map
    else:
        terms = {k: c for k, c in enumerate(p.coeffs) if c}
    lo = min(terms)
    top = max(terms) + shift
    coeffs = [BiPoly()] * (top + 1)
    for k, c in terms.items():
        coeffs[k + shift] = coeffs[k + shift] + c
    v = BiPoly.x() if var == "x" else BiPoly.y()
    coeffs[shift] = coeffs[shift] - v
    if lo + shift < 0:
        raise ValidationError("clearing shift too small")
    return coeffs


def resultant_curve(p_mult, q_mult):
    """Res_L(P(L) - x, Q(L) - y).

    For Laurent inputs the denominators are cleared first and monomial
    factors x^j y^k introduced by the clearing are divided out.
    """
    if isinstance(p_mult, UniPoly) and isinstance(q_mult, UniPoly):
        if p_mult.degree < 1 or q_mult.degree < 1:
            raise ValidationError("multiplication operators must have degree >= 1")
        return sylvester_resultant(_bipoly_coeffs(p_mult, 0, "x"),
                                   _bipoly_coeffs(q_mult, 0, "y"))
    if isinstance(p_mult, LaurentPoly) and isinstance(q_mult, LaurentPoly):
        for r in (p_mult, q_mult):
            if not r or r.bot >= 0 or r.top <= 0:
                raise ValidationError(
                    "Laurent multiplication operators need bottom exponent < 0 < top exponent")
        res = sylvester_resultant(_bipoly_coeffs(p_mult, -p_mult.bot, "x"),
                                  _bipoly_coeffs(q_mult, -q_mult.bot, "y"))
        return _strip_monomial(res)
    raise ValidationError("resultant_curve needs two UniPoly or two LaurentPoly operators")


def _strip_monomial(f):
    if not f:
        return f
    terms = f.term_map
    jx = min(e[0] for e in terms)
    jy = min(e[1] for e in terms)
    if not jx and not jy:
        return f
    return BiPoly({(ex - jx, ey - jy): c for (ex, ey), c in terms.items()})
