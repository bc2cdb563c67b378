"""Spectral curves det(y*1 - M_{B,A}(x)) and the duality checks built on them.

The module variable ``u`` becomes ``x`` and the eigenvalue variable is
``y``.  Curves are compared as complex vanishing loci through their
squarefree primitive normal forms.
"""

import warnings
from dataclasses import dataclass

from .algebra.gcd import squarefree_primitive
from .algebra.matrix import PolyMatrix, det_poly
from .algebra.poly import BiPoly, UniPoly
from .errors import ValidationError
from .modrep import make_structure, matrix_rep
from .weyl import WeylOp, commutator

__all__ = [
    "DualityReport",
    "QuantizationReport",
    "SpectralCurve",
    "char_poly",
    "curves_equal_as_loci",
    "duality_check",
    "fourier_curve_theorem_check",
    "fourier_pair",
    "is_quantization",
    "is_spectral_quantization",
    "spectral_curve",
]


@dataclass(frozen=True)
class SpectralCurve:
    raw: BiPoly
    normal: BiPoly
    rank: int

    @classmethod
    def from_poly(cls, raw, rank):
        return cls(raw, squarefree_primitive(raw), rank)

    def swap(self):
        return SpectralCurve.from_poly(self.raw.swap(), self.rank)

    def fourier(self):
        return SpectralCurve.from_poly(self.raw.fourier(), self.rank)

    def to_json(self):
        return {"raw": self.raw.to_json(), "normal": self.normal.to_json(), "rank": self.rank}


def char_poly(m, module_var="x", eigen_var="y"):
    """det(eigen * 1 - M(module)) for a square matrix of UniPoly in u."""
    if not m.is_square():
        raise ValidationError("characteristic polynomial of a non-square matrix")
    eig = BiPoly.x() if eigen_var == "x" else BiPoly.y()

    def entry(p):
        if not isinstance(p, UniPoly):
            p = UniPoly.constant(p, "u")
        return BiPoly.from_uni(p, module_var)

    n = m.rows
    shifted = PolyMatrix([[(eig if i == j else 0) - entry(m[i, j]) for j in range(n)]
                          for i in range(n)])
    return det_poly(shifted)


def spectral_curve(a_op, b_op, window_start=None):
    """X_{B,A}: the curve of the B-action relative to the A-module structure."""
    m = make_structure(a_op, window_start)
    M = matrix_rep(m, b_op)
    return SpectralCurve.from_poly(char_poly(M), m.rank)


def _normal(f):
    if isinstance(f, SpectralCurve):
        return f.normal
    if not f:
        raise ValidationError("the zero polynomial does not cut out a curve")
    return squarefree_primitive(f)


def curves_equal_as_loci(f, g):
    return _normal(f) == _normal(g)


@dataclass(frozen=True)
class DualityReport:
    holds: bool
    X_QP: SpectralCurve
    X_PQ: SpectralCurve

    def to_json(self):
        return {"holds": self.holds, "X_QP": self.X_QP.to_json(), "X_PQ": self.X_PQ.to_json()}


def duality_check(p_op, q_op, p_window=None, q_window=None):
    """Compare X_{Q,P} with X_{P,Q} after exchanging x and y."""
    x_qp = spectral_curve(p_op, q_op, p_window)
    x_pq = spectral_curve(q_op, p_op, q_window)
    return DualityReport(x_qp.normal == x_pq.swap().normal, x_qp, x_pq)


def fourier_pair(p, q):
    """F(P, Q) = (-Q, P)."""
    return -q, p


@dataclass(frozen=True)
class QuantizationReport:
    degrees_ok: bool
    string_eq_ok: bool
    matrix_eq_ok: bool
    spectral_eq_ok: bool
    spectral: bool
    verdict: bool
    classical_commutes: bool

    def to_json(self):
        return {
            "mode": "spectral" if self.spectral else "exact",
            "degrees_ok": self.degrees_ok,
            "string_eq_ok": self.string_eq_ok,
            "matrix_eq_ok": self.matrix_eq_ok,
            "spectral_eq_ok": self.spectral_eq_ok,
            "classical_commutes": self.classical_commutes,
            "verdict": self.verdict,
        }


def _quantization_report(pair0, pair1, spectral):
    (p0, q0), (p1, q1) = pair0, pair1
    classical_commutes = not commutator(p0, q0)
    if not classical_commutes:
        warnings.warn("the classical pair does not commute", stacklevel=3)
    degrees_ok = p0.order == p1.order and q0.order == q1.order
    string_eq_ok = commutator(p1, q1) == WeylOp.constant(1)
    m0 = matrix_rep(make_structure(q0), p0)
    m1 = matrix_rep(make_structure(q1), p1)
    matrix_eq_ok = m0 == m1
    spectral_eq_ok = matrix_eq_ok or curves_equal_as_loci(char_poly(m0), char_poly(m1))
    third = spectral_eq_ok if spectral else matrix_eq_ok
    return QuantizationReport(degrees_ok, string_eq_ok, matrix_eq_ok, spectral_eq_ok,
                              spectral, degrees_ok and string_eq_ok and third,
                              classical_commutes)


def is_quantization(pair0, pair1):
    """Is ``pair1`` a quantization of ``pair0``?  Matrices M_{P,Q} must agree exactly."""
    return _quantization_report(pair0, pair1, spectral=False)


def is_spectral_quantization(pair0, pair1):
    """Like :func:`is_quantization`, but M_{P,Q} only needs the same spectral curve."""
    return _quantization_report(pair0, pair1, spectral=True)


def fourier_curve_theorem_check(pair1):
    """X_{F(P1,Q1)} equals the Fourier image of X_{(P1,Q1)} as loci."""
    p1, q1 = pair1
    fp, fq = fourier_pair(p1, q1)
    lhs = spectral_curve(fq, fp)
    rhs = spectral_curve(q1, p1).fourier()
    return lhs.normal == rhs.normal
