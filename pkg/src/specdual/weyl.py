"""Differential operators in the Weyl algebra Q[s][D], D = d/ds.

Operators are kept in normal order ``sum_i p_i(s) D^i`` with the
coefficient polynomials on the left.  They act on Q[z] through
``D -> z`` (multiplication) and ``s -> -d/dz``.
"""

from math import comb
from numbers import Integral

from .algebra.poly import NEG_INF, UniPoly, _format_terms, _is_scalar, _power_text
from .errors import ValidationError

__all__ = ["WeylOp", "commutator", "weyl_mul", "z_action"]


def _s_poly(c):
    return c if isinstance(c, UniPoly) else UniPoly.constant(c, "s")


class WeylOp:
    """Normal-ordered element ``sum_i coeffs[i](s) * D^i``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        cs = [_s_poly(c) for c in coeffs]
        for c in cs:
            if c.var != "s":
                raise ValidationError(f"WeylOp coefficients live in Q[s], got {c.var!r}")
        while cs and not cs[-1]:
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def D(cls):
        return cls([0, 1])

    @classmethod
    def s(cls):
        return cls([UniPoly.gen("s")])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def from_multiplier(cls, p):
        """Constant-coefficient operator ``p(D)``; on Q[z] it multiplies by ``p(z)``."""
        return cls(list(p.coeffs))

    @property
    def coeffs(self):
        return self._c

    @property
    def order(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def leading_coefficient(self):
        return self._c[-1] if self._c else UniPoly((), "s")

    def has_constant_leading_coefficient(self):
        return bool(self._c) and self._c[-1].is_constant()

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other):
        if isinstance(other, WeylOp):
            return other
        if _is_scalar(other):
            return WeylOp.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return WeylOp(out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp([-c for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            return WeylOp([c * other for c in self._c])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return weyl_mul(self, other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return WeylOp([c * other for c in self._c])
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, Integral) or n < 0:
            raise ValidationError("operator powers must be non-negative integers")
        result = WeylOp.constant(1)
        for _ in range(n):
            result = weyl_mul(result, self)
        return result

    def act(self, v):
        return z_action(self, v)

    __call__ = act

    def __eq__(self, other):
        if isinstance(other, WeylOp):
            return self._c == other._c
        if _is_scalar(other):
            return self._c == WeylOp.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(("WeylOp", self._c))

    def __repr__(self):
        return f"WeylOp({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        """Normal-ordered text, e.g. ``D^2 - 2*s*D + s^2``; parses back to itself."""
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            for k, c in self._c[i].terms():
                mono = "*".join(p for p in (_power_text("s", k), _power_text("D", i)) if p)
                terms.append((c, mono))
        return _format_terms(terms)


def weyl_mul(a, b):
    """Normal-ordered product.

    Moving ``D^i`` past ``q(s)`` uses the Leibniz rule
    ``D^i q = sum_k C(i, k) q^(k) D^(i-k)``, the closed form of repeatedly
    rewriting ``D s^k = s^k D + k s^(k-1)``.
    """
    if not a or not b:
        return WeylOp()
    out = [UniPoly((), "s")] * (len(a.coeffs) + len(b.coeffs) - 1)
    for j, q in enumerate(b.coeffs):
        if not q:
            continue
        derivs = [q]
        for i, p in enumerate(a.coeffs):
            if not p:
                continue
            while len(derivs) <= i:
                derivs.append(derivs[-1].derivative())
            for k in range(i + 1):
                if derivs[k]:
                    out[i + j - k] = out[i + j - k] + comb(i, k) * (p * derivs[k])
    return WeylOp(out)


def commutator(a, b):
    return weyl_mul(a, b) - weyl_mul(b, a)


def z_action(a, v):
    """Apply ``a`` to ``v`` in Q[z]: for each term ``p_i(s) D^i`` multiply by
    ``z^i`` first, then apply ``p_i(-d/dz)``."""
    if not isinstance(v, UniPoly):
        v = UniPoly.constant(v, "z")
    if v.var != "z":
        raise ValidationError(f"operators act on Q[z], got a polynomial in {v.var!r}")
    result = UniPoly((), "z")
    for i, p in enumerate(a.coeffs):
        if not p:
            continue
        w = UniPoly(((0,) * i) + v.coeffs, "z")
        for k, c in enumerate(p.coeffs):
            if c:
                result = result + (c if k % 2 == 0 else -c) * w
            w = w.derivative()
            if not w:
                break
    return result
