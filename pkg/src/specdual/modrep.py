"""Free Q[u]-module structures induced by an operator, and matrices M_{B,A}.

Two carriers are supported:

* ``Carrier.POLY_Z``: Q[z], with ``u`` acting through a :class:`WeylOp`
  of positive order and constant leading coefficient.  Basis
  ``1, z, ..., z^(p-1)``.
* ``Carrier.LAURENT``: Q[L, 1/L], with ``u`` acting as multiplication by a
  Laurent polynomial ``R`` of bottom exponent ``e < 0`` and top exponent
  ``f > 0``.  Any ``f - e`` consecutive powers form a basis; the window is
  ``L^w0, ..., L^(w0 + f - e - 1)``.
"""

import enum
from dataclasses import dataclass

from .algebra.matrix import PolyMatrix
from .algebra.poly import LaurentPoly, UniPoly, _is_scalar
from .errors import ValidationError
from .weyl import WeylOp, z_action

__all__ = [
    "Carrier",
    "ModuleStructure",
    "make_structure",
    "matrix_rep",
    "reconstruct",
    "reduce",
]

_U_ZERO = UniPoly((), "u")
_U = UniPoly.gen("u")


class Carrier(enum.Enum):
    POLY_Z = "PolyInZ"
    LAURENT = "LaurentInLambda"


@dataclass(frozen=True)
class ModuleStructure:
    carrier: Carrier
    action: object
    rank: int
    window_start: int = 0

    @property
    def basis(self):
        if self.carrier is Carrier.POLY_Z:
            return [UniPoly.monomial(1, k, "z") for k in range(self.rank)]
        return [LaurentPoly.monomial(1, self.window_start + k) for k in range(self.rank)]

    @property
    def window(self):
        """(lowest, highest) exponent of the basis window."""
        return self.window_start, self.window_start + self.rank - 1

    def apply(self, w):
        """The u-action on a carrier element."""
        if self.carrier is Carrier.POLY_Z:
            return z_action(self.action, w)
        return self.action * w

    def zero(self):
        if self.carrier is Carrier.POLY_Z:
            return UniPoly((), "z")
        return LaurentPoly()

    def coerce(self, w):
        """Check/convert ``w`` to an element of the carrier."""
        if _is_scalar(w):
            if self.carrier is Carrier.POLY_Z:
                return UniPoly.constant(w, "z")
            return LaurentPoly.constant(w)
        if self.carrier is Carrier.POLY_Z and isinstance(w, UniPoly) and w.var == "z":
            return w
        if self.carrier is Carrier.LAURENT and isinstance(w, LaurentPoly):
            return w
        raise ValidationError(f"{w!r} is not an element of the {self.carrier.value} carrier")


def make_structure(action, window_start=None):
    """Build the Q[u]-module structure where ``u`` acts via ``action``.

    ``window_start`` only applies to Laurent actions; it defaults to the
    bottom exponent ``e`` of the action (basis ``L^e, ..., L^(f-1)``).
    """
    if isinstance(action, WeylOp):
        if not action:
            raise ValidationError("the zero operator does not define a free module")
        if action.order < 1:
            raise ValidationError(
                "standing assumption violated: the action must have positive D-order")
        if not action.has_constant_leading_coefficient():
            raise ValidationError(
                "standing assumption violated: the leading coefficient of the action "
                f"must be constant, got {action.leading_coefficient}")
        if window_start not in (None, 0):
            raise ValidationError("the Q[z] carrier uses the fixed window 1, ..., z^(p-1)")
        return ModuleStructure(Carrier.POLY_Z, action, action.order, 0)
    if isinstance(action, LaurentPoly):
        if not action:
            raise ValidationError("the zero operator does not define a free module")
        e, f = action.bot, action.top
        if e >= 0:
            raise ValidationError(
                f"standing assumption violated: bottom exponent e={e} must be negative")
        if f <= 0:
            raise ValidationError(
                f"standing assumption violated: top exponent f={f} must be positive")
        start = e if window_start is None else int(window_start)
        return ModuleStructure(Carrier.LAURENT, action, f - e, start)
    raise ValidationError(f"unsupported action type {type(action).__name__}")


def _check_operator(m, op):
    if _is_scalar(op):
        return WeylOp.constant(op) if m.carrier is Carrier.POLY_Z else LaurentPoly.constant(op)
    if m.carrier is Carrier.POLY_Z and isinstance(op, WeylOp):
        return op
    if m.carrier is Carrier.LAURENT and isinstance(op, LaurentPoly):
        return op
    raise ValidationError(
        f"operator of type {type(op).__name__} does not act on the {m.carrier.value} carrier")


def _apply_op(m, op, w):
    if m.carrier is Carrier.POLY_Z:
        return z_action(op, w)
    return op * w


def reduce(m, w):
    """Coordinates of ``w`` in the module basis: a tuple of UniPoly in u with
    ``w = sum_i entries[i](A) v_i``."""
    w = m.coerce(w)
    if m.carrier is Carrier.POLY_Z:
        return _reduce_poly(m, w)
    return _reduce_laurent(m, w)


def _reduce_poly(m, w):
    p = m.rank
    lead = m.action.leading_coefficient.lc
    entries = [_U_ZERO] * p
    # A^k(z^r) has degree k*p + r and leading coefficient lead^k
    cache = {}
    while w and w.degree >= p:
        n = w.degree
        k, r = divmod(n, p)
        if (k, r) not in cache:
            v = UniPoly.monomial(1, r, "z")
            for _ in range(k):
                v = z_action(m.action, v)
            cache[k, r] = v
        f = w.lc / lead ** k
        w = w - f * cache[k, r]
        entries[r] = entries[r] + UniPoly.monomial(f, k, "u")
    for r, c in enumerate(w.coeffs):
        if c:
            entries[r] = entries[r] + c
    return tuple(entries)


def _reduce_laurent(m, w):
    R = m.action
    e, f = R.bot, R.top
    ce, cf = R.coeff(e), R.coeff(f)
    others = [(i, c) for i, c in R.term_map.items()]
    lo, hi = m.window
    state = {k: UniPoly.constant(c, "u") for k, c in w.term_map.items()}

    def rewrite(j, pivot, pivot_c):
        # L^j = (u L^(j-pivot) - sum_{i != pivot} c_i L^(j-pivot+i)) / c_pivot
        a = state.pop(j)
        base = j - pivot
        scale = 1 / pivot_c
        _accumulate(state, base, a * _U * scale)
        for i, c in others:
            if i != pivot:
                _accumulate(state, base + i, a * (-c * scale))

    while state and max(state) > hi:
        rewrite(max(state), f, cf)
    while state and min(state) < lo:
        rewrite(min(state), e, ce)
    return tuple(state.get(lo + k, _U_ZERO) for k in range(m.rank))


def _accumulate(state, k, poly):
    v = state.get(k, _U_ZERO) + poly
    if v:
        state[k] = v
    else:
        state.pop(k, None)


def reconstruct(m, coeffs):
    """Inverse of :func:`reduce`: ``sum_i coeffs[i](A) v_i``."""
    coeffs = tuple(coeffs)
    if len(coeffs) != m.rank:
        raise ValidationError(f"expected {m.rank} coefficients, got {len(coeffs)}")
    total = m.zero()
    for c, v in zip(coeffs, m.basis):
        if _is_scalar(c):
            c = UniPoly.constant(c, "u")
        if not c:
            continue
        acc = m.zero()
        for a in reversed(c.coeffs):
            acc = m.apply(acc) + a * v
        total = total + acc
    return total


def matrix_rep(m, b_op):
    """M_{B,A}: column ``i`` holds ``reduce(m, B v_i)``."""
    b_op = _check_operator(m, b_op)
    columns = [reduce(m, _apply_op(m, b_op, v)) for v in m.basis]
    return PolyMatrix.from_columns(columns)
