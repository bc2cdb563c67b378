"""Exact polynomials over Q: univariate, bivariate in (x, y), and Laurent.

Coefficients are :class:`fractions.Fraction`.  All three classes are
immutable value types; arithmetic returns new normalized objects with no
stored zero coefficients.

Bivariate terms are ordered graded-lex with ``x < y``: a term with larger
total degree comes first, ties are broken by the exponent of ``y``.  This
order drives text/JSON output and the sign normalization of primitive
forms.
"""

from collections.abc import Mapping
from fractions import Fraction
from numbers import Integral

from ..errors import ValidationError

__all__ = [
    "NEG_INF",
    "BiPoly",
    "LaurentPoly",
    "UniPoly",
    "grlex_key",
    "rational",
]

NEG_INF = float("-inf")
_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected; everything in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _is_scalar(value):
    return isinstance(value, (Fraction, Integral)) and not isinstance(value, bool)


def _coeff_text(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_terms(terms):
    parts = []
    for c, mono in terms:
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _coeff_text(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coeff_text(a)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) or "0"


def _power_text(var, k):
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def _json_term(exps, c):
    return {"exps": list(exps), "num": str(c.numerator), "den": str(c.denominator)}


def _term_from_json(obj):
    return tuple(int(e) for e in obj["exps"]), Fraction(int(obj["num"]), int(obj["den"]))


def grlex_key(exps):
    """Sort key for graded-lex order with x < y on ``(e_x, e_y)``."""
    ex, ey = exps
    return (ex + ey, ey, ex)


# ----------------------------------------------------------------------------
# Univariate
# ----------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial with rational coefficients.

    ``UniPoly([1, 0, 3], "u")`` is ``3*u^2 + 1``; a mapping exponent -> coeff
    is accepted as well.
    """

    __slots__ = ("_c", "var")

    def __init__(self, coeffs=(), var="u"):
        if isinstance(coeffs, Mapping):
            top = max(coeffs, default=-1)
            dense = [_ZERO] * (top + 1)
            for k, v in coeffs.items():
                if k < 0:
                    raise ValidationError("negative exponent in a UniPoly")
                dense[k] += rational(v)
        else:
            dense = [rational(c) for c in coeffs]
        while dense and not dense[-1]:
            dense.pop()
        self._c = tuple(dense)
        self.var = var

    @classmethod
    def _from_tuple(cls, coeffs, var):
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj.var = var
        return obj

    @classmethod
    def gen(cls, var="u"):
        return cls._from_tuple((_ZERO, _ONE), var)

    @classmethod
    def constant(cls, c, var="u"):
        return cls((c,), var)

    @classmethod
    def monomial(cls, c, k, var="u"):
        return cls({k: c}, var)

    # -- queries --------------------------------------------------------------

    @property
    def coeffs(self):
        """Coefficients, lowest degree first."""
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def lc(self):
        return self._c[-1] if self._c else _ZERO

    def coeff(self, k):
        return self._c[k] if 0 <= k < len(self._c) else _ZERO

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return len(self._c) <= 1

    def __bool__(self):
        return bool(self._c)

    def terms(self):
        """(exponent, coeff) pairs, highest exponent first, zeros skipped."""
        return [(k, c) for k, c in reversed(list(enumerate(self._c))) if c]

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValidationError(
                    f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if _is_scalar(other):
            return UniPoly.constant(other, self.var)
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
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._from_tuple(tuple(-c for c in self._c), self.var)

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
            c = rational(other)
            if not c:
                return UniPoly((), self.var)
            return UniPoly._from_tuple(tuple(c * a for a in self._c), self.var)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return UniPoly((), self.var)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, Integral) or n < 0:
            raise ValidationError("UniPoly powers must be non-negative integers")
        result = UniPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        db = len(other._c) - 1
        lcb = other._c[-1]
        if len(rem) - 1 < db:
            return UniPoly((), self.var), self
        quo = [_ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c / lcb
            quo[k - db] = f
            for i, cb in enumerate(other._c):
                rem[k - db + i] -= f * cb
        return UniPoly(quo, self.var), UniPoly(rem[:db], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        q, r = divmod(self, other)
        if r:
            raise ValidationError("inexact polynomial division")
        return q

    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self._c)][1:], self.var)

    def monic(self):
        if not self._c:
            return self
        return self * (1 / self._c[-1])

    def evaluate(self, value):
        """Horner evaluation at any value supporting ``*`` and ``+`` with Fractions."""
        if not self._c:
            return _ZERO
        acc = self._c[-1]
        for c in reversed(self._c[:-1]):
            acc = acc * value + c
        return acc

    __call__ = evaluate

    def rename(self, var):
        return UniPoly._from_tuple(self._c, var)

    # -- comparison / output --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.var == other.var and self._c == other._c
        if _is_scalar(other):
            return self._c == ((rational(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.var, self._c))

    def __repr__(self):
        return f"UniPoly({self.to_text()!r}, var={self.var!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        return _format_terms((c, _power_text(self.var, k)) for k, c in self.terms())

    def to_json(self):
        return [_json_term((k,), c) for k, c in self.terms()]

    @classmethod
    def from_json(cls, data, var="u"):
        coeffs = {}
        for obj in data:
            (k,), c = _term_from_json(obj)
            coeffs[k] = c
        return cls(coeffs, var)


# ----------------------------------------------------------------------------
# Bivariate
# ----------------------------------------------------------------------------

class BiPoly:
    """Sparse polynomial in Q[x, y]: a map (e_x, e_y) -> coefficient."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (ex, ey), c in items:
                if ex < 0 or ey < 0:
                    raise ValidationError("negative exponent in a BiPoly")
                c = rational(c)
                key = (int(ex), int(ey))
                v = t.get(key, _ZERO) + c
                if v:
                    t[key] = v
                else:
                    t.pop(key, None)
        self._t = t

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def x(cls):
        return cls._raw({(1, 0): _ONE})

    @classmethod
    def y(cls):
        return cls._raw({(0, 1): _ONE})

    @classmethod
    def constant(cls, c):
        c = rational(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def from_uni(cls, p, var):
        """Embed a UniPoly as a polynomial in ``x`` or ``y``."""
        if var == "x":
            return cls._raw({(k, 0): c for k, c in enumerate(p.coeffs) if c})
        if var == "y":
            return cls._raw({(0, k): c for k, c in enumerate(p.coeffs) if c})
        raise ValidationError(f"BiPoly variables are 'x' and 'y', not {var!r}")

    # -- queries --------------------------------------------------------------

    @property
    def term_map(self):
        return dict(self._t)

    def terms(self):
        """(exps, coeff) pairs in graded-lex descending order."""
        return sorted(self._t.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    @property
    def degree_x(self):
        return max((e[0] for e in self._t), default=NEG_INF)

    @property
    def degree_y(self):
        return max((e[1] for e in self._t), default=NEG_INF)

    @property
    def total_degree(self):
        return max((e[0] + e[1] for e in self._t), default=NEG_INF)

    def leading_term(self):
        if not self._t:
            raise ValidationError("zero polynomial has no leading term")
        exps = max(self._t, key=grlex_key)
        return exps, self._t[exps]

    @property
    def lc(self):
        return self.leading_term()[1] if self._t else _ZERO

    def constant_value(self):
        """The value of a constant polynomial, else ``None``."""
        if not self._t:
            return _ZERO
        if list(self._t) == [(0, 0)]:
            return self._t[(0, 0)]
        return None

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if _is_scalar(other):
            return BiPoly.constant(other)
        if isinstance(other, UniPoly):
            raise ValidationError(
                f"cannot combine BiPoly with UniPoly in {other.var!r}; "
                "embed it with BiPoly.from_uni")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, _ZERO) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return BiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._t.items()})

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
            c = rational(other)
            if not c:
                return BiPoly()
            return BiPoly._raw({k: c * v for k, v in self._t.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = {}
        for (ax, ay), ca in self._t.items():
            for (bx, by), cb in other._t.items():
                k = (ax + bx, ay + by)
                t[k] = t.get(k, _ZERO) + ca * cb
        return BiPoly._raw({k: v for k, v in t.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, Integral) or n < 0:
            raise ValidationError("BiPoly powers must be non-negative integers")
        result = BiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exquo(self, other):
        """Exact division; raises ValidationError when not divisible.

        Works term by term on graded-lex leading terms, which is valid for
        exact quotients under any monomial order.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        (bx, by), bc = other.leading_term()
        rem = dict(self._t)
        quo = {}
        while rem:
            (ex, ey) = max(rem, key=grlex_key)
            if ex < bx or ey < by:
                raise ValidationError("inexact polynomial division")
            mx, my = ex - bx, ey - by
            f = rem[(ex, ey)] / bc
            quo[(mx, my)] = f
            for (ox, oy), oc in other._t.items():
                k = (ox + mx, oy + my)
                v = rem.get(k, _ZERO) - f * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return BiPoly._raw(quo)

    def diff(self, var):
        if var == "x":
            return BiPoly._raw({(ex - 1, ey): ex * c
                                for (ex, ey), c in self._t.items() if ex})
        if var == "y":
            return BiPoly._raw({(ex, ey - 1): ey * c
                                for (ex, ey), c in self._t.items() if ey})
        raise ValidationError(f"unknown variable {var!r}")

    def swap(self):
        """f(x, y) -> f(y, x)."""
        return BiPoly._raw({(ey, ex): c for (ex, ey), c in self._t.items()})

    def fourier(self):
        """f(x, y) -> f(-y, x)."""
        return BiPoly._raw({(ey, ex): (-c if ex % 2 else c)
                            for (ex, ey), c in self._t.items()})

    def evaluate(self, xv, yv):
        return sum((c * xv ** ex * yv ** ey for (ex, ey), c in self._t.items()), _ZERO)

    def coeffs_in_y(self):
        """Coefficients as polynomials in x, index = power of y."""
        if not self._t:
            return []
        buckets = [dict() for _ in range(self.degree_y + 1)]
        for (ex, ey), c in self._t.items():
            buckets[ey][ex] = c
        return [UniPoly(b, "x") for b in buckets]

    @classmethod
    def from_coeffs_in_y(cls, coeffs):
        t = {}
        for ey, p in enumerate(coeffs):
            for ex, c in enumerate(p.coeffs):
                if c:
                    t[(ex, ey)] = c
        return cls._raw(t)

    # -- comparison / output --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._t == other._t
        if _is_scalar(other):
            return self._t == BiPoly.constant(other)._t
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", frozenset(self._t.items())))

    def __repr__(self):
        return f"BiPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        def mono(ex, ey):
            return "*".join(p for p in (_power_text("x", ex), _power_text("y", ey)) if p)
        return _format_terms((c, mono(ex, ey)) for (ex, ey), c in self.terms())

    def to_json(self):
        return [_json_term(e, c) for e, c in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls(_term_from_json(obj) for obj in data)


# ----------------------------------------------------------------------------
# Laurent
# ----------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial in ``L`` (lambda): exponents may be negative."""

    __slots__ = ("_t", "var")

    def __init__(self, terms=None, var="L"):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                v = t.get(int(k), _ZERO) + rational(c)
                if v:
                    t[int(k)] = v
                else:
                    t.pop(int(k), None)
        self._t = t
        self.var = var

    @classmethod
    def _raw(cls, t, var="L"):
        obj = cls.__new__(cls)
        obj._t = t
        obj.var = var
        return obj

    @classmethod
    def gen(cls, var="L"):
        return cls._raw({1: _ONE}, var)

    @classmethod
    def monomial(cls, c, k, var="L"):
        return cls({k: c}, var)

    @classmethod
    def constant(cls, c, var="L"):
        return cls({0: c}, var)

    @property
    def term_map(self):
        return dict(self._t)

    def coeff(self, k):
        return self._t.get(k, _ZERO)

    def terms(self):
        return sorted(self._t.items(), reverse=True)

    @property
    def top(self):
        if not self._t:
            raise ValidationError("zero Laurent polynomial has no top exponent")
        return max(self._t)

    @property
    def bot(self):
        if not self._t:
            raise ValidationError("zero Laurent polynomial has no bottom exponent")
        return min(self._t)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValidationError(
                    f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if _is_scalar(other):
            return LaurentPoly.constant(other, self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, _ZERO) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return LaurentPoly._raw(t, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()}, self.var)

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
            c = rational(other)
            if not c:
                return LaurentPoly(var=self.var)
            return LaurentPoly._raw({k: c * v for k, v in self._t.items()}, self.var)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = {}
        for a, ca in self._t.items():
            for b, cb in other._t.items():
                t[a + b] = t.get(a + b, _ZERO) + ca * cb
        return LaurentPoly._raw({k: v for k, v in t.items() if v}, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, Integral):
            raise ValidationError("Laurent powers must be integers")
        if n < 0:
            if len(self._t) != 1:
                raise ValidationError("only Laurent monomials can be inverted")
            (k, c), = self._t.items()
            return LaurentPoly._raw({k * n: (1 / c) ** (-n)}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by ``L^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.var == other.var and self._t == other._t
        if _is_scalar(other):
            return self._t == LaurentPoly.constant(other)._t
        return NotImplemented

    def __hash__(self):
        return hash(("LaurentPoly", self.var, frozenset(self._t.items())))

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        return _format_terms((c, _power_text(self.var, k)) for k, c in self.terms())

    def to_json(self):
        return [_json_term((k,), c) for k, c in self.terms()]
