"""Small matrices over exact polynomial rings and their determinants."""

from fractions import Fraction
from itertools import permutations

from ..errors import ValidationError
from .poly import BiPoly, UniPoly

__all__ = ["PolyMatrix", "det_bareiss", "det_cofactor", "det_leibniz", "det_poly"]


class PolyMatrix:
    """Rectangular matrix whose entries are ring elements (UniPoly, BiPoly, ...).

    Entries are addressed ``m[j, i]`` (row, column).  The column convention
    used throughout the package: column ``i`` holds the coordinates of the
    image of the ``i``-th basis vector.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValidationError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValidationError("ragged matrix rows")
        self._rows = rows

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        return cls(zip(*columns))

    @classmethod
    def identity(cls, n, one):
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def rows(self):
        return len(self._rows)

    @property
    def cols(self):
        return len(self._rows[0])

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, idx):
        j, i = idx
        return self._rows[j][i]

    def row_list(self):
        return [list(r) for r in self._rows]

    def column(self, i):
        return tuple(r[i] for r in self._rows)

    def map(self, fn):
        return PolyMatrix([[fn(e) for e in r] for r in self._rows])

    def transpose(self):
        return PolyMatrix(zip(*self._rows))

    def reverse(self):
        """Conjugate by the order-reversing permutation of the basis."""
        return PolyMatrix([list(reversed(r)) for r in reversed(self._rows)])

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValidationError("shape mismatch in matrix addition")
        return PolyMatrix([[a + b for a, b in zip(r, s)]
                           for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.map(lambda e: -e)

    def scale(self, c):
        return self.map(lambda e: e * c)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValidationError("shape mismatch in matrix product")
        cols = list(zip(*other._rows))
        out = []
        for r in self._rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for a, b in zip(r[1:], c[1:]):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def power(self, n, one):
        result = PolyMatrix.identity(self.rows, one)
        for _ in range(n):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "PolyMatrix([" + ", ".join(
            "[" + ", ".join(str(e) for e in r) + "]" for r in self._rows) + "])"

    def to_text(self):
        cells = [[str(e) for e in r] for r in self._rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]"
                         for r in cells)

    def to_json(self, variable="u"):
        return {
            "rank": self.rows,
            "variable": variable,
            "rows": [[_entry_json(e) for e in r] for r in self._rows],
        }


def _entry_json(e):
    if isinstance(e, Fraction):
        return UniPoly.constant(e).to_json()
    return e.to_json()


def _square_rows(m):
    rows = m.row_list() if isinstance(m, PolyMatrix) else [list(r) for r in m]
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValidationError("determinant of a non-square matrix")
    return rows


def det_cofactor(m):
    """Laplace expansion along the first row (no divisions)."""
    rows = _square_rows(m)

    def expand(rs):
        if len(rs) == 1:
            return rs[0][0]
        acc = None
        for i, a in enumerate(rs[0]):
            if not a:
                continue
            minor = [r[:i] + r[i + 1:] for r in rs[1:]]
            term = a * expand(minor)
            if i % 2:
                term = -term
            acc = term if acc is None else acc + term
        return rs[0][0] * 0 if acc is None else acc

    return expand(rows)


def det_leibniz(m):
    """Sum over permutations; only for cross-checking on tiny sizes."""
    rows = _square_rows(m)
    n = len(rows)
    acc = rows[0][0] * 0
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = rows[0][perm[0]]
        for r in range(1, n):
            term = term * rows[r][perm[r]]
        acc = acc - term if inv % 2 else acc + term
    return acc


def det_bareiss(m):
    """Fraction-free Gaussian elimination; entries need an ``exquo`` method."""
    a = _square_rows(m)
    n = len(a)
    zero = a[0][0] * 0
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = elt if prev is None else _exquo(elt, prev)
            a[i][k] = zero
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _exquo(a, b):
    if isinstance(a, (UniPoly, BiPoly)):
        return a.exquo(b)
    return a / b


def det_poly(m):
    """Exact determinant: cofactor expansion up to 4x4, Bareiss beyond."""
    rows = _square_rows(m)
    if len(rows) <= 4:
        return det_cofactor(rows)
    return det_bareiss(rows)
