"""Operator expression language for the command line.

Grammar (lowest to highest precedence)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | <juxtaposition>) unary)*
    unary   := "-" unary | power
    power   := atom ("^" ["-"] INT)?
    atom    := NUMBER | "D" | "s" | "L" | "(" expr ")"

``NUMBER`` is an integer or ``a/b``.  Juxtaposition multiplies a literal
directly followed by a symbol (``2s``) or any two factors separated by
whitespace (``s D``); ``sD`` is a single unknown identifier.  ``D`` and
``s`` generate the Weyl algebra, ``L`` is the Laurent variable; the two
families cannot be mixed.  Negative exponents are only allowed on ``L``.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.poly import LaurentPoly
from .errors import ParseError
from .weyl import WeylOp

__all__ = [
    "BinOp",
    "Neg",
    "Num",
    "Pow",
    "Sym",
    "elaborate",
    "parse_operator",
    "print_expr",
    "to_operator",
]

SYMBOLS = ("D", "s", "L")
_WEYL = {"D", "s"}


@dataclass(frozen=True)
class Num:
    value: Fraction
    pos: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("literals are non-negative; use Neg")


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int = field(default=0, compare=False)


# -- lexer ----------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>[0-9]+(?:/[0-9]+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str  # num, sym, op, eof
    text: str
    pos: int  # byte offset
    space_before: bool


def _lex(text):
    tokens = []
    i = 0
    space = False
    byte_pos = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", byte_pos,
                             ("number", "symbol", "operator"))
        kind = m.lastgroup
        s = m.group()
        if kind == "ws":
            space = True
        elif kind == "ident":
            if s not in SYMBOLS:
                hint = " (separate symbols with '*' or whitespace)" if len(s) > 1 else ""
                raise ParseError(f"unknown symbol {s!r}{hint}", byte_pos, SYMBOLS)
            tokens.append(_Tok("sym", s, byte_pos, space))
            space = False
        elif kind == "num":
            num, _, den = s.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator in literal", byte_pos)
            tokens.append(_Tok("num", s, byte_pos, space))
            space = False
        else:
            tokens.append(_Tok("op", s, byte_pos, space))
            space = False
        byte_pos += len(s.encode("utf-8"))
        i = m.end()
    tokens.append(_Tok("eof", "", byte_pos, space))
    return tokens


# -- parser ---------------------------------------------------------------------

class _Parser:
    def __init__(self, text):
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def advance(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, kind, text=None):
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def parse(self):
        node = self.expr()
        if not self.at("eof"):
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos,
                             ("+", "-", "*", "^", "end of input"))
        return node

    def expr(self):
        node = self.term()
        while self.at("op", "+") or self.at("op", "-"):
            t = self.advance()
            node = BinOp(t.text, node, self.term(), t.pos)
        return node

    def term(self):
        node = factor = self.unary()
        while True:
            t = self.tok
            if t.kind == "op" and t.text == "*":
                self.advance()
            elif not self._juxtaposed(factor, t):
                return node
            factor = self.unary()
            node = BinOp("*", node, factor, t.pos)

    @staticmethod
    def _juxtaposed(factor, t):
        starts_atom = t.kind in ("num", "sym") or (t.kind == "op" and t.text == "(")
        if not starts_atom:
            return False
        while isinstance(factor, Neg):
            factor = factor.operand
        literal = isinstance(factor, Num)
        if literal and t.kind == "num":
            return False
        if (literal and t.kind == "sym") or t.space_before:
            return True
        raise ParseError(f"missing operator before {t.text!r}", t.pos, ("*", "+", "-"))

    def unary(self):
        if self.at("op", "-"):
            t = self.advance()
            return Neg(self.unary(), t.pos)
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("op", "^"):
            t = self.advance()
            sign = 1
            if self.at("op", "-"):
                self.advance()
                sign = -1
            if not self.at("num") or "/" in self.tok.text:
                raise ParseError("exponent must be an integer", self.tok.pos, ("integer",))
            k = sign * int(self.advance().text)
            if k < 0 and not (isinstance(base, Sym) and base.name == "L"):
                raise ParseError("negative exponents are only allowed on L", t.pos)
            return Pow(base, k, t.pos)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(Fraction(t.text), t.pos)
        if t.kind == "sym":
            self.advance()
            return Sym(t.text, t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            if not self.at("op", ")"):
                raise ParseError("unbalanced parenthesis", self.tok.pos, (")",))
            self.advance()
            return node
        what = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.pos, ("number", "symbol", "(", "-"))


def parse_operator(text):
    """Parse ``text`` into an expression tree (see module docstring)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return _Parser(text).parse()


# -- printer --------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node):
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    return 5


def print_expr(node):
    """Minimal-parenthesis text that parses back to an equal tree."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = print_expr(node.operand)
        return "-" + (f"({inner})" if _prec(node.operand) < 3 else inner)
    if isinstance(node, Pow):
        base = print_expr(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    p = _PREC[node.op]
    left, right = print_expr(node.left), print_expr(node.right)
    if _prec(node.left) < p:
        left = f"({left})"
    if _prec(node.right) <= p:
        right = f"({right})"
    if node.op == "*":
        return f"{left}*{right}"
    return f"{left} {node.op} {right}"


# -- elaboration ----------------------------------------------------------------

def _symbols(node, acc):
    if isinstance(node, Sym):
        acc.append(node)
    elif isinstance(node, Neg):
        _symbols(node.operand, acc)
    elif isinstance(node, Pow):
        _symbols(node.base, acc)
    elif isinstance(node, BinOp):
        _symbols(node.left, acc)
        _symbols(node.right, acc)
    return acc


def _eval(node, gens):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Sym):
        return gens[node.name]
    if isinstance(node, Neg):
        return -_eval(node.operand, gens)
    if isinstance(node, Pow):
        base = _eval(node.base, gens)
        if node.exponent < 0 and not isinstance(base, LaurentPoly):
            raise ParseError("negative exponents are only allowed on L", node.pos)
        return base ** node.exponent
    a, b = _eval(node.left, gens), _eval(node.right, gens)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


def elaborate(node):
    """Evaluate a tree to a WeylOp, a LaurentPoly, or (no symbols) a Fraction."""
    syms = _symbols(node, [])
    weyl = [s for s in syms if s.name in _WEYL]
    laurent = [s for s in syms if s.name == "L"]
    if weyl and laurent:
        first = max(weyl[0], laurent[0], key=lambda s: s.pos)
        raise ParseError("cannot mix D/s with L in one expression", first.pos)
    gens = {"D": WeylOp.D(), "s": WeylOp.s(), "L": LaurentPoly.gen()}
    return _eval(node, gens)


def to_operator(text):
    return elaborate(parse_operator(text))
