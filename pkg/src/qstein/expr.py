"""Expression syntax for the command line.

Grammar (``^`` binds tighter than ``*``, which binds tighter than ``+``/``-``)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT ['/' INT] | 'i' | 'z' | 'zinv' | 't'
            | NAME '[' SINT (',' SINT)* ']' | '(' expr ')'

``NAME`` is one of ``d``, ``zeta``, ``tau``, ``one``.  Exponents are
nonnegative; negative powers of ``z`` are written with ``zinv``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebras import BasedHopfAlgebra, GradedElem
from .scalar import ONE, GaussianRational, I

__all__ = [
    "ExprSyntaxError",
    "AtomError",
    "Num",
    "Imag",
    "Gen",
    "Basis",
    "Add",
    "Sub",
    "Neg",
    "Mul",
    "Pow",
    "parse",
    "to_text",
    "evaluate",
]

GENERATORS = ("z", "zinv", "t")
BASIS_NAMES = ("d", "zeta", "tau", "one")


class ExprSyntaxError(SyntaxError):
    def __init__(self, position: int, expected, text: str = ""):
        self.position = position
        self.expected = tuple(expected)
        super().__init__(f"at position {position}: expected {' or '.join(self.expected)} in {text!r}")


class AtomError(ValueError):
    """An atom that has no meaning in the chosen algebra."""


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Basis:
    name: str
    index: tuple


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(\S))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def fail(self, *expected):
        raise ExprSyntaxError(self.peek()[2], expected, self.text)

    def take(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            self.fail(repr(value) if value else kind)
        self.i += 1
        return tok

    def at(self, value) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def expr(self):
        if self.at("-"):
            self.i += 1
            node = Neg(self.term())
        else:
            node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take("op")[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.at("*"):
            self.i += 1
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.at("^"):
            self.i += 1
            if self.at("-"):
                self.fail("nonnegative exponent (use zinv for negative powers)")
            node = Pow(node, int(self.take("int")[1]))
        return node

    def signed_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        return sign * int(self.take("int")[1])

    def atom(self):
        kind, val, _ = self.peek()
        if kind == "int":
            self.i += 1
            num = Fraction(int(val))
            if self.at("/"):
                self.i += 1
                tok = self.take("int")
                den = int(tok[1])
                if den == 0:
                    raise ExprSyntaxError(tok[2], ["nonzero denominator"], self.text)
                num = num / den
            return Num(num)
        if kind == "name":
            if val == "i":
                self.i += 1
                return Imag()
            if val in GENERATORS:
                self.i += 1
                return Gen(val)
            if val in BASIS_NAMES:
                self.i += 1
                self.take("op", "[")
                idx = [self.signed_int()]
                while self.at(","):
                    self.i += 1
                    idx.append(self.signed_int())
                self.take("op", "]")
                return Basis(val, tuple(idx))
            self.fail("generator", "basis atom")
        if self.at("("):
            self.i += 1
            node = self.expr()
            self.take("op", ")")
            return node
        self.fail("number", "'i'", "generator", "basis atom", "'('")


def parse(text: str):
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "end":
        p.fail("end of input")
    return node


# printing ------------------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, Neg: 1, Mul: 2, Pow: 3}


def _prec(node) -> int:
    return _PREC.get(type(node), 4)


def _wrap(node, need: int) -> str:
    s = to_text(node)
    return f"({s})" if _prec(node) < need else s


def to_text(node) -> str:
    """Text that parses back to ``node``."""
    if isinstance(node, Num):
        v = node.value
        s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return s if v >= 0 else f"({s})"
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Basis):
        return f"{node.name}[{','.join(str(i) for i in node.index)}]"
    if isinstance(node, Add):
        return f"{_wrap(node.left, 1)}+{_wrap(node.right, 2)}"
    if isinstance(node, Sub):
        return f"{_wrap(node.left, 1)}-{_wrap(node.right, 2)}"
    if isinstance(node, Neg):
        return f"-{_wrap(node.arg, 2)}"
    if isinstance(node, Mul):
        return f"{_wrap(node.left, 2)}*{_wrap(node.right, 3)}"
    if isinstance(node, Pow):
        # a fraction literal needs parentheses so the exponent does not bind to its denominator
        base = node.base
        s = to_text(base)
        if _prec(base) <= 3 or (isinstance(base, Num) and base.value.denominator != 1):
            s = f"({s})"
        return f"{s}^{node.exp}"
    raise TypeError(node)


# evaluation ---------------------------------------------------------------------


def evaluate(node, alg: BasedHopfAlgebra, atoms: dict, window: int = 4) -> GradedElem:
    """Value of ``node`` in ``alg``.

    ``atoms`` maps generator names and basis names to functions returning a
    basis index (``atoms["z"]()`` or ``atoms["zeta"](n)``).  Scalars are
    multiples of the unit, truncated to ``window`` for windowed algebras.
    """

    def scalar(c):
        return alg.unit(window).scale(c)

    def go(n):
        if isinstance(n, Num):
            return scalar(GaussianRational(n.value))
        if isinstance(n, Imag):
            return scalar(I)
        if isinstance(n, Gen):
            if n.name not in atoms:
                raise AtomError(f"{n.name} is not an element of {alg.name}")
            return alg.basis_elem(atoms[n.name](), ONE)
        if isinstance(n, Basis):
            if n.name not in atoms:
                raise AtomError(f"{n.name}[...] is not a basis of {alg.name}")
            return alg.basis_elem(atoms[n.name](*n.index), ONE)
        if isinstance(n, Add):
            return go(n.left) + go(n.right)
        if isinstance(n, Sub):
            return go(n.left) - go(n.right)
        if isinstance(n, Neg):
            return -go(n.arg)
        if isinstance(n, Mul):
            return alg.mul(go(n.left), go(n.right))
        if isinstance(n, Pow):
            base = go(n.base)
            out = alg.unit(window)
            for _ in range(n.exp):
                out = alg.mul(out, base)
            return out
        raise TypeError(n)

    return go(node)
