"""Arithmetic expressions for right-hand sides f(x, y0, ..., y9) and exact
solutions.

Grammar (whitespace-insensitive, no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?          # right-associative
    atom   := NUMBER | 'x' | 'y0'..'y9' | NAME '(' expr ')' | '(' expr ')'
    NAME   := sin cos tan sec exp ln sqrt abs

``yk`` denotes the k-th derivative argument (y0 = y, y1 = y', ...).
Evaluation works on floats or on mpmath mpf scalars; domain errors (ln of a
non-positive value, division by zero, ...) raise EvaluationError instead of
producing NaN.
"""

import math
import re
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from .errors import EvaluationError, ExpressionSyntaxError, UnknownIdentifierError

__all__ = ["parse", "evaluate", "to_source", "max_arg_index",
           "Num", "X", "Arg", "Neg", "BinOp", "Call"]


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class X:
    pass


@dataclass(frozen=True)
class Arg:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    fn: str
    arg: object


_FUNCTIONS = ("sin", "cos", "tan", "sec", "exp", "ln", "sqrt", "abs")

_TOKEN_RE = re.compile(
    r"(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
)


def _tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        if source[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ExpressionSyntaxError(f"unexpected character {source[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source):
        self.source = source
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, text, offset = self.peek()
        if kind != "op" or text != op:
            raise ExpressionSyntaxError(f"expected '{op}'", offset)
        return self.advance()

    def parse(self):
        e = self.expr()
        kind, text, offset = self.peek()
        if kind != "eof":
            raise ExpressionSyntaxError(f"unexpected '{text}'", offset)
        return e

    def expr(self):
        node = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                node = BinOp(text, node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "*/":
                self.advance()
                node = BinOp(text, node, self.unary())
            else:
                return node

    def unary(self):
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def atom(self):
        kind, text, offset = self.advance()
        if kind == "num":
            return Num(float(text))
        if kind == "name":
            if text == "x":
                return X()
            m = re.fullmatch(r"y(\d)", text)
            if m:
                return Arg(int(m.group(1)))
            if text in _FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Call(text, arg)
            raise UnknownIdentifierError(text, offset)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionSyntaxError(
            f"expected a number, variable, function, or '(', got {text!r}"
            if text else "unexpected end of input",
            offset,
        )


def parse(source):
    """Parse expression source text into an immutable syntax tree."""
    return _Parser(source).parse()


def to_source(e):
    """Fully parenthesized source text; parse(to_source(e)) == e."""
    if isinstance(e, Num):
        return f"{e.value:.17g}"
    if isinstance(e, X):
        return "x"
    if isinstance(e, Arg):
        return f"y{e.index}"
    if isinstance(e, Neg):
        return f"(-{to_source(e.operand)})"
    if isinstance(e, BinOp):
        return f"({to_source(e.left)} {e.op} {to_source(e.right)})"
    if isinstance(e, Call):
        return f"{e.fn}({to_source(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


def max_arg_index(e):
    """Largest yk index appearing in e, or -1 if none."""
    if isinstance(e, Arg):
        return e.index
    if isinstance(e, Neg):
        return max_arg_index(e.operand)
    if isinstance(e, BinOp):
        return max(max_arg_index(e.left), max_arg_index(e.right))
    if isinstance(e, Call):
        return max_arg_index(e.arg)
    return -1


def _float_sec(v):
    return 1.0 / math.cos(v)


_FLOAT_FUNCS = {
    "sin": math.sin, "cos": math.cos, "tan": math.tan, "sec": _float_sec,
    "exp": math.exp, "ln": math.log, "sqrt": math.sqrt, "abs": abs,
}

_MP_FUNCS = {
    "sin": mpmath.sin, "cos": mpmath.cos, "tan": mpmath.tan, "sec": mpmath.sec,
    "exp": mpmath.exp, "ln": mpmath.log, "sqrt": mpmath.sqrt, "abs": abs,
}


def _is_integer(v):
    try:
        return v == int(v)
    except (OverflowError, ValueError):
        return False


def _power(base, exponent):
    if base < 0 and not _is_integer(exponent):
        raise EvaluationError(
            f"negative base {float(base)} with non-integer exponent {float(exponent)}",
            where=float(base),
        )
    if base == 0 and exponent < 0:
        raise EvaluationError("zero raised to a negative power", where=0.0)
    if _is_integer(exponent):
        exponent = int(exponent)
    try:
        return base**exponent
    except OverflowError:
        sign = -1.0 if (base < 0 and exponent % 2 == 1) else 1.0
        return sign * math.inf


def evaluate(e, x, args=()):
    """Evaluate e at the point x with derivative arguments args = (y0, y1, ...).

    Floats in, float out; mpf in, mpf out (the function table follows the
    scalar type of the inputs).
    """
    use_mp = isinstance(x, mpf) or any(isinstance(a, mpf) for a in args)
    funcs = _MP_FUNCS if use_mp else _FLOAT_FUNCS
    return _eval(e, x, args, funcs, use_mp)


def _eval(e, x, args, funcs, use_mp):
    if isinstance(e, Num):
        return mpf(e.value) if use_mp else e.value
    if isinstance(e, X):
        return x
    if isinstance(e, Arg):
        if e.index >= len(args):
            raise EvaluationError(
                f"missing argument y{e.index} (got {len(args)} arguments)"
            )
        return args[e.index]
    if isinstance(e, Neg):
        return -_eval(e.operand, x, args, funcs, use_mp)
    if isinstance(e, BinOp):
        a = _eval(e.left, x, args, funcs, use_mp)
        b = _eval(e.right, x, args, funcs, use_mp)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if e.op == "/":
            if b == 0:
                raise EvaluationError("division by zero", where=float(a))
            return a / b
        return _power(a, b)
    if isinstance(e, Call):
        v = _eval(e.arg, x, args, funcs, use_mp)
        if e.fn == "ln" and v <= 0:
            raise EvaluationError(f"ln of non-positive value {float(v)}", where=float(v))
        if e.fn == "sqrt" and v < 0:
            raise EvaluationError(f"sqrt of negative value {float(v)}", where=float(v))
        if e.fn in ("tan", "sec"):
            c = funcs["cos"](v)
            if c == 0:
                raise EvaluationError(f"{e.fn} at a pole", where=float(v))
        return funcs[e.fn](v)
    raise TypeError(f"not an expression node: {e!r}")
