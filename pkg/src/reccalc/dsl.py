"""Text format for recurrences.

A spec is a list of statements separated by ``;`` or newlines::

    # Chebyshev polynomials of the first kind
    f[n] = 2*x*f[n-1] - f[n-2]
    f[0] = 1; f[1] = x

The right-hand side of ``f[n] = ...`` must be linear and homogeneous in the
lagged terms ``f[n-L]`` (L >= 1) with coefficients that are rational
functions of x built from integers, ``x``, ``+ - * /``, ``^`` with an integer
exponent, and parentheses.  Lags that do not appear get coefficient zero; the
largest lag is the order.  Initial values ``f[i] = expr`` are optional, but
when present must cover exactly f[0] .. f[order-1].  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from reccalc.errors import DivisionByZero, InvalidArgument, ParseError
from reccalc.exact_arith import RONE, RX, RZERO, XRatFunc, format_coefficient, format_ratfunc
from reccalc.recurrence import LinearRecurrence

MAX_EXPONENT = 256
MAX_INDEX = 1024
MAX_DEPTH = 200
MAX_DEGREE = 4096

_SYMBOLS = set("+-*/^()[]=;")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, SYM, NL, EOF
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    depth = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            if depth == 0:
                tokens.append(Token("NL", "\n", line, col))
            i += 1
            line, col = line + 1, 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            tokens.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in ("x", "f", "n"):
            if i + 1 < n and (text[i + 1].isalnum() or text[i + 1] == "_"):
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                raise ParseError(f"unknown name {text[i:j]!r}", line, col)
            tokens.append(Token("NAME", ch, line, col))
            i += 1
            col += 1
            continue
        if ch in _SYMBOLS:
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth = max(0, depth - 1)
            tokens.append(Token("SYM", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            raise ParseError(f"unknown name {text[i:j]!r}", line, col)
        raise ParseError(f"unexpected character {ch!r}", line, col)
    # end of input is reported just after the last real token
    real = [t for t in tokens if t.kind != "NL"]
    if real:
        last = real[-1]
        tokens.append(Token("EOF", "", last.line, last.col + len(last.text)))
    else:
        tokens.append(Token("EOF", "", 1, 1))
    return tokens


def _describe(tok: Token) -> str:
    if tok.kind == "EOF":
        return "end of input"
    if tok.kind == "NL":
        return "end of line"
    return repr(tok.text)


# A parsed expression is linear in the lagged terms: {lag: coefficient}, with
# lag 0 holding the part free of f.
Linear = dict


def _pure(value: XRatFunc) -> Linear:
    return {0: value} if not value.is_zero() else {}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0
        self.lags: list[tuple[int, Token]] = []

    # -- token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Optional[Token] = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("SYM", "NAME") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {_describe(self.tok)}")
        tok = self.tok
        self.pos += 1
        return tok

    def expect_int(self, what: str) -> int:
        if self.tok.kind != "INT":
            raise self.error(f"expected {what}")
        value = int(self.tok.text)
        self.pos += 1
        return value

    # -- statements
    def parse(self):
        """List of (kind, index, value, token) statements.

        For the recurrence statement ``index`` is the largest lag written
        and its token, or None.
        """
        stmts = []
        while True:
            while self.tok.kind == "NL" or self.at(";"):
                self.pos += 1
            if self.tok.kind == "EOF":
                return stmts
            stmts.append(self.statement())
            if not (self.tok.kind in ("NL", "EOF") or self.at(";")):
                raise self.error(f"unexpected {_describe(self.tok)} after statement")

    def statement(self):
        start = self.expect("f")
        self.expect("[")
        if self.at("n"):
            self.pos += 1
            if not self.at("]"):
                raise self.error("left-hand side must be f[n] or f[<integer>]")
            self.expect("]")
            self.expect("=")
            self.lags = []
            rhs = self.expr()
            top = max(self.lags, key=lambda v: v[0], default=None)
            return ("rec", top, rhs, start)
        idx_tok = self.tok
        index = self.expect_int("'n' or an integer index")
        if index > MAX_INDEX:
            raise self.error(f"index {index} is too large", idx_tok)
        self.expect("]")
        self.expect("=")
        expr_tok = self.tok
        rhs = self.expr()
        if set(rhs) - {0}:
            raise self.error("initial values cannot refer to f[n-L]", expr_tok)
        return ("init", index, rhs.get(0, RZERO), idx_tok)

    # -- expressions
    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error("expression nested too deeply")

    def expr(self) -> Linear:
        self.enter()
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.pos += 1
            rhs = self.term()
            value = _add(value, rhs, -1 if op == "-" else 1)
        self.depth -= 1
        return value

    def term(self) -> Linear:
        value = self.unary()
        while self.at("*") or self.at("/"):
            op_tok = self.tok
            self.pos += 1
            rhs = self.unary()
            if op_tok.text == "*":
                value = self._mul(value, rhs, op_tok)
            else:
                if set(rhs) - {0}:
                    raise self.error("cannot divide by a term involving f", op_tok)
                d = rhs.get(0, RZERO)
                if d.is_zero():
                    raise self.error("division by zero", op_tok)
                inv = d.inverse()
                value = {k: v * inv for k, v in value.items()}
        return value

    def _mul(self, a: Linear, b: Linear, tok: Token) -> Linear:
        if set(a) - {0} and set(b) - {0}:
            raise self.error("product of two f terms is not linear", tok)
        if set(b) - {0}:
            a, b = b, a
        s = b.get(0, RZERO)
        return {k: v * s for k, v in a.items() if not (v * s).is_zero()}

    def unary(self) -> Linear:
        if self.at("-") or self.at("+"):
            neg = self.tok.text == "-"
            self.pos += 1
            self.enter()
            value = self.unary()
            self.depth -= 1
            return {k: -v for k, v in value.items()} if neg else value
        return self.power()

    def power(self) -> Linear:
        base_tok = self.tok
        base = self.atom()
        if self.at("^"):
            op_tok = self.tok
            self.pos += 1
            neg = False
            if self.at("-"):
                neg = True
                self.pos += 1
            exp_tok = self.tok
            e = self.expect_int("an integer exponent")
            if e > MAX_EXPONENT:
                raise self.error(f"exponent {e} exceeds {MAX_EXPONENT}", exp_tok)
            if set(base) - {0}:
                raise self.error("powers of f terms are not linear", base_tok)
            b = base.get(0, RZERO)
            if b.is_zero():
                if neg and e > 0:
                    raise self.error("division by zero", op_tok)
                return _pure(RONE) if e == 0 else {}
            if max(b.num.degree, b.den.degree) * e > MAX_DEGREE:
                raise self.error(f"power exceeds degree {MAX_DEGREE}", op_tok)
            return _pure(b ** (-e if neg else e))
        return base

    def atom(self) -> Linear:
        tok = self.tok
        if tok.kind == "INT":
            self.pos += 1
            return _pure(XRatFunc.coerce(int(tok.text)))
        if self.at("x"):
            self.pos += 1
            return _pure(RX)
        if self.at("("):
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if self.at("f"):
            return self.lagged()
        if self.at("n"):
            raise self.error("coefficients may not depend on n")
        raise self.error(f"unexpected {_describe(tok)}")

    def lagged(self) -> Linear:
        start = self.expect("f")
        self.expect("[")
        if not self.at("n"):
            raise self.error("only lagged terms f[n-L] may appear on the right-hand side")
        self.pos += 1
        if not self.at("-"):
            raise self.error("expected f[n-L] with L >= 1")
        self.pos += 1
        lag_tok = self.tok
        lag = self.expect_int("a positive lag")
        if lag < 1:
            raise self.error("lag must be at least 1", lag_tok)
        if lag > MAX_INDEX:
            raise self.error(f"lag {lag} is too large", lag_tok)
        self.expect("]")
        self.lags.append((lag, start))
        return {lag: RONE}


def _add(a: Linear, b: Linear, sign: int) -> Linear:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, RZERO) + (v if sign > 0 else -v)
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def parse_spec(text: str) -> LinearRecurrence:
    """Parse recurrence text; ParseError carries the line and column."""
    p = _Parser(text)
    try:
        stmts = p.parse()
    except DivisionByZero as e:
        raise p.error(f"division by zero ({e})") from None
    rec = None
    inits: dict[int, tuple[XRatFunc, Token]] = {}
    for kind, index, value, tok in stmts:
        if kind == "rec":
            if rec is not None:
                raise ParseError("more than one f[n] = ... statement", tok.line, tok.col)
            rec = (value, tok, index)
        else:
            if index in inits:
                raise ParseError(f"duplicate initial value f[{index}]", tok.line, tok.col)
            inits[index] = (value, tok)
    if rec is None:
        raise ParseError("missing recurrence statement f[n] = ...", 1, 1)
    value, tok, top = rec
    if value.get(0) is not None:
        raise ParseError("right-hand side has a term without f (inhomogeneous)", tok.line, tok.col)
    if top is None:
        raise ParseError("right-hand side has no f[n-L] terms", tok.line, tok.col)
    order, top_tok = top
    if order not in value:
        raise ParseError(
            f"coefficient of f[n-{order}] simplifies to zero, so the order is not {order}",
            top_tok.line,
            top_tok.col,
        )
    coeffs = tuple(value.get(l, RZERO) for l in range(1, order + 1))
    initial = None
    if inits:
        for index, (_, itok) in sorted(inits.items()):
            if index >= order:
                raise ParseError(
                    f"f[{index}] is not an initial value of an order-{order} recurrence", itok.line, itok.col
                )
        missing = [i for i in range(order) if i not in inits]
        if missing:
            last = max(inits.values(), key=lambda v: (v[1].line, v[1].col))[1]
            raise ParseError(
                f"missing initial value(s) {', '.join(f'f[{i}]' for i in missing)}", last.line, last.col
            )
        initial = tuple(inits[i][0] for i in range(order))
    return LinearRecurrence(coeffs, initial)


def parse_expr(text: str) -> XRatFunc:
    """Parse a rational-function expression in x."""
    p = _Parser(text)
    try:
        value = p.expr()
    except DivisionByZero as e:
        raise p.error(f"division by zero ({e})") from None
    if p.tok.kind != "EOF":
        raise p.error(f"unexpected {_describe(p.tok)}")
    if set(value) - {0}:
        raise ParseError("expression refers to f", 1, 1)
    return value.get(0, RZERO)


@dataclass
class RecurrenceSpecSource:
    raw: str
    parsed: Optional[LinearRecurrence] = None
    diagnostics: list[tuple[int, int, str]] = field(default_factory=list)


def read_spec(text: str) -> RecurrenceSpecSource:
    """Non-raising variant of parse_spec that collects the diagnostic."""
    src = RecurrenceSpecSource(text)
    try:
        src.parsed = parse_spec(text)
    except ParseError as e:
        src.diagnostics.append((e.line, e.column, e.message))
    except InvalidArgument as e:
        src.diagnostics.append((1, 1, str(e)))
    return src


# --- printing -----------------------------------------------------------------------


def format_rhs(rec: LinearRecurrence) -> str:
    parts = []
    for l, a in enumerate(rec.coeffs, start=1):
        if a.is_zero():
            continue
        sign, mult = format_coefficient(a)
        body = f"f[n-{l}]" if mult is None else f"{mult}*f[n-{l}]"
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts)


def format_recurrence(rec: LinearRecurrence) -> str:
    return f"f[n] = {format_rhs(rec)}"


def print_spec(rec: LinearRecurrence) -> str:
    lines = [format_recurrence(rec)]
    if rec.initial_values is not None:
        for i, v in enumerate(rec.initial_values):
            lines.append(f"f[{i}] = {format_ratfunc(v)}")
    return "\n".join(lines) + "\n"
