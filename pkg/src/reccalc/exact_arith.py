"""Exact arithmetic in Q, Q[x] and Q(x).

Rationals are :class:`fractions.Fraction`.  ``XPoly`` stores a polynomial in x
as an integer coefficient vector over a single positive denominator, which
keeps products and gcds in integer arithmetic.  ``XRatFunc`` is a reduced
quotient of two ``XPoly`` with a monic denominator, so equal rational
functions always have identical representations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from reccalc.errors import DivisionByZero, ExactDivisionError, InvalidArgument

Rational = Fraction

Scalar = Union[int, Fraction]


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


# --- integer coefficient vectors (ascending powers) ---------------------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _zmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def _zcontent(c: Sequence[int]) -> int:
    g = gcd(*c)
    return -g if c and c[-1] < 0 else g


def _zprimitive(c: Sequence[int]) -> list[int]:
    """Divide out the content; the result has a positive leading coefficient."""
    g = _zcontent(c)
    if g in (0, 1):
        return list(c)
    return [v // g for v in c]


def _zprem_primitive(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Remainder of a by b up to a nonzero integer factor, made primitive."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, bv in enumerate(b):
            r[i + shift] -= lr * bv
        _trim(r)
    if r:
        g = gcd(*r)
        if g > 1:
            r = [v // g for v in r]
    return r


def _zgcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd in Z[x] of two nonzero primitive vectors."""
    if len(a) < len(b):
        a, b = b, a
    a, b = list(a), list(b)
    while b:
        if len(b) == 1:
            return [1]
        a, b = b, _zprem_primitive(a, b)
    return _zprimitive(a)


def _zdivexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient a / b in Z[x]; b must divide a with an integral quotient."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if r:
            raise ExactDivisionError("polynomial division is not exact")
        return []
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if top:
            qk, rem = divmod(top, lb)
            if rem:
                raise ExactDivisionError("polynomial division is not exact")
            q[k] = qk
            for i, bv in enumerate(b):
                r[i + k] -= qk * bv
    if any(r):
        raise ExactDivisionError("polynomial division is not exact")
    return q


# --- XPoly ---------------------------------------------------------------------


class XPoly:
    """Polynomial in x with rational coefficients.

    Value is ``sum(_c[i] * x**i) / _d`` with the integer content of ``_c``
    coprime to ``_d``.  The zero polynomial has ``_c == ()`` and degree -1.
    """

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        fr = [to_rational(v) for v in coeffs]
        d = lcm(*(f.denominator for f in fr)) if fr else 1
        c = [f.numerator * (d // f.denominator) for f in fr]
        self._set(c, d)

    def _set(self, c: list[int], d: int) -> None:
        _trim(c)
        if d < 0:
            c, d = [-v for v in c], -d
        if not c:
            d = 1
        else:
            g = gcd(d, *c)
            if g > 1:
                c = [v // g for v in c]
                d //= g
        self._c = tuple(c)
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, c: list[int], d: int = 1) -> XPoly:
        obj = cls.__new__(cls)
        obj._set(c, d)
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> XPoly:
        return cls((value,))

    @classmethod
    def x(cls) -> XPoly:
        return cls._raw([0, 1])

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> XPoly:
        return cls([0] * degree + [coeff])

    # -- inspection
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self._d) for v in self._c)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    @property
    def lc(self) -> Fraction:
        if not self._c:
            return Fraction(0)
        return Fraction(self._c[-1], self._d)

    def constant_value(self) -> Fraction:
        if len(self._c) > 1:
            raise InvalidArgument("polynomial is not constant")
        return self.lc

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        v = to_rational(value)
        for c in reversed(self._c):
            acc = acc * v + c
        return acc / self._d

    # -- comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self._c == other._c and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == XPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._c, self._d))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"

    def __str__(self) -> str:
        return format_xpoly(self)

    # -- arithmetic
    @staticmethod
    def _coerce(other) -> XPoly | None:
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return XPoly.constant(other)
        return None

    def __neg__(self) -> XPoly:
        return XPoly._raw([-v for v in self._c], self._d)

    def __add__(self, other) -> XPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        d = lcm(self._d, o._d)
        sa, sb = d // self._d, d // o._d
        n = max(len(self._c), len(o._c))
        c = [0] * n
        for i, v in enumerate(self._c):
            c[i] = v * sa
        for i, v in enumerate(o._c):
            c[i] += v * sb
        return XPoly._raw(c, d)

    __radd__ = __add__

    def __sub__(self, other) -> XPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> XPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> XPoly:
        if isinstance(other, int):
            return XPoly._raw([v * other for v in self._c], self._d)
        if isinstance(other, Fraction):
            return XPoly._raw([v * other.numerator for v in self._c], self._d * other.denominator)
        if not isinstance(other, XPoly):
            return NotImplemented
        return XPoly._raw(_zmul(self._c, other._c), self._d * other._d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> XPoly:
        if e < 0:
            raise InvalidArgument("negative exponent for a polynomial")
        result = XPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, s: Scalar) -> XPoly:
        return self * to_rational(s)

    def monic(self) -> XPoly:
        if not self._c:
            return self
        return XPoly._raw(list(self._c), self._c[-1])

    def primitive(self) -> tuple[int, ...]:
        """Integer primitive associate with positive leading coefficient."""
        return tuple(_zprimitive(self._c))

    def derivative(self) -> XPoly:
        return XPoly._raw([i * v for i, v in enumerate(self._c)][1:], self._d)

    def __divmod__(self, other: XPoly) -> tuple[XPoly, XPoly]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._c:
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        b = o.coeffs
        db = len(b) - 1
        inv = 1 / b[-1]
        if len(r) - 1 < db:
            return XPoly(), self
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            qk = r[k + db] * inv
            if qk:
                q[k] = qk
                for i, bv in enumerate(b):
                    r[i + k] -= qk * bv
        return XPoly(q), XPoly(r[:db])

    def __floordiv__(self, other) -> XPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> XPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: XPoly | Scalar) -> XPoly:
        """Quotient self / other, raising ExactDivisionError on a remainder."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide XPoly by {other!r}")
        if not o._c:
            raise DivisionByZero("polynomial division by zero")
        if not self._c:
            return self
        cont = _zcontent(o._c)
        prim = [v // cont for v in o._c]
        q = _zdivexact(self._c, prim)
        # self/o = (A/da) / (cont*prim/db) = (A/prim) * db / (da*cont)
        num = [v * o._d for v in q]
        den = self._d * cont
        if den < 0:
            num, den = [-v for v in num], -den
        return XPoly._raw(num, den)


ZERO = XPoly()
ONE = XPoly.constant(1)
X = XPoly.x()


def xpoly_derivative(p: XPoly) -> XPoly:
    return p.derivative()


def xpoly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Monic gcd in Q[x] by a primitive Euclidean remainder sequence over Z."""
    if a.is_zero() and b.is_zero():
        raise InvalidArgument("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return ONE
    if a == b:
        return a.monic()
    g = _zgcd(_zprimitive(a._c), _zprimitive(b._c))
    return XPoly._raw(g, g[-1])


def xpoly_lcm(a: XPoly, b: XPoly) -> XPoly:
    if a.is_zero() or b.is_zero():
        raise InvalidArgument("lcm with zero is undefined")
    return (a * b.exact_div(xpoly_gcd(a, b))).monic()


# --- XRatFunc ------------------------------------------------------------------


class XRatFunc:
    """Element of Q(x) in lowest terms with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: XPoly | Scalar = 0, den: XPoly | Scalar = 1):
        num = num if isinstance(num, XPoly) else XPoly.constant(to_rational(num))
        den = den if isinstance(den, XPoly) else XPoly.constant(to_rational(den))
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self._init(ZERO, ONE)
            return
        if den.degree > 0 and num.degree >= 0:
            g = xpoly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        self._init(num, den)

    def _init(self, num: XPoly, den: XPoly) -> None:
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _canon(cls, num: XPoly, den: XPoly) -> XRatFunc:
        obj = cls.__new__(cls)
        obj._init(num, den)
        return obj

    @classmethod
    def coerce(cls, value) -> XRatFunc:
        if isinstance(value, XRatFunc):
            return value
        if isinstance(value, XPoly):
            return cls._canon(value, ONE)
        if isinstance(value, (int, Fraction)):
            return cls._canon(XPoly.constant(value), ONE)
        if isinstance(value, str):
            from reccalc.dsl import parse_expr

            return parse_expr(value)
        raise TypeError(f"cannot interpret {value!r} as a rational function")

    # -- inspection
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __call__(self, value: Scalar) -> Fraction:
        d = self.den(value)
        if d == 0:
            raise DivisionByZero(f"pole at x = {value}")
        return self.num(value) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, XRatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, XPoly)):
            return self == XRatFunc.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __repr__(self) -> str:
        return f"XRatFunc({str(self)!r})"

    def __str__(self) -> str:
        return format_ratfunc(self)

    # -- field operations
    @staticmethod
    def _other(other) -> XRatFunc | None:
        if isinstance(other, XRatFunc):
            return other
        if isinstance(other, (int, Fraction, XPoly)):
            return XRatFunc.coerce(other)
        return None

    def __neg__(self) -> XRatFunc:
        return XRatFunc._canon(-self.num, self.den)

    def __add__(self, other) -> XRatFunc:
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == d:
            return XRatFunc(a + c, b)
        g = xpoly_gcd(b, d)
        if g.degree == 0:
            return XRatFunc._canon(a * d + c * b, b * d)
        b1 = b.exact_div(g)
        d1 = d.exact_div(g)
        n = a * d1 + c * b1
        if n.is_zero():
            return XRatFunc._canon(ZERO, ONE)
        g2 = xpoly_gcd(n, g)
        if g2.degree > 0:
            n = n.exact_div(g2)
            return XRatFunc._canon(n, b1 * d.exact_div(g2))
        return XRatFunc._canon(n, b1 * d)

    __radd__ = __add__

    def __sub__(self, other) -> XRatFunc:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> XRatFunc:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> XRatFunc:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return XRatFunc._canon(ZERO, ONE)
            return XRatFunc._canon(self.num * other, self.den)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return XRatFunc._canon(ZERO, ONE)
        a, b, c, d = self.num, self.den, o.num, o.den
        if d.degree > 0:
            g1 = xpoly_gcd(a, d)
            if g1.degree > 0:
                a, d = a.exact_div(g1), d.exact_div(g1)
        if b.degree > 0:
            g2 = xpoly_gcd(c, b)
            if g2.degree > 0:
                c, b = c.exact_div(g2), b.exact_div(g2)
        return XRatFunc._canon(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> XRatFunc:
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        lc = self.num.lc
        return XRatFunc._canon(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other) -> XRatFunc:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> XRatFunc:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> XRatFunc:
        if e < 0:
            return self.inverse() ** (-e)
        # num/den already coprime, so powers stay reduced
        return XRatFunc._canon(self.num**e, self.den**e)

    def derivative(self) -> XRatFunc:
        a, b = self.num, self.den
        if b.degree == 0:
            return XRatFunc._canon(a.derivative(), ONE)
        return XRatFunc(a.derivative() * b - a * b.derivative(), b * b)


RZERO = XRatFunc()
RONE = XRatFunc(1)
RX = XRatFunc(X)


def ratfunc_arith(a: XRatFunc, b: XRatFunc, op: str) -> XRatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InvalidArgument(f"unknown operation {op!r}")


def ratfunc_derivative(a: XRatFunc) -> XRatFunc:
    return a.derivative()


# --- text formatting ------------------------------------------------------------


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _xpoly_terms(p: XPoly) -> list[tuple[int, str]]:
    """(sign, body) pairs in descending degree, bodies without sign."""
    out = []
    for i in range(p.degree, -1, -1):
        c = Fraction(p._c[i], p._d)
        if c == 0:
            continue
        sign = -1 if c < 0 else 1
        a = abs(c)
        if i == 0:
            body = _fmt_rational(a)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if a == 1 else f"{_fmt_rational(a)}*{mono}"
        out.append((sign, body))
    return out


def format_xpoly(p: XPoly) -> str:
    terms = _xpoly_terms(p)
    if not terms:
        return "0"
    sign, body = terms[0]
    s = ("-" if sign < 0 else "") + body
    for sign, body in terms[1:]:
        s += (" - " if sign < 0 else " + ") + body
    return s


def _is_atomic(p: XPoly) -> bool:
    """True when the polynomial prints as a single unsigned product."""
    terms = _xpoly_terms(p)
    return len(terms) == 1 and "/" not in terms[0][1]


def format_ratfunc(r: XRatFunc) -> str:
    if r.den.degree == 0:
        return format_xpoly(r.num)
    num = format_xpoly(r.num)
    den = format_xpoly(r.den)
    if not _is_atomic(r.num):
        num = f"({num})"
    if not _is_atomic(r.den):
        den = f"({den})"
    return f"{num}/{den}"


def split_sign(r: XRatFunc) -> tuple[int, XRatFunc]:
    """Sign that printing pulls out front, and the remaining magnitude."""
    if r.num.lc < 0:
        return -1, -r
    return 1, r


def format_coefficient(r: XRatFunc) -> tuple[int, str | None]:
    """Sign and multiplier text for ``coeff*thing``; None means a unit."""
    sign, mag = split_sign(r)
    if mag == RONE:
        return sign, None
    if mag.den.degree == 0 and len(_xpoly_terms(mag.num)) == 1:
        return sign, format_xpoly(mag.num)
    return sign, f"({format_ratfunc(mag)})"
