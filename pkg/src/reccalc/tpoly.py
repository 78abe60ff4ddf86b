"""Polynomials in t over Q(x): characteristic polynomials and their algebra.

GCDs run a subresultant remainder sequence in Q[x][t] after clearing
denominators; resultants evaluate the Sylvester determinant by Bareiss
fraction-free elimination.  Both avoid working with roots.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from reccalc.errors import DivisionByZero, ExactDivisionError, InvalidArgument
from reccalc.exact_arith import (
    ONE,
    RONE,
    RZERO,
    XPoly,
    XRatFunc,
    format_coefficient,
    xpoly_gcd,
    xpoly_lcm,
)


class TPoly:
    """Polynomial in t with XRatFunc coefficients, ascending powers of t."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [XRatFunc.coerce(v) for v in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs: tuple[XRatFunc, ...] = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list[XRatFunc]) -> TPoly:
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value) -> TPoly:
        return cls((value,))

    @classmethod
    def t(cls) -> TPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> TPoly:
        return cls([0] * degree + [coeff])

    # -- inspection
    @property
    def degree(self) -> int:
        """Degree in t; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> XRatFunc:
        return self.coeffs[-1] if self.coeffs else RZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == RONE

    def has_polynomial_coeffs(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def coeff(self, i: int) -> XRatFunc:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, XPoly, XRatFunc)):
            return self == TPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"

    def __str__(self) -> str:
        return format_tpoly(self)

    # -- ring operations
    @staticmethod
    def _other(other) -> TPoly | None:
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction, XPoly, XRatFunc)):
            return TPoly.constant(other)
        return None

    def __neg__(self) -> TPoly:
        return TPoly._raw([-c for c in self.coeffs])

    def __add__(self, other) -> TPoly:
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return TPoly._raw([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> TPoly:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> TPoly:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> TPoly:
        if isinstance(other, (int, Fraction, XPoly, XRatFunc)):
            s = XRatFunc.coerce(other)
            return TPoly._raw([c * s for c in self.coeffs])
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return TPoly()
        out = [RZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TPoly:
        if e < 0:
            raise InvalidArgument("negative exponent for a polynomial")
        result = TPoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def shift(self, m: int) -> TPoly:
        """Multiply by t**m."""
        if self.is_zero():
            return self
        return TPoly._raw([RZERO] * m + list(self.coeffs))

    def __divmod__(self, other) -> tuple[TPoly, TPoly]:
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by the zero polynomial in t")
        r = list(self.coeffs)
        db = o.degree
        if len(r) - 1 < db:
            return TPoly(), self
        inv = o.lc.inverse()
        q = [RZERO] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            top = r[k + db]
            if top.is_zero():
                continue
            qk = top * inv
            q[k] = qk
            for i, b in enumerate(o.coeffs):
                if not b.is_zero():
                    r[i + k] = r[i + k] - qk * b
        return TPoly._raw(q), TPoly._raw(r[:db])

    def __floordiv__(self, other) -> TPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> TPoly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> TPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ExactDivisionError(f"({self}) is not divisible by ({other})")
        return q

    def monic(self) -> TPoly:
        if self.is_zero() or self.is_monic():
            return self
        inv = self.lc.inverse()
        return TPoly._raw([c * inv for c in self.coeffs])

    def x_derivative(self) -> TPoly:
        return TPoly._raw([c.derivative() for c in self.coeffs])

    def eval_x(self, value) -> list[Fraction]:
        return [c(value) for c in self.coeffs]


ZERO_T = TPoly()
ONE_T = TPoly.constant(1)
T = TPoly.t()


def tpoly_x_derivative(p: TPoly) -> TPoly:
    return p.x_derivative()


def tpoly_exact_div(p: TPoly, d: TPoly) -> TPoly:
    """Quotient p / d; ExactDivisionError when d does not divide p.

    The quotient is returned as is (not rescaled), so p == q * d holds.  For
    monic p and d it is monic.
    """
    if d.is_zero():
        raise InvalidArgument("division by the zero polynomial in t")
    return p.exact_div(d)


# --- gcd in Q[x][t] ---------------------------------------------------------------

# Dense lists of XPoly, ascending in t, with nonzero leading entry.
_DPoly = list


def _clear_denominators(p: TPoly) -> _DPoly:
    """Primitive associate of p in Q[x][t]."""
    den = ONE
    for c in p.coeffs:
        if c.den.degree > 0:
            den = xpoly_lcm(den, c.den)
    out = [c.num * den.exact_div(c.den) for c in p.coeffs]
    return _primitive_part(out)


def _content(a: _DPoly) -> XPoly:
    g = XPoly()
    for c in a:
        if not c.is_zero():
            g = xpoly_gcd(g, c) if not g.is_zero() else c.monic()
            if g.degree == 0:
                return ONE
    return g


def _primitive_part(a: _DPoly) -> _DPoly:
    g = _content(a)
    if g.degree <= 0:
        return a
    return [c.exact_div(g) for c in a]


def _dprem(a: _DPoly, b: _DPoly) -> _DPoly:
    """lc(b)**(deg a - deg b + 1) * a  mod  b, using only ring operations."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[i + shift] = r[i + shift] - lr * bc
        while r and r[-1].is_zero():
            r.pop()
        e -= 1
    if e > 0 and r:
        f = lb**e
        r = [f * c for c in r]
    return r


def subresultant_gcd(a: _DPoly, b: _DPoly) -> _DPoly:
    """Last nonzero member of the subresultant PRS of a and b over Q[x].

    The result is a gcd of a and b in Q(x)[t] up to a factor from Q(x).
    A constant (degree 0) result means the inputs are coprime.
    """
    if len(a) < len(b):
        a, b = b, a
    g = ONE
    h = ONE
    while True:
        delta = len(a) - len(b)
        r = _dprem(a, b)
        if not r:
            return b
        if len(r) == 1:
            return [ONE]
        div = g * h**delta
        a, b = b, [c.exact_div(div) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).exact_div(h ** (delta - 1))


def tpoly_gcd(p: TPoly, q: TPoly) -> TPoly:
    """Monic gcd of p and q in Q(x)[t]; 1 when they are coprime."""
    if p.is_zero() and q.is_zero():
        raise InvalidArgument("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return ONE_T
    g = subresultant_gcd(_clear_denominators(p), _clear_denominators(q))
    if len(g) == 1:
        return ONE_T
    return TPoly(_primitive_part(g)).monic()


def tpoly_lcm(p: TPoly, q: TPoly) -> TPoly:
    if p.is_zero() or q.is_zero():
        raise InvalidArgument("lcm with the zero polynomial is undefined")
    g = tpoly_gcd(p, q)
    return (p * q).exact_div(g).monic()


# --- resultants ---------------------------------------------------------------------


def _check_zpoly(f: Sequence[TPoly], name: str) -> list[TPoly]:
    f = [c if isinstance(c, TPoly) else TPoly.constant(c) for c in f]
    if not f or all(c.is_zero() for c in f):
        raise InvalidArgument(f"{name} is the zero polynomial in z")
    if f[-1].is_zero():
        raise InvalidArgument(f"{name}: declared z-degree {len(f) - 1} exceeds the actual degree")
    return f


def _zpoly_denominator(f: list[TPoly]) -> XPoly:
    den = ONE
    for c in f:
        for r in c.coeffs:
            if r.den.degree > 0:
                den = xpoly_lcm(den, r.den)
    return den


def sylvester_matrix(f: Sequence[TPoly], g: Sequence[TPoly]) -> list[list[TPoly]]:
    """Sylvester matrix in z of f, g given as ascending coefficient lists."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    fd = list(reversed(f))
    gd = list(reversed(g))
    for i in range(n):
        rows.append([ZERO_T] * i + fd + [ZERO_T] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO_T] * i + gd + [ZERO_T] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: Sequence[Sequence[TPoly]]) -> TPoly:
    """Determinant over Q(x)[t] by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return ONE_T
    sign = 1
    prev = ONE_T
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO_T
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = v.exact_div(prev) if prev != ONE_T else v
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def tpoly_resultant_z(f: Sequence[TPoly], g: Sequence[TPoly]) -> TPoly:
    """Res_z(f, g) for f, g in Q(x)[t][z], coefficient lists ascending in z.

    Denominators from Q[x] are cleared before elimination and the scaling is
    undone afterwards: Res(c f, d g) = c**deg(g) d**deg(f) Res(f, g).
    """
    f = _check_zpoly(f, "f")
    g = _check_zpoly(g, "g")
    cf = _zpoly_denominator(f)
    cg = _zpoly_denominator(g)
    fc = [c * cf for c in f]
    gc = [c * cg for c in g]
    det = bareiss_det(sylvester_matrix(fc, gc))
    m, n = len(f) - 1, len(g) - 1
    scale = XRatFunc(cf**n * cg**m)
    return det * scale.inverse()


# --- formatting -----------------------------------------------------------------------


def format_tpoly(p: TPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c.is_zero():
            continue
        sign, mult = format_coefficient(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            body = mult if mult is not None else "1"
        elif mult is None:
            body = mono
        else:
            body = f"{mult}*{mono}"
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts)
