"""Exact arithmetic in Q(i)(s), with q = s**2.

Every scalar that shows up in the Grassmann module (including k, k', u and
tau, which carry half-integer powers of q and a factor sqrt(-1)) lives in
this field.  An element is stored as ``re + i*im`` where ``re`` and ``im``
are reduced rational functions of s over Q.  Reduced means the numerator
and denominator are coprime and the denominator is monic, so two elements
are equal exactly when their stored data are equal.

Conventions: s is the positive real square root of q and i is the root of
-1 in the upper half plane.  Complex conjugation sends i to -i and fixes s.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from flint import fmpq, fmpq_poly

__all__ = [
    "ScalarError",
    "DivisionByZero",
    "PoleError",
    "NotRationalInQ",
    "GaussianRational",
    "ExactScalar",
    "ZERO",
    "ONE",
    "I",
    "S",
    "Q",
    "qpow",
    "as_scalar",
    "conjugate",
    "eval_numeric",
    "eval_at_s",
    "specialize_q",
    "render",
    "parse",
]


class ScalarError(ArithmeticError):
    pass


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass


class PoleError(ScalarError):
    pass


class NotRationalInQ(ScalarError):
    pass


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, fmpq):
        return Fraction(int(c.p), int(c.q))
    return Fraction(c)


@dataclass(frozen=True)
class GaussianRational:
    """``re + im*sqrt(-1)`` with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _to_fraction(self.re))
        object.__setattr__(self, "im", _to_fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction, fmpq)) or isinstance(x, Rational):
            return cls(_to_fraction(x))
        if isinstance(x, complex):
            raise TypeError("floats are not exact")
        return NotImplemented

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise DivisionByZero("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other):
        o = GaussianRational.coerce(other) if not isinstance(other, GaussianRational) else other
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"{self.re} + {self.im}*i"


# -- rational functions of s over Q ----------------------------------------

_P0 = fmpq_poly([])
_P1 = fmpq_poly([1])


def _reduce(num: fmpq_poly, den: fmpq_poly):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return _P0, _P1
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num // g
            den = den // g
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


class _QS:
    """Reduced rational function of s with rational coefficients."""

    __slots__ = ("num", "den")

    def __init__(self, num: fmpq_poly, den: fmpq_poly = _P1, reduced=False):
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, o):
        if self.num.is_zero():
            return o
        if o.num.is_zero():
            return self
        if self.den == o.den:
            return _QS(self.num + o.num, self.den)
        return _QS(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        if o.num.is_zero():
            return self
        if self.den == o.den:
            return _QS(self.num - o.num, self.den)
        return _QS(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self):
        return _QS(-self.num, self.den, reduced=True)

    def __mul__(self, o):
        if self.num.is_zero() or o.num.is_zero():
            return _QZERO
        if self.den.degree() == 0 and o.den.degree() == 0:
            return _QS(self.num * o.num, _P1, reduced=True)
        return _QS(self.num * o.num, self.den * o.den)

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of 0")
        return _QS(self.den, self.num)

    def __eq__(self, o):
        return self.num == o.num and self.den == o.den

    def key(self):
        return (tuple(self.num.coeffs()), tuple(self.den.coeffs()))


_QZERO = _QS(_P0, _P1, reduced=True)
_QONE = _QS(_P1, _P1, reduced=True)


def _qs_const(c) -> _QS:
    c = _to_fraction(c)
    if c == 0:
        return _QZERO
    return _QS(fmpq_poly([fmpq(c.numerator, c.denominator)]), _P1, reduced=True)


def _s_power(n: int) -> _QS:
    if n >= 0:
        return _QS(fmpq_poly([0] * n + [1]), _P1, reduced=True)
    return _QS(_P1, fmpq_poly([0] * (-n) + [1]), reduced=True)


class ExactScalar:
    """Element ``re + i*im`` of Q(i)(s).

    Instances are immutable.  Arithmetic with ``int``, ``Fraction`` and
    :class:`GaussianRational` operands is supported.
    """

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re: _QS = _QZERO, im: _QS = _QZERO):
        self.re = re
        self.im = im
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c) -> "ExactScalar":
        if isinstance(c, ExactScalar):
            return c
        if isinstance(c, GaussianRational):
            return cls(_qs_const(c.re), _qs_const(c.im))
        return cls(_qs_const(c))

    @classmethod
    def from_poly(cls, coeffs, shift: int = 0) -> "ExactScalar":
        """Real Laurent polynomial ``sum coeffs[j] * s**(j + shift)``."""
        p = fmpq_poly([fmpq(_to_fraction(c).numerator, _to_fraction(c).denominator) for c in coeffs])
        if shift >= 0:
            return cls(_QS(p * fmpq_poly([0] * shift + [1])))
        return cls(_QS(p, fmpq_poly([0] * (-shift) + [1])))

    @property
    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return o
        return ExactScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return o
        if self.im.is_zero() and o.im.is_zero():
            return ExactScalar(self.re * o.re)
        if self.im.is_zero():
            return ExactScalar(self.re * o.re, self.re * o.im)
        if o.im.is_zero():
            return ExactScalar(self.re * o.re, self.im * o.re)
        return ExactScalar(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(i)(s)")
        if self.im.is_zero():
            return ExactScalar(self.re.inverse())
        if self.re.is_zero():
            return ExactScalar(_QZERO, -self.im.inverse())
        n = (self.re * self.re + self.im * self.im).inverse()
        return ExactScalar(self.re * n, -(self.im * n))

    def __truediv__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.re.key(), self.im.key()))
        return self._hash

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def __repr__(self):
        return f"ExactScalar({render(self)!r})"

    def __str__(self):
        return render(self)

    # exponents of s appearing anywhere, used by specialize_q
    def _exponents(self):
        out = set()
        for part in (self.re, self.im):
            for poly in (part.num, part.den):
                for j, c in enumerate(poly.coeffs()):
                    if c != 0:
                        out.add(j)
        return out


def as_scalar(x):
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction, GaussianRational, fmpq)):
        return ExactScalar.const(x)
    return NotImplemented


ZERO = ExactScalar()
ONE = ExactScalar(_QONE)
I = ExactScalar(_QZERO, _QONE)
S = ExactScalar(_s_power(1))
Q = ExactScalar(_s_power(2))


def qpow(e) -> ExactScalar:
    """q**e for integer or half-integer e."""
    e = Fraction(e)
    if (2 * e).denominator != 1:
        raise ValueError(f"q^{e} is outside Q(i)(q^(1/2))")
    return ExactScalar(_s_power(int(2 * e)))


def conjugate(x: ExactScalar) -> ExactScalar:
    return as_scalar(x).conjugate()


def _eval_qs(f: _QS, s_val):
    return f.num(s_val), f.den(s_val)


def eval_at_s(x: ExactScalar, s_value) -> GaussianRational:
    """Exact value at a rational point s = s_value."""
    x = as_scalar(x)
    sv = fmpq(_to_fraction(s_value).numerator, _to_fraction(s_value).denominator)
    parts = []
    for f in (x.re, x.im):
        n, d = _eval_qs(f, sv)
        if d == 0:
            raise PoleError(f"pole at s = {s_value}")
        parts.append(_to_fraction(n / d))
    return GaussianRational(*parts)


def specialize_q(x: ExactScalar, q) -> GaussianRational:
    """Substitute s**2 -> q.  Only defined when every s-exponent is even."""
    x = as_scalar(x)
    if any(e % 2 for e in x._exponents()):
        raise NotRationalInQ("not a rational function of q")
    qv = _to_fraction(q)
    parts = []
    for f in (x.re, x.im):
        n = sum((_to_fraction(c) * qv ** (j // 2) for j, c in enumerate(f.num.coeffs()) if c != 0), Fraction(0))
        d = sum((_to_fraction(c) * qv ** (j // 2) for j, c in enumerate(f.den.coeffs()) if c != 0), Fraction(0))
        if d == 0:
            raise PoleError(f"pole at q = {q}")
        parts.append(n / d)
    return GaussianRational(*parts)


def eval_numeric(x: ExactScalar, q) -> complex:
    """Floating point value at s = +sqrt(q).  Diagnostics only."""
    x = as_scalar(x)
    sv = math.sqrt(q)
    out = []
    for f in (x.re, x.im):
        n = sum(float(_to_fraction(c)) * sv**j for j, c in enumerate(f.num.coeffs()))
        d = sum(float(_to_fraction(c)) * sv**j for j, c in enumerate(f.den.coeffs()))
        # exact test for a pole first; float d can be tiny without vanishing
        if q == int(q) and f.den.degree() > 0:
            if x is not None and _pole_exact(f.den, q):
                raise PoleError(f"pole at q = {q}")
        if d == 0:
            raise PoleError(f"pole at q = {q}")
        out.append(n / d)
    return complex(out[0], out[1])


def _pole_exact(den: fmpq_poly, q) -> bool:
    # den(sqrt q) = E(q) + sqrt(q) O(q); both parts vanish iff a pole
    ev = Fraction(0)
    od = Fraction(0)
    qv = Fraction(q)
    for j, c in enumerate(den.coeffs()):
        if j % 2:
            od += _to_fraction(c) * qv ** (j // 2)
        else:
            ev += _to_fraction(c) * qv ** (j // 2)
    if od == 0:
        return ev == 0
    r = ev / od  # den = 0 iff sqrt(q) = -ev/od
    return r <= 0 and r * r == qv


# -- text rendering and parsing --------------------------------------------


def _fmt_exp(e: int) -> str:
    # e is an exponent of s
    if e % 2 == 0:
        k = e // 2
        if k == 1:
            return "q"
        return f"q^{k}" if k > 0 else f"q^({k})"
    return f"q^({e}/2)"


def _fmt_poly(poly: fmpq_poly, shift: int = 0) -> str:
    terms = []
    coeffs = poly.coeffs()
    for j in range(len(coeffs) - 1, -1, -1):
        c = _to_fraction(coeffs[j])
        if c == 0:
            continue
        e = j + shift
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _fmt_exp(e)
        else:
            body = f"{a}*{_fmt_exp(e)}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _lowest(poly: fmpq_poly) -> int:
    for j, c in enumerate(poly.coeffs()):
        if c != 0:
            return j
    return 0


def _fmt_qs(f: _QS) -> str:
    if f.is_zero():
        return "0"
    shift = _lowest(f.num) - _lowest(f.den)
    num = f.num.right_shift(_lowest(f.num)) if hasattr(f.num, "right_shift") else f.num
    den = f.den.right_shift(_lowest(f.den))
    top = _fmt_poly(num, shift)
    if den == _P1:
        return top
    if len([c for c in num.coeffs() if c != 0]) > 1:
        top = f"({top})"
    return f"{top}/({_fmt_poly(den)})"


def render(x: ExactScalar) -> str:
    """Canonical text form, e.g. ``-q^(-7/2)`` or ``i*(q^(-3/2))``."""
    x = as_scalar(x)
    if x.im.is_zero():
        return _fmt_qs(x.re)
    im = f"i*({_fmt_qs(x.im)})"
    if x.re.is_zero():
        return im
    return f"{_fmt_qs(x.re)} + {im}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        for m in _TOKEN.finditer(text):
            if m.group(1) is not None:
                self.toks.append(("int", int(m.group(1))))
            elif m.group(2).strip():
                self.toks.append(("op", m.group(2)))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self, val=None):
        tok = self.peek()
        if tok[0] is None or (val is not None and tok[1] != val):
            raise ValueError(f"parse error near token {self.pos}: expected {val!r}, got {tok[1]!r}")
        self.pos += 1
        return tok

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            w = self.unary()
            v = v * w if op == "*" else v / w
        return v

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def exponent(self) -> Fraction:
        if self.peek()[1] == "(":
            self.take("(")
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            n = Fraction(self.take()[1])
            if self.peek()[1] == "/":
                self.take()
                n /= self.take()[1]
            self.take(")")
            return -n if neg else n
        kind, val = self.take()
        if kind != "int":
            raise ValueError("bad exponent")
        return Fraction(val)

    def power(self):
        kind, val = self.peek()
        is_q = val == "q"
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            e = self.exponent()
            if is_q:
                return qpow(e)
            if e.denominator != 1:
                raise ValueError("fractional exponent only allowed on q")
            return base ** int(e)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return ExactScalar.const(val)
        if val == "q":
            return Q
        if val == "i":
            return I
        if val == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ValueError(f"unexpected token {val!r}")


def parse(text: str) -> ExactScalar:
    """Inverse of :func:`render`."""
    p = _Parser(text)
    v = p.expr()
    if p.pos != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return v
