"""Exact arithmetic in Q(sqrt 5) on the basis {1, phi}.

Every element is stored as ``u + v*phi`` with ``u, v`` rationals and
``phi = (1 + sqrt 5)/2``.  Since ``phi**2 = phi + 1``, powers of phi have
integer (Fibonacci) coordinates, which keeps the Binet-side identities
exact.  ``sqrt 5`` is the element ``2*phi - 1``.

Nothing in this module touches floating point: signs are decided by
rational squaring against 5 and decimal digits come from ``math.isqrt``
followed by an exact correction step.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Rat = Fraction
Coercible = Union["GoldenNum", int, Fraction]


@dataclass(frozen=True, slots=True)
class GoldenNum:
    """The number ``u + v*phi``; components are always reduced Fractions."""

    u: Fraction
    v: Fraction = Fraction(0)

    def __post_init__(self):
        # Fraction already keeps lowest terms; we only coerce ints here.
        if not isinstance(self.u, Fraction):
            object.__setattr__(self, "u", Fraction(self.u))
        if not isinstance(self.v, Fraction):
            object.__setattr__(self, "v", Fraction(self.v))

    @classmethod
    def coerce(cls, x: Coercible) -> GoldenNum:
        if isinstance(x, GoldenNum):
            return x
        if isinstance(x, (int, Rational)):
            return cls(Fraction(x))
        raise TypeError(f"cannot interpret {x!r} as an element of Q(sqrt 5)")

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def __add__(self, other):
        try:
            return add(self, other)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GoldenNum(-self.u, -self.v)

    def __sub__(self, other):
        try:
            return add(self, -GoldenNum.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return add(GoldenNum.coerce(other), -self)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            return mul(self, other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            return mul(self, inv(GoldenNum.coerce(other)))
        except TypeError:
            return NotImplemented

    def __rtruediv__(self, other):
        try:
            return mul(GoldenNum.coerce(other), inv(self))
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return _power(inv(self), -k)
        return _power(self, k)

    def __eq__(self, other):
        try:
            other = GoldenNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __abs__(self):
        return -self if sign(self) < 0 else self

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __str__(self):
        return format_golden(self)

    def __repr__(self):
        return f"GoldenNum({self.u!s}, {self.v!s})"


ZERO = GoldenNum(0)
ONE = GoldenNum(1)
PHI = GoldenNum(0, 1)
PHI_INV = GoldenNum(-1, 1)
SQRT5 = GoldenNum(-1, 2)


def add(x: Coercible, y: Coercible) -> GoldenNum:
    x, y = GoldenNum.coerce(x), GoldenNum.coerce(y)
    return GoldenNum(x.u + y.u, x.v + y.v)


def mul(x: Coercible, y: Coercible) -> GoldenNum:
    """Field product, reducing with phi**2 = phi + 1."""
    x, y = GoldenNum.coerce(x), GoldenNum.coerce(y)
    vv = x.v * y.v
    return GoldenNum(x.u * y.u + vv, x.u * y.v + y.u * x.v + vv)


def conj(x: Coercible) -> GoldenNum:
    """Galois conjugate, sending phi to 1 - phi = -1/phi."""
    x = GoldenNum.coerce(x)
    return GoldenNum(x.u + x.v, -x.v)


def norm(x: Coercible) -> Fraction:
    """``x * conj(x)``, which is ``u**2 + u*v - v**2``."""
    x = GoldenNum.coerce(x)
    return x.u * x.u + x.u * x.v - x.v * x.v


def inv(x: Coercible) -> GoldenNum:
    x = GoldenNum.coerce(x)
    n = norm(x)
    if n == 0:
        raise ZeroDivisionError("inverse of zero in Q(sqrt 5)")
    c = conj(x)
    return GoldenNum(c.u / n, c.v / n)


def _power(x: GoldenNum, k: int) -> GoldenNum:
    result = ONE
    while k:
        if k & 1:
            result = mul(result, x)
        k >>= 1
        if k:
            x = mul(x, x)
    return result


def phi_pow(k: int) -> GoldenNum:
    """Exact ``phi**k`` for any integer k, by repeated squaring.

    For negative k the base is ``1/phi = phi - 1``, so coordinates stay
    integral either way.
    """
    if k < 0:
        return _power(PHI_INV, -k)
    return _power(PHI, k)


def _sign_surd(pn: int, pd: int, qn: int, qd: int) -> int:
    """Sign of ``pn/pd + (qn/qd) * sqrt5`` for positive denominators."""
    sp = (pn > 0) - (pn < 0)
    sq = (qn > 0) - (qn < 0)
    if sp == 0 or sq == 0 or sp == sq:
        return sp or sq
    # opposite signs: the term with the larger square wins
    lhs = pn * qd
    rhs = qn * pd
    return sp if lhs * lhs > 5 * rhs * rhs else sq


def sign(x: Coercible) -> int:
    """Exact sign of ``u + v*phi`` using rational arithmetic only.

    ``u + v*phi = ((2u + v) + v*sqrt5) / 2``; when the two parts have
    opposite signs their squares are compared against each other.
    """
    x = GoldenNum.coerce(x)
    p = 2 * x.u + x.v
    return _sign_surd(p.numerator, p.denominator, x.v.numerator, x.v.denominator)


def _floor(x: GoldenNum, guard: int = 5) -> int:
    """Exact floor of a real element of Q(sqrt 5)."""
    if x.v == 0:
        return math.floor(x.u)
    # extra guard digits so the isqrt error times |v| stays below 10**-guard
    mag = abs(x.v)
    # |v| < 2**(nb - db + 1); ceil of that in decimal digits
    bits = mag.numerator.bit_length() - mag.denominator.bit_length() + 1
    g = guard + max(0, -(-bits * 30103 // 100000) + 1)
    scale = 10 ** g
    root5 = math.isqrt(5 * scale * scale)
    approx = x.u * scale + x.v * Fraction(scale + root5, 2)
    n = math.floor(approx / scale)
    while sign(x - n) < 0:
        n -= 1
    while sign(x - (n + 1)) >= 0:
        n += 1
    return n


def to_decimal(x: Coercible, digits: int, guard: int = 5) -> str:
    """Decimal expansion of x with ``digits`` fractional digits, truncated
    toward zero.

    The integer square root gives a first estimate; exact sign tests then
    pin the truncated value, so every printed digit is correct.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if guard < 5:
        raise ValueError("guard must be >= 5")
    x = GoldenNum.coerce(x)
    neg = sign(x) < 0
    scaled = abs(x) * (10 ** digits)
    n = _floor(scaled, guard)
    int_part, frac_part = divmod(n, 10 ** digits)
    text = f"{int_to_str(int_part)}.{int_to_str(frac_part).rjust(digits, '0')}"
    return "-" + text if neg and n else text


def _log10_hint(q: Fraction) -> int:
    if q == 0:
        return 0
    q = abs(q)
    return (q.numerator.bit_length() - q.denominator.bit_length()) * 30103 // 100000


def neg_log10_floor(x: Coercible, limit: int = 10 ** 7) -> int | None:
    """Largest integer d with ``|x| <= 10**-d``.

    Returns None for x == 0.  Search is capped at ``limit``; an element
    smaller than ``10**-limit`` reports ``limit``.
    """
    x = abs(GoldenNum.coerce(x))
    if x == ZERO:
        return None
    # |x| <= 10**-d  <=>  (P - 2*10**-d) + Q*sqrt5 <= 0
    p = 2 * x.u + x.v
    pn, pd, qn, qd = p.numerator, p.denominator, x.v.numerator, x.v.denominator

    def small_enough(d: int) -> bool:
        if d >= 0:
            t = 10 ** d
            return _sign_surd(pn * t - 2 * pd, pd * t, qn, qd) <= 0
        t = 10 ** -d
        return _sign_surd(pn - 2 * pd * t, pd, qn, qd) <= 0

    # |x| = |norm| / |conj x|, and the conjugate does not cancel when x is tiny
    c = conj(x)
    hint = -(_log10_hint(norm(x)) - _log10_hint(max(abs(c.u), abs(c.v)) or Fraction(1)))
    hint = max(min(hint, limit), -limit)
    step = 1
    if small_enough(hint):
        lo = hint
        while lo + step <= limit and small_enough(lo + step):
            lo += step
            step *= 2
        hi = lo + step
    else:
        hi = hint
        while not small_enough(hi - step):
            hi -= step
            step *= 2
        lo = hi - step
    # small_enough(lo) holds, small_enough(hi) fails or hi > limit
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if small_enough(mid):
            lo = mid
        else:
            hi = mid
    return min(lo, limit)


def int_to_str(n: int) -> str:
    """``str(n)`` without the interpreter's digit limit for huge ints."""
    if n < 0:
        return "-" + int_to_str(-n)
    if n.bit_length() < 10000:
        return str(n)
    half = (n.bit_length() * 30103 // 100000) // 2
    hi, lo = divmod(n, 10 ** half)
    return int_to_str(hi) + int_to_str(lo).rjust(half, "0")


def format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return int_to_str(q.numerator)
    return f"{int_to_str(q.numerator)}/{int_to_str(q.denominator)}"


def format_golden(x: Coercible) -> str:
    """Render as ``u + v·φ``; non-integral coefficients become ``p/q`` and
    the phi coefficient is parenthesised, e.g. ``-1/4 + (1/2)·φ``."""
    x = GoldenNum.coerce(x)
    op = "-" if x.v < 0 else "+"
    v = abs(x.v)
    vs = format_rat(v) if v.denominator == 1 else f"({format_rat(v)})"
    return f"{format_rat(x.u)} {op} {vs}·φ"
