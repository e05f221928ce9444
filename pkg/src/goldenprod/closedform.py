"""Closed forms in Q(sqrt 5) for the algebraic products with r = 2.

With ``m_n = 2**n * a`` even, every factor ``1 + W_b / W_{m_n + b}``
splits as

    (1 + phi**-m_n) * g(n) / g(n + 1),   g(n) = 1 -/+ (-1)**b phi**(-m_n - 2b)

(minus for Fibonacci, plus for Lucas).  The ``g`` ratios telescope and
``prod_{n >= s} (1 + x**(2**n)) = 1 / (1 - x**(2**s))`` with
``x = phi**-a`` handles the rest, so a product starting at ``n = s`` equals

    (1 -/+ (-1)**b phi**(-2**s a - 2b)) / (1 - phi**(-2**s a)).

The module also exposes exact checkers for each of these steps.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from goldenprod.fiblucas import fib, lucas
from goldenprod.products import Family, ProductSpec, factor
from goldenprod.quadfield import ONE, SQRT5, GoldenNum, phi_pow, sign

FIB_TELESCOPING = "fibonacci_telescoping"
LUCAS_TELESCOPING = "lucas_telescoping"
UNITY_CONSTANT = "root_of_unity_constant"
UNIT = "unit"


@dataclass(frozen=True)
class ClosedForm:
    value: GoldenNum
    valid_from: int
    derivation: str
    start: int = 1

    def __post_init__(self):
        assert sign(self.value) > 0, "closed forms of these products are positive"


def _check_parity(a: int, b: int, start: int, name: str) -> None:
    if a < 1 or b < 0:
        raise ValueError(f"need a >= 1 and b >= 0, got a={a}, b={b}")
    if start < 0:
        raise ValueError("start must be >= 0")
    if start == 0 and a % 2:
        raise ValueError(
            f"{name}: the telescoping needs 2**start * a even; for start=0 and "
            f"odd a use {name}_from_zero, which peels off the n=0 factor")


def _telescoped(a: int, b: int, start: int, lucas_sign: int) -> GoldenNum:
    m = (2 ** start) * a
    eps = -1 if b % 2 else 1
    num = ONE + lucas_sign * eps * phi_pow(-m - 2 * b)
    den = ONE - phi_pow(-m)
    return num / den


def fib_closed(a: int, b: int, start: int = 1) -> ClosedForm:
    """Value of ``prod_{n >= start} (1 + F_b / F_{2^n a + b})``."""
    _check_parity(a, b, start, "fib_closed")
    return ClosedForm(_telescoped(a, b, start, -1), 0 if a % 2 == 0 else 1,
                      FIB_TELESCOPING, start)


def lucas_closed(a: int, b: int, start: int = 1) -> ClosedForm:
    """Value of ``prod_{n >= start} (1 + L_b / L_{2^n a + b})``."""
    _check_parity(a, b, start, "lucas_closed")
    return ClosedForm(_telescoped(a, b, start, +1), 0 if a % 2 == 0 else 1,
                      LUCAS_TELESCOPING, start)


def fib_closed_from_zero(a: int, b: int) -> ClosedForm:
    # n = 0 factor has odd index parity when a is odd; multiply it in exactly
    first = Fraction(fib(a + b) + fib(b), fib(a + b))
    cf = fib_closed(a, b, 1)
    return ClosedForm(first * cf.value, 0, FIB_TELESCOPING, 0)


def lucas_closed_from_zero(a: int, b: int) -> ClosedForm:
    first = Fraction(lucas(a + b) + lucas(b), lucas(a + b))
    cf = lucas_closed(a, b, 1)
    return ClosedForm(first * cf.value, 0, LUCAS_TELESCOPING, 0)


def unity_constant(c: int) -> ClosedForm:
    """Stored values of ``prod_{n >= 1} (1 + c / L_{2^n})`` for c in {-1, 2}."""
    if c == -1:
        return ClosedForm(SQRT5 / 4, 1, UNITY_CONSTANT, 1)
    if c == 2:
        return ClosedForm(SQRT5, 1, UNITY_CONSTANT, 1)
    raise ValueError(f"no stored root-of-unity constant for c={c} (only -1 and 2)")


def closed_form(spec: ProductSpec) -> ClosedForm | None:
    """Closed form for ``spec`` if one is known, else None.

    Covers c = 0, the r = 2 case ``c = W_b`` at any start, and the two
    Lucas root-of-unity constants with a = 1, b = 0.  Zero factors follow
    the skip convention of :func:`goldenprod.products.partial_product`.
    """
    if spec.c == 0:
        return ClosedForm(ONE, 0, UNIT, spec.start)
    if spec.r != 2:
        return None
    fam = spec.family
    if spec.c == fam.term(spec.b):
        if spec.start == 0 and spec.a % 2:
            f = fib_closed_from_zero if fam is Family.FIBONACCI else lucas_closed_from_zero
            return f(spec.a, spec.b)
        f = fib_closed if fam is Family.FIBONACCI else lucas_closed
        return f(spec.a, spec.b, spec.start)
    if fam is Family.LUCAS and spec.b == 0 and spec.a == 1 and spec.c == -1:
        base = unity_constant(-1)
        value = base.value
        # n = 0 factor is 1 - 1/L_1 = 0 and is skipped; later starts drop
        # the leading factors exactly
        for n in range(1, spec.start):
            value = value / factor(spec, n)
        return ClosedForm(value, 0, UNITY_CONSTANT, spec.start)
    return None


def per_factor_identity_check(a: int, b: int, n: int, family: Family | str) -> bool:
    """Exact check of the factor splitting for ``m = 2**n * a``."""
    family = Family.parse(family) if isinstance(family, str) else family
    m = (2 ** n) * a
    if m % 2:
        raise ValueError("the factor identity needs 2**n * a even")
    w = family.term
    lhs = GoldenNum(Fraction(w(m + b) + w(b), w(m + b)))
    s = -1 if family is Family.FIBONACCI else 1
    eps = -1 if b % 2 else 1
    rhs = ((ONE + phi_pow(-m))
           * (ONE + s * eps * phi_pow(-m - 2 * b))
           / (ONE + s * eps * phi_pow(-2 * m - 2 * b)))
    return lhs == rhs


def finite_telescope_check(x: Fraction | int, N: int) -> bool:
    """``prod_{n=1}^{N} (1 + x**(2**n)) == (1 - x**(2**(N+1))) / (1 - x**2)``."""
    x = Fraction(x)
    if x * x == 1:
        raise ValueError("x must not be +1 or -1")
    if N < 1:
        raise ValueError("N must be >= 1")
    lhs = Fraction(1)
    sq = x * x
    for _ in range(N):
        lhs *= 1 + sq
        sq *= sq
    return lhs == (1 - sq) / (1 - x * x)
