"""Product specifications, exact partial products and truncation bounds.

A :class:`ProductSpec` describes

    prod_{n >= start} (1 + c / W_{a r^n + b}),   W in {F, L}

Factors that are exactly zero (``W = -c``) are left out of the product
and reported, unless strict mode is requested.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from goldenprod.fiblucas import fib, lucas

DEFAULT_INDEX_CAP = 2 ** 22

# 4181/6765 = F_19/F_20 lies just above 1/phi (odd-index convergent).
PHI_INV_UPPER = Fraction(4181, 6765)
# phi**100 >= 2**69, so phi**-(100 j) <= 2**-(69 j); cheap for huge indices.
_BLOCK, _BLOCK_BITS = 100, 69


class Family(enum.Enum):
    FIBONACCI = "fib"
    LUCAS = "lucas"

    @classmethod
    def parse(cls, text: str) -> Family:
        t = text.strip().lower()
        if t in ("f", "fib", "fibonacci"):
            return cls.FIBONACCI
        if t in ("l", "lucas"):
            return cls.LUCAS
        raise ValueError(f"unknown family {text!r} (expected fib or lucas)")

    def term(self, k: int) -> int:
        return fib(k) if self is Family.FIBONACCI else lucas(k)

    @property
    def symbol(self) -> str:
        return "F" if self is Family.FIBONACCI else "L"


class IndexCapError(RuntimeError):
    """A requested term index exceeds the configured safety cap."""


class TailBoundError(ValueError):
    """The first omitted factor is too far from 1 for the log bound."""


@dataclass(frozen=True)
class ProductSpec:
    family: Family
    a: int
    b: int
    r: int = 2
    c: int = 0
    start: int = 1

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.parse(self.family))
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")
        if self.b < 0:
            raise ValueError(f"b must be >= 0, got {self.b}")
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if self.start < 0:
            raise ValueError(f"start must be >= 0, got {self.start}")

    def __str__(self):
        w = self.family.symbol
        return f"prod_{{n>={self.start}}} (1 + {self.c}/{w}_{{{self.a}*{self.r}^n+{self.b}}})"


@dataclass
class PartialProductReport:
    value: Fraction
    last_n: int
    factors_included: int
    skipped: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class TailBound:
    bound: Fraction


def term_index(spec: ProductSpec, n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return spec.a * spec.r ** n + spec.b


def factor(spec: ProductSpec, n: int) -> Fraction:
    """``1 + c/W_k`` with ``k = a r^n + b``; may be zero or negative."""
    if spec.c == 0:
        return Fraction(1)
    w = spec.family.term(term_index(spec, n))
    return Fraction(w + spec.c, w)


def check_cap(spec: ProductSpec, upto_n: int, cap: int = DEFAULT_INDEX_CAP) -> None:
    # indices grow with n, so the last one is the largest
    k = term_index(spec, upto_n)
    if k > cap:
        raise IndexCapError(
            f"term index {k} at n={upto_n} exceeds the index cap {cap}")


def partial_product(spec: ProductSpec, upto_n: int, *,
                    cap: int = DEFAULT_INDEX_CAP,
                    strict: bool = False) -> PartialProductReport:
    """Exact product of the factors for ``spec.start <= n <= upto_n``.

    Zero factors are omitted and listed in ``skipped``; with
    ``strict=True`` a zero factor makes the whole product zero instead.
    """
    if upto_n < spec.start:
        raise ValueError(f"upto_n={upto_n} is below start={spec.start}")
    # r >= 2, so past this n the index surely exceeds the cap; avoids
    # building an enormous r**upto_n
    if upto_n > cap.bit_length():
        raise IndexCapError(f"term index at n={upto_n} exceeds the index cap {cap}")
    check_cap(spec, upto_n, cap)

    report = PartialProductReport(Fraction(1), upto_n, 0)
    if spec.c == 0:
        report.factors_included = upto_n - spec.start + 1
        return report

    num, den = 1, 1
    for n in range(spec.start, upto_n + 1):
        w = spec.family.term(term_index(spec, n))
        top = w + spec.c
        if top == 0 and not strict:
            report.skipped.append(n)
            continue
        num *= top
        den *= w
        report.factors_included += 1
    report.value = Fraction(num, den)
    return report


def phi_neg_power_upper(e: int) -> Fraction:
    """Rational upper bound for ``phi**-e`` (e >= 0)."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    blocks, rest = divmod(e, _BLOCK)
    return Fraction(1, 1 << (_BLOCK_BITS * blocks)) * PHI_INV_UPPER ** rest


def tail_bound(spec: ProductSpec, after_n: int) -> TailBound:
    """Rational B with ``|P_inf / P_N - 1| <= B`` where ``N = after_n``.

    Each omitted factor has ``|log(1 + c/W_m)| <= 2|c|/W_m <= 2|c|/F_m``
    and ``F_m >= phi**(m-2)``.  Omitted indices at least double their
    spacing, so the log-sum is at most twice its first term, giving
    ``S <= 4|c| phi**-(m-2)``.  Finally ``exp(S) - 1 <= 2S`` for S <= 1/2.
    """
    if after_n < 0:
        raise ValueError("after_n must be >= 0")
    if spec.c == 0:
        return TailBound(Fraction(0))
    m = term_index(spec, after_n + 1)
    c = abs(spec.c)
    # F_m < 2|c| iff m is below the first index where fib reaches 2|c|;
    # only compute F_m when m is small enough for that to be possible.
    if m <= 2 * (2 * c).bit_length() + 3 and fib(m) < 2 * c:
        raise TailBoundError(
            f"first omitted factor at index {m} is too large for the tail bound "
            f"(need F_{m} >= {2 * c}); increase N")
    s = 4 * c * phi_neg_power_upper(m - 2)
    if s <= Fraction(1, 2):
        return TailBound(2 * s)
    # exp(S) - 1 <= S exp(S) <= S * 3**ceil(S)
    return TailBound(s * 3 ** -(-s.numerator // s.denominator))
