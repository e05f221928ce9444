"""Algebraic/transcendental decision for the constant-coefficient products.

For integers a >= 1, b >= 0, r >= 2, c the product
``prod (1 + c / F_{a r^n + b})`` is algebraic iff c = 0 or (r = 2 and
c = F_b).  The Lucas version adds a third case: r = 2, b = 0 and c equals
the eventually constant trace ``w**(2**n) + w**-(2**n)`` of some root of
unity w.  Which integers c arise that way is computed here by orbit
enumeration rather than assumed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from goldenprod.closedform import closed_form
from goldenprod.products import Family, ProductSpec, term_index
from goldenprod.quadfield import GoldenNum

# 2cos(2 pi q) for the only q in [0, 1) where it is a rational integer
_INTEGRAL_TRACES = {
    Fraction(0): 2,
    Fraction(1, 6): 1,
    Fraction(1, 4): 0,
    Fraction(1, 3): -1,
    Fraction(1, 2): -2,
    Fraction(2, 3): -1,
    Fraction(3, 4): 0,
    Fraction(5, 6): 1,
}

UNITY_ORDER = 100
DEGENERATE_HORIZON = 30


class Status(enum.Enum):
    ALGEBRAIC = "Algebraic"
    TRANSCENDENTAL = "Transcendental"


class Case(enum.Enum):
    C_ZERO = "i_c_zero"
    C_MATCHES = "ii_c_matches"
    ROOT_OF_UNITY = "iii_root_of_unity"
    NONE = "none"


@dataclass
class Verdict:
    status: Status
    case: Case
    closed_form: GoldenNum | None = None
    degenerate_factors: list[int] = field(default_factory=list)

    def __post_init__(self):
        if (self.status is Status.ALGEBRAIC) != (self.case is not Case.NONE):
            raise ValueError("status must be Algebraic exactly when a case applies")
        if self.closed_form is not None and self.status is not Status.ALGEBRAIC:
            raise ValueError("only algebraic verdicts carry a closed form")


def _doubling_cycles(m: int):
    """Cycles of e -> 2e (mod m), each as a list of residues."""
    state = [0] * m  # 0 unseen, 1 on current path, 2 finished
    for e0 in range(m):
        path = []
        e = e0
        while state[e] == 0:
            state[e] = 1
            path.append(e)
            e = (2 * e) % m
        if state[e] == 1:
            yield path[path.index(e):]
        for p in path:
            state[p] = 2


def unity_trace_cycles(max_order: int) -> set[int]:
    """Integers c with ``w**(2**n) + w**-(2**n) == c`` for all large n,
    over roots of unity w of order <= max_order."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    found = set()
    for m in range(1, max_order + 1):
        for cycle in _doubling_cycles(m):
            traces = {_INTEGRAL_TRACES.get(Fraction(e, m)) for e in cycle}
            if len(traces) == 1 and None not in traces:
                found.add(traces.pop())
    return found


UNITY_TRACES = frozenset(unity_trace_cycles(UNITY_ORDER))
if UNITY_TRACES != {2, -1}:
    raise RuntimeError(
        f"orbit enumeration to order {UNITY_ORDER} gave traces {sorted(UNITY_TRACES)}, "
        "expected {-1, 2}; the Lucas classification cannot proceed")


def degenerate_factors(spec: ProductSpec, horizon: int = DEGENERATE_HORIZON) -> list[int]:
    """n in [start, horizon] whose factor ``1 + c/W`` vanishes."""
    if spec.c >= 0:
        return []
    # W_k >= phi**(k-2) > |c| well before this index, and W grows with k
    k_max = 2 * abs(spec.c).bit_length() + 3
    out = []
    for n in range(spec.start, horizon + 1):
        k = term_index(spec, n)
        if k > k_max:
            break
        if spec.family.term(k) == -spec.c:
            out.append(n)
    return out


def classify(spec: ProductSpec, horizon: int = DEGENERATE_HORIZON) -> Verdict:
    degenerate = degenerate_factors(spec, horizon)
    fam = spec.family
    if spec.c == 0:
        case = Case.C_ZERO
    elif spec.r == 2 and spec.c == fam.term(spec.b):
        # also wins for (Lucas, b=0, c=2), which is a root-of-unity case too
        case = Case.C_MATCHES
    elif (fam is Family.LUCAS and spec.r == 2 and spec.b == 0
          and spec.c in UNITY_TRACES):
        case = Case.ROOT_OF_UNITY
    else:
        return Verdict(Status.TRANSCENDENTAL, Case.NONE, None, degenerate)
    cf = closed_form(spec)
    return Verdict(Status.ALGEBRAIC, case, cf.value if cf else None, degenerate)
