"""Exact evaluation, verification and classification of Fibonacci/Lucas
infinite products of the form prod (1 + c / W_{a r^n + b})."""

from goldenprod.quadfield import GoldenNum, PHI, SQRT5, phi_pow
from goldenprod.fiblucas import fib, fib_pair, lucas
from goldenprod.products import Family, ProductSpec, partial_product, tail_bound
from goldenprod.closedform import ClosedForm, closed_form
from goldenprod.classify import Verdict, classify

__all__ = [
    "GoldenNum", "PHI", "SQRT5", "phi_pow",
    "fib", "fib_pair", "lucas",
    "Family", "ProductSpec", "partial_product", "tail_bound",
    "ClosedForm", "closed_form",
    "Verdict", "classify",
]

__version__ = "0.1.0"
