"""Fibonacci and Lucas numbers at large indices.

Fast doubling keeps the cost at O(log k) big-integer multiplications,
which matters because product indices ``a * 2**n + b`` grow
exponentially in n.
"""
from __future__ import annotations

from goldenprod.quadfield import GoldenNum, phi_pow, PHI, PHI_INV


def fib_pair(k: int) -> tuple[int, int]:
    """Return ``(F_k, F_{k+1})`` for k >= 0."""
    if k < 0:
        raise ValueError("fib_pair needs a nonnegative index")
    a, b = 0, 1  # F_0, F_1
    for bit in bin(k)[2:]:
        # (F_j, F_{j+1}) -> (F_2j, F_2j+1)
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(k: int) -> int:
    """F_k, extended to negative k by F_{-n} = (-1)**(n+1) * F_n."""
    if k >= 0:
        return fib_pair(k)[0]
    f = fib_pair(-k)[0]
    return f if k % 2 else -f


def lucas(k: int) -> int:
    """L_k = 2 F_{k+1} - F_k.

    Negative indices follow L_{-n} = (-1)**n L_n; they are only used for
    identity checks.
    """
    if k >= 0:
        f0, f1 = fib_pair(k)
        return 2 * f1 - f0
    l = lucas(-k)
    return -l if k % 2 else l


def binet_check(k: int) -> bool:
    """Check both Binet forms for index k exactly in Q(sqrt 5).

    (phi + 1/phi) F_k = phi**k - (-1/phi)**k  and
    L_k = phi**k + (-1)**k phi**-k.
    """
    pk = phi_pow(k)
    pmk = phi_pow(-k)
    alt = pmk if k % 2 == 0 else -pmk
    fib_ok = (PHI + PHI_INV) * fib(k) == pk - alt
    lucas_ok = GoldenNum(lucas(k)) == pk + alt
    return fib_ok and lucas_ok

