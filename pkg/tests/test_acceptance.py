"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
pytest terminal summary under "acceptance criteria"."""
import json
import random
import time
from fractions import Fraction

import pytest

from goldenprod.classify import Case, Status, classify, unity_trace_cycles
from goldenprod.cli import main, verify
from goldenprod.closedform import finite_telescope_check, per_factor_identity_check
from goldenprod.fiblucas import binet_check, fib_pair
from goldenprod.products import Family, ProductSpec, partial_product, tail_bound
from goldenprod.quadfield import GoldenNum, phi_pow
from tests.oracles import fib_table, iter_fib, iter_lucas, sqrt5_decimal

pytestmark = pytest.mark.acceptance

FIB, LUC = Family.FIBONACCI, Family.LUCAS


def _cli_verify(capsys, *argv):
    t = time.perf_counter()
    code = main(["verify", *argv, "--json"])
    elapsed = time.perf_counter() - t
    out = capsys.readouterr().out
    return code, json.loads(out), elapsed


def _grid():
    for fam, w in ((FIB, iter_fib), (LUC, iter_lucas)):
        for a in range(1, 5):
            for b in range(0, 5):
                for start in (1, 2):
                    yield ProductSpec(fam, a, b, 2, w(b), start)


def test_criterion_1_three_over_phi(capsys, record):
    code, rep, elapsed = _cli_verify(capsys, "fib", "-a", "1", "-b", "1", "-c", "1",
                                     "--start", "1", "-N", "10", "--digits", "100")
    # 3/phi = (3 sqrt5 - 3)/2 = -3 + 3 phi
    ref = sqrt5_decimal(-3, 3, 100)
    assert ref.startswith("1.8541019662")
    bound = tail_bound(ProductSpec(FIB, 1, 1, 2, 1), 10).bound
    ok = (code == 0 and rep["pass"] and rep["agreement_digits"] >= 100
          and rep["closed"] == ref and bound < Fraction(1, 10 ** 400) and elapsed < 5)
    record(1, ok, f"agreement={rep['agreement_digits']} digits, "
                  f"tail<=1e-{rep['tail_bound_digits']}, {elapsed:.3f}s")
    assert ok


def test_criterion_2_three_minus_phi(capsys, record):
    code, rep, elapsed = _cli_verify(capsys, "lucas", "-a", "1", "-b", "1", "-c", "1",
                                     "--start", "1", "-N", "10", "--digits", "100")
    ref = sqrt5_decimal(3, -1, 100)
    assert ref.startswith("1.3819660112")
    ok = (code == 0 and rep["pass"] and rep["agreement_digits"] >= 100
          and rep["closed"] == ref and elapsed < 5)
    record(2, ok, f"agreement={rep['agreement_digits']} digits, {elapsed:.3f}s")
    assert ok


def test_criterion_3_unity_constants(capsys, record):
    details, ok = [], True
    # sqrt5 = -1 + 2 phi, sqrt5/4 = -1/4 + phi/2
    for c, (u, v) in ((2, (-1, 2)), (-1, (Fraction(-1, 4), Fraction(1, 2)))):
        code, rep, _ = _cli_verify(capsys, "lucas", "-a", "1", "-b", "0", "-r", "2",
                                   "-c", str(c), "-N", "10", "--digits", "100")
        good = (code == 0 and rep["pass"] and rep["agreement_digits"] >= 100
                and rep["closed"] == sqrt5_decimal(u, v, 100))
        ok &= good
        details.append(f"c={c}: {rep['agreement_digits']} digits")
    record(3, ok, ", ".join(details))
    assert ok


def test_criterion_4_generalized_grid(record):
    t = time.perf_counter()
    failures = []
    worst = None
    for spec in _grid():
        rep = verify(spec, 10, 60)
        if not rep.passed or (rep.agreement_digits is not None and rep.agreement_digits < 60):
            failures.append(str(spec))
        if rep.agreement_digits is not None:
            worst = rep.agreement_digits if worst is None else min(worst, rep.agreement_digits)
    elapsed = time.perf_counter() - t
    ok = not failures and elapsed < 60
    record(4, ok, f"80 specs, min agreement={worst} digits, {elapsed:.2f}s, failures={failures}")
    assert ok


def test_criterion_5_proof_steps(record):
    per_factor = all(per_factor_identity_check(a, b, n, fam)
                     for fam in (FIB, LUC) for a in range(1, 7) for b in range(0, 7)
                     for n in range(1, 9))
    rng = random.Random(1)
    xs = []
    while len(xs) < 100:
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if x * x != 1:
            xs.append(x)
    telescope = all(finite_telescope_check(x, rng.randint(1, 12)) for x in xs)
    ok = per_factor and telescope
    record(5, ok, f"per-factor={per_factor}, telescope over 100 rationals={telescope}")
    assert ok


def test_criterion_6_binet_and_doubling(record):
    f = fib_table(5001)

    def F(k):
        return f[k] if k >= 0 else (-1) ** (-k + 1) * f[-k]

    powers = all(phi_pow(k) == GoldenNum(F(k - 1), F(k)) for k in range(-300, 301))
    binet = all(binet_check(k) for k in range(-300, 301))
    doubling = all(fib_pair(k) == (f[k], f[k + 1]) for k in range(5001))
    ok = powers and binet and doubling
    record(6, ok, f"phi_pow={powers}, binet={binet}, doubling={doubling}")
    assert ok


def _theorem_oracle(fam, a, b, r, c):
    """The algebraicity conditions written out directly."""
    if c == 0:
        return True
    if fam is FIB:
        return r == 2 and c == iter_fib(b)
    if r == 2 and c == iter_lucas(b):
        return True
    # omega = +-1 gives trace 2, omega = (1 +- sqrt -3)/2 gives trace -1
    return r == 2 and b == 0 and c in (2, -1)


def test_criterion_7_truth_table(record):
    mismatches = []
    for fam in (FIB, LUC):
        for a in range(1, 4):
            for b in range(0, 4):
                for r in (2, 3):
                    for c in range(-4, 5):
                        v = classify(ProductSpec(fam, a, b, r, c))
                        expect = _theorem_oracle(fam, a, b, r, c)
                        if (v.status is Status.ALGEBRAIC) != expect:
                            mismatches.append((fam.value, a, b, r, c))
    lucas_b0 = {c for c in range(-50, 51)
                if classify(ProductSpec(LUC, 1, 0, 2, c)).status is Status.ALGEBRAIC}
    ok = not mismatches and lucas_b0 == {0, 2, -1}
    record(7, ok, f"mismatches={mismatches}, lucas r=2 b=0 algebraic c={sorted(lucas_b0)}")
    assert ok
    assert classify(ProductSpec(LUC, 1, 0, 2, -1)).case is Case.ROOT_OF_UNITY


def test_criterion_8_orbit_oracle(record):
    t = time.perf_counter()
    traces = unity_trace_cycles(200)
    elapsed = time.perf_counter() - t
    ok = traces == {2, -1} and elapsed < 1
    record(8, ok, f"traces={sorted(traces)}, {elapsed:.3f}s")
    assert ok


def test_criterion_9_tail_bound_soundness(record):
    violations, checks = [], 0
    for spec in _grid():
        values = {}
        acc = Fraction(1)
        for n in range(spec.start, 13):
            acc *= 1 + Fraction(spec.c, spec.family.term(spec.a * 2 ** n + spec.b))
            values[n] = acc
        for N in range(3, 9):
            bound = tail_bound(spec, N).bound
            assert partial_product(spec, N).value == values[N]
            checks += 1
            if abs(values[N + 4] / values[N] - 1) > bound:
                violations.append((str(spec), N))
    ok = not violations
    record(9, ok, f"{checks} checks, violations={violations}")
    assert ok
