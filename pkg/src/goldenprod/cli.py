"""Command-line interface.

    goldenprod fib K
    goldenprod lucas K
    goldenprod eval FAMILY -a A -b B [-r R] -c C [--start S] (--closed | --partial N)
    goldenprod classify FAMILY -a A -b B [-r R] -c C [--json]
    goldenprod verify FAMILY -a A -b B [-r R] -c C [--start S] [-N N] [--digits D]
    goldenprod verify --grid FILE [--jobs J]

Exit status: 0 success/pass, 1 verification failed, 2 bad arguments or no
closed form, 3 index cap exceeded.  The index cap defaults to 2**22 and
can be overridden by GOLDEN_INDEX_CAP or ``--cap``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from goldenprod.classify import Status, classify
from goldenprod.closedform import closed_form
from goldenprod.fiblucas import fib, lucas
from goldenprod.products import (DEFAULT_INDEX_CAP, Family, IndexCapError, ProductSpec,
                                 TailBoundError, check_cap, partial_product, tail_bound)
from goldenprod.quadfield import (GoldenNum, format_golden, format_rat, int_to_str,
                                  neg_log10_floor, sign, to_decimal)

SCHEMA = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class VerificationReport:
    spec: ProductSpec
    partial: str
    closed: str
    agreement_digits: int | None  # None when partial == closed exactly
    tail_bound_digits: int | None  # None when the bound is exactly 0
    passed: bool
    closed_form: GoldenNum | None = None
    N: int = 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            **_spec_json(self.spec),
            "N": self.N,
            "partial": self.partial,
            "closed": self.closed,
            "closed_form": _golden_json(self.closed_form),
            "agreement_digits": self.agreement_digits,
            "tail_bound_digits": self.tail_bound_digits,
            "pass": self.passed,
        }


def _spec_json(spec: ProductSpec) -> dict:
    return {"family": spec.family.value, "a": spec.a, "b": spec.b, "r": spec.r,
            "c": spec.c, "start": spec.start}


def _golden_json(x: GoldenNum | None) -> dict | None:
    if x is None:
        return None
    return {"u_num": x.u.numerator, "u_den": x.u.denominator,
            "v_num": x.v.numerator, "v_den": x.v.denominator}


def _no_closed_form_message(spec: ProductSpec) -> str:
    verdict = classify(spec)
    w = spec.family.symbol
    if verdict.status is Status.TRANSCENDENTAL:
        return (f"no closed form: the product is transcendental "
                f"(needs c = 0, or r = 2 and c = {w}_b = {spec.family.term(spec.b)})")
    return "no closed form: algebraic, value unknown"


def verify(spec: ProductSpec, N: int = 10, digits: int = 50, *,
           cap: int = DEFAULT_INDEX_CAP, strict: bool = False) -> VerificationReport:
    """Compare the exact partial product up to N with the closed form.

    Passes iff ``|P_N - C| <= B * |P_N|`` holds exactly, B being the tail
    bound after N.  Decimal strings are for display only.
    """
    cf = closed_form(spec)
    if cf is None:
        raise UsageError(_no_closed_form_message(spec))
    check_cap(spec, N + 1, cap)
    report = partial_product(spec, N, cap=cap, strict=strict)
    bound = tail_bound(spec, N).bound
    p = GoldenNum(report.value)
    diff = p - cf.value
    passed = sign(abs(diff) - abs(p) * bound) <= 0
    return VerificationReport(
        spec=spec,
        partial=to_decimal(p, digits),
        closed=to_decimal(cf.value, digits),
        agreement_digits=neg_log10_floor(diff),
        tail_bound_digits=neg_log10_floor(GoldenNum(bound)),
        passed=passed,
        closed_form=cf.value,
        N=N,
    )


def _spec_from_args(args) -> ProductSpec:
    family = args.family_opt or args.family
    if family is None:
        raise UsageError("a product family (fib or lucas) is required")
    if args.c is None:
        raise UsageError("-c is required")
    try:
        return ProductSpec(Family.parse(family), args.a, args.b, args.r, args.c, args.start)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, obj: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(obj, separators=(",", ":"), ensure_ascii=False))
    else:
        print("\n".join(lines))


def cmd_seq(args) -> int:
    if args.k < 0:
        raise UsageError("index must be nonnegative")
    if args.k > args.cap:
        raise IndexCapError(f"index {args.k} exceeds the index cap {args.cap}")
    print(int_to_str(fib(args.k) if args.command == "fib" else lucas(args.k)))
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = _spec_from_args(args)
    if args.partial is not None:
        rep = partial_product(spec, args.partial, cap=args.cap, strict=args.strict_zero)
        dec = to_decimal(GoldenNum(rep.value), args.digits)
        if rep.skipped and not args.json:
            print(f"skipped zero factors at n = {', '.join(map(str, rep.skipped))}",
                  file=sys.stderr)
        _emit(args, {"schema": SCHEMA, **_spec_json(spec), "mode": "partial",
                     "N": args.partial, "value": format_rat(rep.value), "decimal": dec,
                     "skipped": rep.skipped},
              [format_rat(rep.value), dec])
        return EXIT_OK
    if spec.r != 2 and spec.c != 0:
        raise UsageError(f"no closed form for r={spec.r}: the product is transcendental "
                         "unless c = 0")
    cf = closed_form(spec)
    if cf is None:
        raise UsageError(_no_closed_form_message(spec))
    dec = to_decimal(cf.value, args.digits)
    _emit(args, {"schema": SCHEMA, **_spec_json(spec), "mode": "closed",
                 "closed_form": _golden_json(cf.value), "derivation": cf.derivation,
                 "decimal": dec},
          [format_golden(cf.value), dec])
    return EXIT_OK


def cmd_classify(args) -> int:
    spec = _spec_from_args(args)
    v = classify(spec)
    if args.json:
        _emit(args, {"schema": SCHEMA, "status": v.status.value, "case": v.case.value,
                     "closed_form": _golden_json(v.closed_form),
                     "degenerate": v.degenerate_factors}, [])
        return EXIT_OK
    lines = [f"status: {v.status.value}", f"case: {v.case.value}"]
    if v.closed_form is not None:
        lines.append(f"closed form: {format_golden(v.closed_form)}")
        lines.append(f"decimal: {to_decimal(v.closed_form, args.digits)}")
    elif v.status is Status.ALGEBRAIC:
        lines.append("closed form: unknown (algebraic, value unknown)")
    degen = ", ".join(map(str, v.degenerate_factors)) or "none"
    lines.append(f"degenerate factors: {degen}")
    print("\n".join(lines))
    return EXIT_OK


def _report_lines(rep: VerificationReport) -> list[str]:
    agree = "exact" if rep.agreement_digits is None else f"{rep.agreement_digits} digits"
    tb = "0 (exact)" if rep.tail_bound_digits is None else f"<= 1e-{rep.tail_bound_digits}"
    return [
        f"product:     {rep.spec}",
        f"partial:     {rep.partial}",
        f"closed:      {rep.closed}",
        f"closed form: {format_golden(rep.closed_form)}",
        f"agreement:   {agree}",
        f"tail bound:  {tb}",
        f"result:      {'PASS' if rep.passed else 'FAIL'}",
    ]


def _parse_grid_line(line: str) -> ProductSpec:
    parts = line.split()
    if len(parts) not in (5, 6):
        raise UsageError(f"grid line needs 'family a b r c [start]': {line!r}")
    nums = [int(x) for x in parts[1:]]
    try:
        return ProductSpec(Family.parse(parts[0]), *nums)
    except ValueError as exc:
        raise UsageError(f"{line!r}: {exc}") from exc


def _grid_task(job):
    spec, N, digits, cap, strict = job
    try:
        return verify(spec, N, digits, cap=cap, strict=strict), None
    except (UsageError, IndexCapError, TailBoundError) as exc:
        return None, f"{type(exc).__name__}: {exc}"


def cmd_verify_grid(args) -> int:
    stream = sys.stdin if args.grid == "-" else open(args.grid, encoding="utf-8")
    with stream:
        specs = [_parse_grid_line(ln) for ln in stream
                 if ln.strip() and not ln.lstrip().startswith("#")]
    jobs = [(s, args.N, args.digits, args.cap, args.strict_zero) for s in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_grid_task, jobs))
    else:
        results = [_grid_task(j) for j in jobs]
    status = EXIT_OK
    for spec, (rep, err) in zip(specs, results):
        if rep is None:
            status = max(status, EXIT_FAIL)
            if args.json:
                print(json.dumps({"schema": SCHEMA, **_spec_json(spec), "error": err},
                                 separators=(",", ":")))
            else:
                print(f"ERROR {spec}: {err}")
            continue
        if not rep.passed:
            status = max(status, EXIT_FAIL)
        if args.json:
            print(json.dumps(rep.to_json(), separators=(",", ":"), ensure_ascii=False))
        else:
            agree = "exact" if rep.agreement_digits is None else rep.agreement_digits
            print(f"{'PASS' if rep.passed else 'FAIL'} {spec} agreement={agree}")
    return status


def cmd_verify(args) -> int:
    if args.grid is not None:
        return cmd_verify_grid(args)
    spec = _spec_from_args(args)
    rep = verify(spec, args.N, args.digits, cap=args.cap, strict=args.strict_zero)
    _emit(args, rep.to_json(), _report_lines(rep))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _default_cap() -> int:
    env = os.environ.get("GOLDEN_INDEX_CAP")
    if env is None:
        return DEFAULT_INDEX_CAP
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"GOLDEN_INDEX_CAP must be an integer, got {env!r}") from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser(cap: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldenprod",
        description="Exact Fibonacci/Lucas infinite products over Q(sqrt 5).")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=cap,
                        help="largest allowed term index (default %(default)s)")

    for name in ("fib", "lucas"):
        p = sub.add_parser(name, parents=[common], help=f"print {name} number K")
        p.add_argument("k", type=int)
        p.set_defaults(func=cmd_seq)

    prod = argparse.ArgumentParser(add_help=False, parents=[common])
    prod.add_argument("family", nargs="?", choices=["fib", "lucas"])
    prod.add_argument("--family", dest="family_opt", choices=["fib", "lucas"])
    prod.add_argument("-a", type=int, default=1)
    prod.add_argument("-b", type=int, default=0)
    prod.add_argument("-r", type=int, default=2)
    prod.add_argument("-c", type=int, default=None)
    prod.add_argument("--start", type=int, default=1)
    prod.add_argument("--digits", type=_positive, default=50)
    prod.add_argument("--json", action="store_true", help="single-line JSON output")
    prod.add_argument("--strict-zero", action="store_true",
                      help="a zero factor makes the product 0 instead of being skipped")

    p = sub.add_parser("eval", parents=[prod], help="closed form or exact partial product")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--closed", action="store_true")
    mode.add_argument("--partial", type=int, metavar="N")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", parents=[prod], help="algebraic or transcendental")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[prod], help="check partial product against closed form")
    p.add_argument("-N", type=int, default=10)
    p.add_argument("--grid", metavar="FILE",
                   help="verify every 'family a b r c [start]' line of FILE ('-' for stdin)")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        cap = _default_cap()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(cap)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndexCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
