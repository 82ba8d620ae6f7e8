"""Command line interface.

    binform compute --family bracket --c 1 --d 7 --n 15
    binform verify thm-divisibility --n-max 45 --out report.csv
    binform scan conjecture --part i --p-max 500 --out scan.csv

Exit codes: 0 all checks passed (or scan finished clean), 1 at least one
failure or counterexample, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict

from .arith import factorize, is_prime, is_squarefree, jacobi, totient
from .families import (FamilyKind, FormFamily, brace_cd, bracket_cd, paren_cd,
                       power_det_mod_p, shifted_power_det_mod_p, shifted_power_matrix)
from .detkit import det_mod_p
from .formulas import Dp11Case, predict_dp11, shift_closed_form, x_independence_applicable
from .harness import (CampaignConfig, ReportWriter, Verdict, exit_code_for,
                      run_suite, scan_conjecture, DEFAULT_SCAN_P_MAX, SUITES)

_SYMBOL_FAMILIES = ("bracket", "paren", "brace")
_POWER_FAMILIES = ("dp", "dp-inner", "dp-zero")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binform")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="evaluate a single determinant family member")
    pc.add_argument("--family", required=True,
                    choices=[k.value for k in FamilyKind])
    pc.add_argument("--c", type=int, default=None)
    pc.add_argument("--d", type=int, default=None)
    pc.add_argument("--n", type=int, default=None, help="odd modulus (symbol families)")
    pc.add_argument("--p", type=int, default=None, help="odd prime (power families)")
    pc.add_argument("--e", "--exponent", dest="e", type=int, default=None)
    pc.add_argument("--x", type=int, default=None, help="additive shift (shifted family)")
    pc.add_argument("--coeffs", type=str, default=None,
                    help="comma-separated coefficients a_0,..,a_n (shifted family)")

    pv = sub.add_parser("verify", help="run a verification suite over a grid")
    pv.add_argument("suite", choices=list(SUITES))
    pv.add_argument("--n-min", type=int, default=None)
    pv.add_argument("--n-max", type=int, default=None)
    pv.add_argument("--p-min", type=int, default=None)
    pv.add_argument("--p-max", type=int, default=None)
    pv.add_argument("--c-min", type=int, default=None)
    pv.add_argument("--c-max", type=int, default=None)
    pv.add_argument("--d-min", type=int, default=None)
    pv.add_argument("--d-max", type=int, default=None)
    pv.add_argument("--trials", type=int, default=None)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--threads", type=int, default=1)
    pv.add_argument("--out", type=str, default=None)
    pv.add_argument("--format", choices=("csv", "json"), default="csv")

    ps = sub.add_parser("scan", help="observational scan of a conjectured family")
    ps.add_argument("target", choices=("conjecture",))
    ps.add_argument("--part", required=True, choices=("i", "ii", "iii"))
    ps.add_argument("--p-max", type=int, default=DEFAULT_SCAN_P_MAX)
    ps.add_argument("--out", required=True)
    ps.add_argument("--threads", type=int, default=1)
    ps.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _require(value, flag: str, reason: str):
    if value is None:
        raise ValueError(f"missing {flag}: {reason}")
    return value


def _cmd_compute(args: argparse.Namespace) -> int:
    family = args.family
    if family in _SYMBOL_FAMILIES:
        c = _require(args.c, "--c", "the form i^2+cij+dj^2 needs c")
        d = _require(args.d, "--d", "the form i^2+cij+dj^2 needs d")
        n = _require(args.n, "--n", f"{family} is indexed by an odd modulus n")
        value = {"bracket": bracket_cd, "paren": paren_cd, "brace": brace_cd}[family](c, d, n)
        print(f"{family}[c={c},d={d},n={n}] = {value}")
        jn = jacobi(d, n)
        f = factorize(n)
        if family == "bracket":
            if not is_squarefree(f):
                print("predicted: 0 (n is odd and not squarefree)")
            elif jn == -1:
                m = totient(f) ** 2
                print(f"divisible by {m}: {'yes' if value % m == 0 else 'no'}")
            elif is_prime(n) and jn == 1:
                print(f"divisible by {n - 1}: {'yes' if value % (n - 1) == 0 else 'no'}")
        elif family == "paren" and jn == -1:
            print("predicted: 0")
        return 0

    if family in _POWER_FAMILIES:
        c = _require(args.c, "--c", "the form i^2+cij+dj^2 needs c")
        d = _require(args.d, "--d", "the form i^2+cij+dj^2 needs d")
        p = _require(args.p, "--p", f"{family} is indexed by an odd prime p")
        if family == "dp-zero":
            e = _require(args.e, "--e", "dp-zero has no default exponent")
        else:
            e = args.e if args.e is not None else p - 2
        builder = {"dp": FormFamily.power_full, "dp-inner": FormFamily.power_inner,
                   "dp-zero": FormFamily.power_zero_full}[family]
        value = power_det_mod_p(builder(c, d, e), p)
        note = f"  (= {value.signed} mod {p})" if value.value > p // 2 else ""
        print(f"{family}[c={c},d={d},p={p},e={e}] = {value}{note}")
        if family == "dp-inner" and (c, d) == (1, 1) and e == p - 2 and p > 3:
            prediction = predict_dp11(p)
            if prediction.case is Dp11Case.TWO_MOD_3:
                print(f"predicted ({prediction.case.value}): {prediction.residue},"
                      f" symbol {prediction.symbol}")
            elif prediction.case is Dp11Case.SEVEN_MOD_9:
                print(f"predicted ({prediction.case.value}): 0 mod {p}")
            else:
                print(f"predicted ({prediction.case.value}): symbol {prediction.symbol}"
                      f" from sigma sums {prediction.sigma1} and {prediction.sigma2}")
        elif family == "dp" and jacobi(d, p) == -1 and 1 <= e <= p - 1:
            print(f"predicted: 0 mod {p}")
        elif family == "dp-zero" and (p + 1) // 2 <= e <= p - 2:
            print(f"predicted: 0 mod {p}")
        return 0

    # shifted family
    p = _require(args.p, "--p", "the shifted family is indexed by an odd prime p")
    x = _require(args.x, "--x", "the shifted family needs the additive shift x")
    if args.coeffs is not None:
        coeffs = [int(tok) for tok in args.coeffs.split(",") if tok.strip() != ""]
        value = shifted_power_det_mod_p(coeffs, x, p)
        print(f"shifted[n={len(coeffs) - 1},x={x},p={p}] = {value}")
        if p - 2 <= len(coeffs) - 1 <= 2 * p - 3:
            print(f"predicted: {shift_closed_form(coeffs, x, p)}")
    else:
        c = _require(args.c, "--c", "without --coeffs the shifted family needs c")
        d = _require(args.d, "--d", "without --coeffs the shifted family needs d")
        e = _require(args.e, "--e", "without --coeffs the shifted family needs an exponent")
        fam = FormFamily.shifted(x, c=c, d=d, exponent=e)
        value = det_mod_p(shifted_power_matrix(fam, p), p)
        print(f"shifted[c={c},d={d},e={e},x={x},p={p}] = {value}")
        if p > 3 and x_independence_applicable(e, p):
            print("note: this value is independent of x for the given exponent")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = CampaignConfig(
        suite=args.suite, n_min=args.n_min, n_max=args.n_max, p_min=args.p_min,
        p_max=args.p_max, c_min=args.c_min, c_max=args.c_max, d_min=args.d_min,
        d_max=args.d_max, trials=args.trials, seed=args.seed, threads=args.threads,
        out=args.out, fmt=args.format)
    if args.out is not None:
        handle = open(args.out, "w", newline="")
        summary_stream = sys.stdout
    else:
        handle = sys.stdout
        summary_stream = sys.stderr
    writer = ReportWriter(handle, args.format)
    try:
        records = run_suite(config, writer)
    finally:
        writer.close()
        if handle is not sys.stdout:
            handle.close()
    tally = {v: sum(1 for r in records if r.verdict is v) for v in Verdict}
    grid = {k: v for k, v in asdict(config).items()
            if v is not None and k not in ("suite", "out", "fmt", "threads")}
    print(f"suite={config.suite} records={len(records)} pass={tally[Verdict.PASS]}"
          f" fail={tally[Verdict.FAIL]} skip={tally[Verdict.SKIP]} grid={grid}",
          file=summary_stream)
    return exit_code_for(records)


def _cmd_scan(args: argparse.Namespace) -> int:
    summary = scan_conjecture(args.part, args.p_max, out=args.out,
                              threads=args.threads, fmt=args.format)
    print(f"conjecture part={summary.part} p_max={summary.p_max}"
          f" checked={summary.checked} divisible={summary.divisible}"
          f" counterexamples={summary.counterexamples}")
    return 1 if summary.counterexamples else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_scan(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
