"""Batch command-line frontend.

Subcommands: compute, verdict (eq2|eq3|exponents|case-b-check),
scan (u2|quadratic), verify.  Every run emits one report envelope
(command, echoed inputs, result, timing) as text or JSON; scans can
also emit their witnesses as CSV.

Exit codes are part of the contract:
    0  success (an Incompatible verdict is a result, not an error)
    1  verify found a failing claim
    2  argument parsing or domain validation failed
    3  a documented precondition does not hold for the input
    4  --expect-empty was given and witnesses exist
    5  the scan exceeds the cell budget

Arbitrary-size integers cross the boundary as decimal strings so that
downstream JSON tooling cannot round them.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

from .binomial_core import (
    BinomialPair,
    TrinomialTriple,
    gcd_normalize,
    truncated2_direct,
    truncated2_series,
    truncated3,
)
from .claims import DEFAULT_SEED, FULL, QUICK, format_claim_line, run_claims
from .compatibility import (
    VerdictKind,
    binomial_equation_verdict,
    case_A_verdict,
    case_B_consistency_check,
    case_B_exponents,
    necessary_conditions_2,
)
from .errors import DomainError, PreconditionError, ScanBudgetError
from .residue_scan import (
    DEFAULT_CELL_BUDGET,
    ScanConstraints,
    scan_divisibility,
    scan_quadratic,
)
from .valuation import Valuation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_VALIDATION = 2
EXIT_PRECONDITION = 3
EXIT_EXPECTATION = 4
EXIT_BUDGET = 5

BUDGET_ENV_VAR = "SCAN_BUDGET_CELLS"


def _exponent_jsonable(exponent):
    if isinstance(exponent, float) and math.isinf(exponent):
        return "infinite"
    return exponent


def _jsonable(value):
    """Evidence values: enums by name, valuations structured, ints as strings."""
    if isinstance(value, VerdictKind):
        return value.value
    if isinstance(value, Valuation):
        return {
            "base": value.base,
            "exponent": _exponent_jsonable(value.exponent),
            "cofactor": str(value.cofactor),
        }
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float) and math.isinf(value):
        return "infinite"
    return value


def _verdict_payload(verdict):
    return {
        "kind": verdict.kind.value,
        "reason": verdict.reason,
        "evidence": {k: _jsonable(v) for k, v in verdict.evidence.items()},
    }


def _print_text_block(payload, indent=""):
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_text_block(value, indent + "  ")
        else:
            print(f"{indent}{key}: {value}")


def _emit(args, command, inputs, payload, started, csv_rows=None):
    timing_ms = round((time.perf_counter() - started) * 1000.0, 3)
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        envelope = {
            "command": command,
            "inputs": inputs,
            "result": payload,
            "timing_ms": timing_ms,
        }
        print(json.dumps(envelope, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "k", "a_res", "b_res"])
        for row in csv_rows or []:
            writer.writerow(row)
    else:
        print(f"# {command}")
        _print_text_block(payload)
        print(f"# elapsed: {timing_ms} ms")


# ---------------------------------------------------------------------------
# compute

def cmd_compute(args):
    started = time.perf_counter()
    inputs = {"a": str(args.a), "b": str(args.b), "n": args.n}
    if args.c is not None:
        inputs["c"] = str(args.c)
        t = TrinomialTriple(args.a, args.b, args.c, args.n)
        payload = {
            "u": str(truncated3(t)),
            "u_ab": str(truncated2_direct(t.pair_ab())),
            "u_qc": str(truncated2_direct(t.pair_qc())),
        }
    else:
        p = BinomialPair(args.a, args.b, args.n)
        u = truncated2_direct(p)
        payload = {"u": str(u)}
        if args.all_forms:
            payload["forms"] = {
                "direct": str(u),
                "mixed": str(truncated2_series(p, "mixed")),
                "q_minus_a": str(truncated2_series(p, "q_minus_a")),
                "q_minus_b": str(truncated2_series(p, "q_minus_b")),
            }
    _emit(args, "compute", inputs, payload, started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verdict

def cmd_verdict_eq2(args):
    started = time.perf_counter()
    inputs = {"a": str(args.a), "b": str(args.b), "n": args.n}
    pair = BinomialPair(args.a, args.b, args.n)
    payload = _verdict_payload(binomial_equation_verdict(pair))
    if (args.a, args.b) != (0, 0):
        report = necessary_conditions_2(pair)
        payload["conditions"] = {
            "coprime_after_normalization": report.coprime_after_normalization,
            "parity_class": report.parity_class,
            "q_div_2n": report.q_div_2n,
            "beta": None if report.beta is None else str(report.beta),
        }
    _emit(args, "verdict eq2", inputs, payload, started)
    return EXIT_OK


def cmd_verdict_eq3(args):
    started = time.perf_counter()
    inputs = {"a": str(args.a), "b": str(args.b), "c": str(args.c), "n": args.n}
    normalized, g = gcd_normalize([args.a, args.b, args.c])
    t = TrinomialTriple(normalized[0], normalized[1], normalized[2], args.n)
    payload = _verdict_payload(case_A_verdict(t))
    payload["normalized"] = [str(v) for v in normalized]
    payload["gcd_removed"] = str(g)
    _emit(args, "verdict eq3", inputs, payload, started)
    return EXIT_OK


def cmd_verdict_exponents(args):
    started = time.perf_counter()
    inputs = {"rho_c": args.rho_c, "n": args.n}
    profile = case_B_exponents(args.rho_c, args.n)
    payload = {
        "rho_c": profile.rho_c,
        "rho_beta": profile.rho_beta,
        "rho_q": profile.rho_q,
    }
    _emit(args, "verdict exponents", inputs, payload, started)
    return EXIT_OK


def cmd_verdict_case_b_check(args):
    started = time.perf_counter()
    inputs = {"a": str(args.a), "b": str(args.b), "c": str(args.c), "n": args.n}
    normalized, g = gcd_normalize([args.a, args.b, args.c])
    t = TrinomialTriple(normalized[0], normalized[1], normalized[2], args.n)
    report = case_B_consistency_check(t)
    payload = {
        "relabeled": {"a": str(report.a), "b": str(report.b), "c": str(report.c)},
        "gcd_removed": str(g),
        "observed": {
            "rho_c": _exponent_jsonable(report.rho_c),
            "c0": str(report.c0),
            "rho_q": _exponent_jsonable(report.rho_q),
            "q0": str(report.q0),
            "rho_beta": _exponent_jsonable(report.rho_beta),
            "beta0": str(report.beta0),
        },
        "expected": {
            "rho_c": report.expected.rho_c,
            "rho_beta": report.expected.rho_beta,
            "rho_q": report.expected.rho_q,
        },
        "rho_q_matches": report.rho_q_matches,
        "rho_beta_matches": report.rho_beta_matches,
        "u_ab_valuation": _exponent_jsonable(report.u_ab_valuation),
        "u_ab_expected": _exponent_jsonable(report.u_ab_expected),
        "u_ab_matches": report.u_ab_matches,
        "u_qc_valuation": _exponent_jsonable(report.u_qc_valuation),
        "u_qc_expected": _exponent_jsonable(report.u_qc_expected),
        "u_qc_matches": report.u_qc_matches,
    }
    _emit(args, "verdict case-b-check", inputs, payload, started)
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan

def _resolve_budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}")
    return DEFAULT_CELL_BUDGET


def cmd_scan_u2(args):
    started = time.perf_counter()
    if args.case_a:
        constraints = ScanConstraints.case_a()
    else:
        constraints = ScanConstraints(
            forbid_a_zero=args.forbid_a,
            forbid_b_zero=args.forbid_b,
            forbid_sum_zero_mod_n=args.forbid_sum,
        )
    inputs = {
        "n": args.n,
        "k": args.k,
        "constraints": constraints.to_jsonable(),
        "workers": args.workers,
        "expect_empty": args.expect_empty,
    }
    report = scan_divisibility(
        args.n,
        args.k,
        constraints,
        workers=args.workers,
        cell_budget=_resolve_budget(args),
    )
    payload = report.to_jsonable()
    csv_rows = [[report.n, report.power_k, a, b] for a, b in report.witnesses]
    _emit(args, "scan u2", inputs, payload, started, csv_rows=csv_rows)
    if args.expect_empty and report.witnesses:
        print(
            f"expectation violated: {len(report.witnesses)} witnesses found",
            file=sys.stderr,
        )
        return EXIT_EXPECTATION
    return EXIT_OK


def cmd_scan_quadratic(args):
    started = time.perf_counter()
    inputs = {"n": args.n}
    report = scan_quadratic(args.n)
    payload = report.to_jsonable()
    # The quadratic scan works mod n itself, hence k = 1 in the CSV rows.
    csv_rows = [[report.n, 1, a, b] for a, b in report.zero_pairs]
    _emit(args, "scan quadratic", inputs, payload, started, csv_rows=csv_rows)
    if getattr(args, "expect_empty", False) and report.zero_pairs:
        print(
            f"expectation violated: {len(report.zero_pairs)} zero pairs found",
            file=sys.stderr,
        )
        return EXIT_EXPECTATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args):
    started = time.perf_counter()
    scale = FULL if args.full else QUICK
    codes = args.claim if args.claim else None
    inputs = {
        "scale": scale.name,
        "seed": args.seed,
        "claims": list(codes) if codes else "all",
    }
    results = run_claims(codes=codes, scale=scale, seed=args.seed)
    all_passed = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "all_passed": all_passed,
            "results": [
                {
                    "code": r.code,
                    "title": r.title,
                    "passed": r.passed,
                    "duration_ms": round(r.duration_ms, 3),
                    "details": r.details,
                }
                for r in results
            ],
        }
        _emit(args, "verify", inputs, payload, started)
    else:
        for r in results:
            print(format_claim_line(r))
        failed = [r.code for r in results if not r.passed]
        total_ms = (time.perf_counter() - started) * 1000.0
        if failed:
            print(f"# {len(failed)} claim(s) failed: {', '.join(failed)} "
                  f"({total_ms:.0f} ms total)")
        else:
            print(f"# all {len(results)} claims passed ({total_ms:.0f} ms total)")
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser

def build_parser():
    parser = argparse.ArgumentParser(
        prog="truncbin",
        description="Exact divisibility analysis of truncated Newton binomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, with_csv=False):
        choices = ["text", "json", "csv"] if with_csv else ["text", "json"]
        p.add_argument("--format", choices=choices, default="text")

    p_compute = sub.add_parser("compute", help="evaluate U for a pair or triple")
    p_compute.add_argument("--a", type=int, required=True)
    p_compute.add_argument("--b", type=int, required=True)
    p_compute.add_argument("--c", type=int, default=None)
    p_compute.add_argument("--n", type=int, required=True, help="prime exponent >= 3")
    p_compute.add_argument(
        "--all-forms", action="store_true", help="also print the three series forms"
    )
    add_format(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_verdict = sub.add_parser("verdict", help="compatibility decisions")
    verdict_sub = p_verdict.add_subparsers(dest="which", required=True)

    p_eq2 = verdict_sub.add_parser("eq2", help="two-integer equation verdict")
    p_eq2.add_argument("--a", type=int, required=True)
    p_eq2.add_argument("--b", type=int, required=True)
    p_eq2.add_argument("--n", type=int, required=True)
    add_format(p_eq2)
    p_eq2.set_defaults(func=cmd_verdict_eq2)

    p_eq3 = verdict_sub.add_parser("eq3", help="three-integer Case-A verdict")
    p_eq3.add_argument("--a", type=int, required=True)
    p_eq3.add_argument("--b", type=int, required=True)
    p_eq3.add_argument("--c", type=int, required=True)
    p_eq3.add_argument("--n", type=int, required=True)
    add_format(p_eq3)
    p_eq3.set_defaults(func=cmd_verdict_eq3)

    p_exp = verdict_sub.add_parser("exponents", help="Case-B exponent algebra")
    p_exp.add_argument("--rho-c", dest="rho_c", type=int, required=True)
    p_exp.add_argument("--n", type=int, required=True)
    add_format(p_exp)
    p_exp.set_defaults(func=cmd_verdict_exponents)

    p_bcheck = verdict_sub.add_parser(
        "case-b-check", help="check a Case-B triple against the exponent algebra"
    )
    p_bcheck.add_argument("--a", type=int, required=True)
    p_bcheck.add_argument("--b", type=int, required=True)
    p_bcheck.add_argument("--c", type=int, required=True)
    p_bcheck.add_argument("--n", type=int, required=True)
    add_format(p_bcheck)
    p_bcheck.set_defaults(func=cmd_verdict_case_b_check)

    p_scan = sub.add_parser("scan", help="exhaustive residue scans")
    scan_sub = p_scan.add_subparsers(dest="which", required=True)

    p_u2 = scan_sub.add_parser("u2", help="scan U(a, b) mod n^k over the full grid")
    p_u2.add_argument("--n", type=int, required=True)
    p_u2.add_argument("--k", type=int, required=True)
    p_u2.add_argument(
        "--case-a",
        action="store_true",
        help="restrict to a, b, a+b all prime to n",
    )
    p_u2.add_argument("--forbid-a", action="store_true", help="exclude a = 0 (mod n)")
    p_u2.add_argument("--forbid-b", action="store_true", help="exclude b = 0 (mod n)")
    p_u2.add_argument(
        "--forbid-sum", action="store_true", help="exclude a+b = 0 (mod n)"
    )
    p_u2.add_argument("--workers", type=int, default=1)
    p_u2.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"cell cap (default {DEFAULT_CELL_BUDGET}, or {BUDGET_ENV_VAR})",
    )
    p_u2.add_argument(
        "--expect-empty",
        action="store_true",
        help="exit 4 if any witness is found",
    )
    add_format(p_u2, with_csv=True)
    p_u2.set_defaults(func=cmd_scan_u2)

    p_quad = scan_sub.add_parser(
        "quadratic", help="zero set of (da^2 + da*db + db^2) mod n"
    )
    p_quad.add_argument("--n", type=int, required=True)
    p_quad.add_argument("--expect-empty", action="store_true")
    add_format(p_quad, with_csv=True)
    p_quad.set_defaults(func=cmd_scan_quadratic)

    p_verify = sub.add_parser("verify", help="rerun the whole claim catalog")
    mode = p_verify.add_mutually_exclusive_group()
    mode.add_argument("--quick", action="store_true", help="reduced samples (default)")
    mode.add_argument("--full", action="store_true", help="full-scale samples")
    p_verify.add_argument(
        "--claim",
        action="append",
        metavar="CODE",
        help="run only this claim (repeatable)",
    )
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScanBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
