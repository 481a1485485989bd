"""Command-line surface with bit-exact JSON input and output.

Scalars use the text grammar R, R+S*w or R-S*w with rational R, S (w denotes
the cube root of unity).  Elements are nine such scalars in the fixed basis
order 1, x, x^2, y, y^2, xy, x^2y^2, x^2y, xy^2, either as a JSON object
{"a": ..., "b": ..., "coeffs": [...]} or inline via --coeffs with --a/--b.

Exit codes: 0 success, 1 domain error (not invertible, parameter mismatch,
violated hypothesis, failed verification), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    NotInvertible,
    ParamsMismatch,
    SymbolAlgebra,
    SymbolElement,
    element_from_dict,
    element_to_dict,
)
from .cyclotomic import CycQ, ScalarFormatError
from .fibonacci import (
    UnsupportedParams,
    fib_element,
    generalized_element,
    invertibility_scan,
    run_lemma_suite,
)
from .representations import IdentityViolation, MatK, gamma_mat, lambda_mat
from .solvers import (
    HypothesisViolated,
    SolutionSet,
    VerificationFailed,
    solve_commute,
    solve_commutator,
    solve_intertwine,
    solve_sylvester,
)
from .verify import SUITES, run_suite


class InputError(ValueError):
    """Malformed scalar, coefficient list or element JSON (exit code 2)."""


def _parse_scalar(text: str) -> CycQ:
    try:
        return CycQ.parse(text)
    except ScalarFormatError as exc:
        raise InputError(str(exc)) from None


def _algebra_from_args(args) -> SymbolAlgebra:
    try:
        return SymbolAlgebra(_parse_scalar(args.a), _parse_scalar(args.b))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _element_from_file(path: str) -> SymbolElement:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return element_from_dict(data)
    except OSError as exc:
        raise InputError(f"cannot read element file: {exc}") from None
    except (json.JSONDecodeError, KeyError, TypeError, ScalarFormatError, ValueError) as exc:
        raise InputError(f"bad element JSON in {path}: {exc}") from None


def _element_from_coeffs(text: str, algebra: SymbolAlgebra) -> SymbolElement:
    parts = text.split(",")
    if len(parts) != 9:
        raise InputError("--coeffs needs exactly 9 comma-separated scalars")
    return algebra.element([_parse_scalar(p) for p in parts])


def _primary_element(args) -> SymbolElement:
    if getattr(args, "in_file", None):
        return _element_from_file(args.in_file)
    if getattr(args, "coeffs", None):
        return _element_from_coeffs(args.coeffs, _algebra_from_args(args))
    raise InputError("element required: use --in FILE or --coeffs LIST")


def _secondary_element(args, algebra: SymbolAlgebra) -> SymbolElement:
    if getattr(args, "in_file2", None):
        return _element_from_file(args.in_file2)
    if getattr(args, "coeffs2", None):
        return _element_from_coeffs(args.coeffs2, algebra)
    raise InputError("second element required: use --in2 FILE or --coeffs2 LIST")


def _matrix_json(m: MatK) -> list:
    return [str(m.rows[i][j]) for i in range(9) for j in range(9)]


def _solution_json(sol: SolutionSet) -> dict:
    return {
        "verdict": sol.verdict.value,
        "particular": None if sol.particular is None else element_to_dict(sol.particular),
        "kernel": [element_to_dict(k) for k in sol.kernel],
        "notes": list(sol.notes),
    }


def _emit(payload, args) -> None:
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_element_options(sub, second: bool = False):
    sub.add_argument("--in", dest="in_file", metavar="FILE", help="element JSON file")
    sub.add_argument("--coeffs", metavar="LIST", help="9 comma-separated scalars")
    sub.add_argument("--a", default="1", help="algebra parameter a (with --coeffs)")
    sub.add_argument("--b", default="1", help="algebra parameter b (with --coeffs)")
    if second:
        sub.add_argument("--in2", dest="in_file2", metavar="FILE", help="second element JSON file")
        sub.add_argument("--coeffs2", metavar="LIST", help="second element coefficients")
    sub.add_argument("--out", metavar="FILE", help="write the JSON result to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbol3",
        description="exact arithmetic in degree-3 symbol algebras over Q(w)",
        epilog=(
            "coefficient lists are ordered by the basis "
            "1, x, x^2, y, y^2, xy, x^2y^2, x^2y, xy^2; "
            "scalars use the grammar R, R+S*w or R-S*w with rational R, S"
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("mul", "product of two elements"), ("add", "sum of two elements")):
        sub = subs.add_parser(name, help=help_text)
        _add_element_options(sub, second=True)

    for name, help_text in (
        ("norm", "reduced norm eta(z)"),
        ("trace", "reduced trace tau(z)"),
        ("charpoly", "characteristic polynomial coefficients (tau, pi, eta)"),
        ("adjoint", "adjoint z* with z z* = eta(z)"),
        ("inverse", "inverse z*/eta(z)"),
    ):
        sub = subs.add_parser(name, help=help_text)
        _add_element_options(sub)

    sub = subs.add_parser("twist", help="scale the y-degree blocks by powers of w")
    sub.add_argument("--k", type=int, choices=(1, 2), required=True)
    _add_element_options(sub)

    sub = subs.add_parser("repr", help="9x9 matrix of left or right multiplication")
    sub.add_argument("--rep", choices=("lambda", "gamma"), default="lambda")
    _add_element_options(sub)

    sub = subs.add_parser("solve", help="linear equations with algebra coefficients")
    sub.add_argument(
        "--eq", required=True, choices=("commute", "intertwine", "commutator", "sylvester")
    )
    sub.add_argument("--a", default="1", help="algebra parameter a")
    sub.add_argument("--b", default="1", help="algebra parameter b")
    for letter in ("A", "B", "C"):
        sub.add_argument(f"--{letter}", dest=f"elem_{letter.lower()}", metavar="LIST",
                         help=f"coefficients of {letter}")
        sub.add_argument(f"--{letter}-in", dest=f"elem_{letter.lower()}_in", metavar="FILE",
                         help=f"element JSON file for {letter}")
    sub.add_argument("--out", metavar="FILE")

    sub = subs.add_parser("fib", help="Fibonacci elements and the invertibility scan")
    sub.add_argument("--n", type=int, help="single element index")
    sub.add_argument("--p", type=int, help="Horadam seed p (with --q)")
    sub.add_argument("--q", type=int, help="Horadam seed q (with --p)")
    sub.add_argument("--check-invertible", action="store_true",
                     help="report eta and invertibility instead of the element")
    sub.add_argument("--scan", type=int, metavar="NMAX",
                     help="norm/invertibility report for n = 0..NMAX")
    sub.add_argument("--lemmas", action="store_true",
                     help="include the derivation-audit table in the scan report")
    sub.add_argument("--a", default="1")
    sub.add_argument("--b", default="1")
    sub.add_argument("--out", metavar="FILE")

    sub = subs.add_parser("verify", help="run the identity battery")
    sub.add_argument("--suite", choices=SUITES, default="all")
    sub.add_argument("--nmax", type=int, default=30)
    sub.add_argument("--samples", type=int, default=50)
    sub.add_argument("--seed", type=int, default=7)
    sub.add_argument("--corrupt-fixture", action="store_true",
                     help="negative control: damage one fixture expectation")
    sub.add_argument("--out", metavar="FILE")

    return parser


def _cmd_binary(args) -> int:
    z1 = _primary_element(args)
    z2 = _secondary_element(args, z1.algebra)
    out = z1 * z2 if args.command == "mul" else z1 + z2
    _emit(element_to_dict(out), args)
    return 0


def _cmd_unary(args) -> int:
    z = _primary_element(args)
    if args.command == "norm":
        _emit({"eta": str(z.reduced_norm())}, args)
    elif args.command == "trace":
        _emit({"tau": str(z.reduced_trace())}, args)
    elif args.command == "charpoly":
        tau, pi, eta = z.char_poly()
        _emit({"tau": str(tau), "pi": str(pi), "eta": str(eta)}, args)
    elif args.command == "adjoint":
        _emit(element_to_dict(z.adjoint()), args)
    elif args.command == "inverse":
        _emit(element_to_dict(z.inverse()), args)
    elif args.command == "twist":
        _emit(element_to_dict(z.twist(args.k)), args)
    elif args.command == "repr":
        mat = lambda_mat(z) if args.rep == "lambda" else gamma_mat(z)
        _emit(_matrix_json(mat), args)
    return 0


def _cmd_solve(args) -> int:
    algebra = _algebra_from_args(args)

    def need(letter: str) -> SymbolElement:
        path = getattr(args, f"elem_{letter}_in")
        coeffs = getattr(args, f"elem_{letter}")
        if path:
            return _element_from_file(path)
        if coeffs:
            return _element_from_coeffs(coeffs, algebra)
        raise InputError(f"--{letter.upper()} or --{letter.upper()}-in required for --eq {args.eq}")

    big_a = need("a")
    if args.eq == "commute":
        sol = solve_commute(big_a)
    elif args.eq == "intertwine":
        sol = solve_intertwine(big_a, need("b"))
    elif args.eq == "commutator":
        sol = solve_commutator(big_a, need("c"))
    else:
        sol = solve_sylvester(big_a, need("b"), need("c"))
    _emit(_solution_json(sol), args)
    return 0


def _cmd_fib(args) -> int:
    algebra = _algebra_from_args(args)
    if args.scan is not None:
        report = invertibility_scan(args.scan, algebra)
        if args.lemmas:
            report["lemmas"] = run_lemma_suite()
        _emit(report, args)
        return 0
    if args.n is None:
        raise InputError("fib needs --n or --scan")
    if (args.p is None) != (args.q is None):
        raise InputError("--p and --q must be given together")
    if args.p is not None:
        element = generalized_element(args.n, args.p, args.q, algebra)
    else:
        element = fib_element(args.n, algebra)
    if args.check_invertible:
        eta = element.reduced_norm()
        invertible = bool(eta)
        if invertible:
            invertible = element * element.inverse() == algebra.one()
        _emit({"n": args.n, "eta": str(eta), "invertible": invertible}, args)
    else:
        _emit(element_to_dict(element), args)
    return 0


def _cmd_verify(args) -> int:
    results, report = run_suite(
        suite=args.suite,
        nmax=args.nmax,
        samples=args.samples,
        seed=args.seed,
        corrupt_fixture=args.corrupt_fixture,
    )
    _emit(report, args)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"FAILED checks: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("mul", "add"):
            return _cmd_binary(args)
        if args.command in ("norm", "trace", "charpoly", "adjoint", "inverse", "twist", "repr"):
            return _cmd_unary(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "fib":
            return _cmd_fib(args)
        if args.command == "verify":
            return _cmd_verify(args)
        parser.error(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        NotInvertible,
        ParamsMismatch,
        HypothesisViolated,
        VerificationFailed,
        UnsupportedParams,
        IdentityViolation,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
