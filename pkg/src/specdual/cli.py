"""Command line interface.

Exit codes: 0 success / property holds, 1 a checked property failed,
2 parse or validation error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .algebra.gcd import squarefree_primitive
from .algebra.poly import LaurentPoly, UniPoly
from .constructions import beh_duality_check, build_beh, build_Mqp, resultant_curve
from .errors import ValidationError
from .expr import to_operator
from .modrep import make_structure, matrix_rep
from .properties import SUITES, run_suite
from .spectral import (
    duality_check,
    fourier_curve_theorem_check,
    fourier_pair,
    is_quantization,
    is_spectral_quantization,
    spectral_curve,
)
from .weyl import WeylOp

EXIT_OK, EXIT_PROPERTY, EXIT_INVALID = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _operator(text, name):
    try:
        return to_operator(text)
    except ValidationError as exc:
        raise ValidationError(f"--{name}: {exc}") from None


def _weyl(text, name):
    op = _operator(text, name)
    if isinstance(op, LaurentPoly):
        raise ValidationError(f"--{name}: expected a D/s operator, got a Laurent polynomial")
    return op if isinstance(op, WeylOp) else WeylOp.constant(op)


def _multiplier(text, name):
    """Multiplication operator on Q[L] or Q[L, 1/L] for the resultant command."""
    op = _operator(text, name)
    if isinstance(op, WeylOp):
        if any(not c.is_constant() for c in op.coeffs):
            raise ValidationError(f"--{name}: multiplication operators cannot involve s")
        return UniPoly([c.lc for c in op.coeffs], "L")
    if isinstance(op, LaurentPoly):
        if op and op.bot >= 0:
            return UniPoly({k: c for k, c in op.term_map.items()}, "L")
        return op
    raise ValidationError(f"--{name}: constant operators are not allowed")


def _rational_list(text):
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad coefficient list {text!r}: {exc}") from None


# -- commands -------------------------------------------------------------------

def cmd_matrix(args):
    m = make_structure(_operator(args.action, "action"), args.window_start)
    M = matrix_rep(m, _operator(args.op, "op"))
    payload = M.to_json()
    payload["window_start"] = m.window_start
    return EXIT_OK, payload, M.to_text()


def _curve_text(c, label):
    return [f"{label}: {c.raw.to_text()} = 0",
            f"  normal form: {c.normal.to_text()}",
            f"  rank: {c.rank}"]


def cmd_curve(args):
    c = spectral_curve(_operator(args.action, "action"), _operator(args.op, "op"),
                       args.window_start)
    return EXIT_OK, c.to_json(), "\n".join(_curve_text(c, "curve"))


def cmd_dual_check(args):
    r = duality_check(_operator(args.p, "p"), _operator(args.q, "q"),
                      args.p_window, args.q_window)
    lines = [f"duality {'holds' if r.holds else 'FAILS'}"]
    lines += _curve_text(r.X_QP, "X_QP")
    lines += _curve_text(r.X_PQ, "X_PQ")
    lines.append(f"swap(X_PQ): {r.X_PQ.raw.swap().to_text()} = 0")
    return (EXIT_OK if r.holds else EXIT_PROPERTY), r.to_json(), "\n".join(lines)


def cmd_quantize_check(args):
    pair0 = (_weyl(args.p0, "p0"), _weyl(args.q0, "q0"))
    pair1 = (_weyl(args.p1, "p1"), _weyl(args.q1, "q1"))
    check = is_spectral_quantization if args.spectral else is_quantization
    r = check(pair0, pair1)
    payload = r.to_json()
    lines = [f"{k}: {v}" for k, v in payload.items()]
    return (EXIT_OK if r.verdict else EXIT_PROPERTY), payload, "\n".join(lines)


def cmd_fourier_check(args):
    pair1 = (_weyl(args.p1, "p1"), _weyl(args.q1, "q1"))
    ok = fourier_curve_theorem_check(pair1)
    fp, fq = fourier_pair(*pair1)
    lhs = spectral_curve(fq, fp)
    rhs = spectral_curve(pair1[1], pair1[0]).fourier()
    payload = {"holds": ok, "lhs": lhs.to_json(), "rhs": rhs.to_json()}
    lines = [f"fourier duality {'holds' if ok else 'FAILS'}",
             f"X_F(P1,Q1): {lhs.raw.to_text()} = 0",
             f"F(X_(P1,Q1)): {rhs.raw.to_text()} = 0"]
    return (EXIT_OK if ok else EXIT_PROPERTY), payload, "\n".join(lines)


def cmd_beh(args):
    try:
        gamma = Fraction(args.gamma)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"--gamma: {exc}") from None
    inst = build_beh(gamma, _rational_list(args.a), _rational_list(args.b), args.N)
    r = beh_duality_check(inst)
    ok = r.holds and r.d1_matches and r.d2_matches
    payload = {"instance": inst.to_json(), "report": r.to_json()}
    lines = [f"P = {inst.P.to_text()}", f"Q = {inst.Q.to_text()}", f"N = {inst.N}",
             "D1(x) =", inst.D1.to_text(), "D2(y) =", inst.D2.to_text(),
             f"det(y - D1(x)) = {r.lhs.to_text()}",
             f"det(x - D2(y)) = {r.rhs.to_text()}",
             f"scalar: {r.scalar}",
             f"loci equal: {r.holds}",
             f"D1 = M_PQ(x): {r.d1_matches}",
             f"D2 = M_QP(y): {r.d2_matches}"]
    return (EXIT_OK if ok else EXIT_PROPERTY), payload, "\n".join(lines)


def cmd_resultant(args):
    res = resultant_curve(_multiplier(args.p, "p"), _multiplier(args.q, "q"))
    normal = squarefree_primitive(res) if res else res
    payload = {"resultant": res.to_json(), "normal": normal.to_json()}
    return EXIT_OK, payload, f"{res.to_text()}\n  normal form: {normal.to_text()}"


def cmd_mqp(args):
    M = build_Mqp(args.p, args.q)
    return EXIT_OK, M.to_json(), M.to_text()


def cmd_property_suite(args):
    names = args.suite or list(SUITES)
    results = [run_suite(n, args.seed, args.count, args.jobs) for n in names]
    ok = all(r.ok for r in results)
    payload = {"seed": args.seed, "count": args.count, "suites": [r.to_json() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.passed}/{r.count}")
        for f in r.failures:
            lines.append("  witness: " + json.dumps(f, sort_keys=True))
    return (EXIT_OK if ok else EXIT_PROPERTY), payload, "\n".join(lines)


# -- parser ---------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="master seed for randomized suites (default 0)")

    parser = _ArgumentParser(prog="specdual", parents=[common],
                             description="Spectral curves of operator pairs and their duality.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("matrix", parents=[common], help="print M_{B,A}")
    p.add_argument("--action", required=True, help="operator A defining the u-action")
    p.add_argument("--op", required=True, help="operator B")
    p.add_argument("--window-start", type=int, default=None)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("curve", parents=[common], help="print the spectral curve X_{B,A}")
    p.add_argument("--action", required=True)
    p.add_argument("--op", required=True)
    p.add_argument("--window-start", type=int, default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("dual-check", parents=[common], help="check X_{Q,P} = swap(X_{P,Q})")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--p-window", type=int, default=None)
    p.add_argument("--q-window", type=int, default=None)
    p.set_defaults(func=cmd_dual_check)

    p = sub.add_parser("quantize-check", parents=[common],
                       help="is (P1, Q1) a (spectral) quantization of (P0, Q0)?")
    for name in ("p0", "q0", "p1", "q1"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--spectral", action="store_true")
    p.set_defaults(func=cmd_quantize_check)

    p = sub.add_parser("fourier-check", parents=[common],
                       help="check X_{F(P1,Q1)} = F(X_{(P1,Q1)})")
    p.add_argument("--p1", required=True)
    p.add_argument("--q1", required=True)
    p.set_defaults(func=cmd_fourier_check)

    p = sub.add_parser("beh", parents=[common], help="large-N two-matrix model duality")
    p.add_argument("--gamma", required=True)
    p.add_argument("--a", required=True, help="a0,a1,...,a_d2")
    p.add_argument("--b", required=True, help="b0,b1,...,b_d1")
    p.add_argument("--N", type=int, default=None)
    p.set_defaults(func=cmd_beh)

    p = sub.add_parser("resultant", parents=[common], help="Res_L(P - x, Q - y)")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_resultant)

    p = sub.add_parser("mqp", parents=[common], help="matrix of D^q relative to D^p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_mqp)

    p = sub.add_parser("property-suite", parents=[common], help="randomized invariant suites")
    p.add_argument("--count", type=int, default=20, help="cases per suite")
    p.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="run only this suite (repeatable)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=cmd_property_suite)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    if args.seed < 0 or args.seed >= 2 ** 64:
        print("specdual: error: --seed must be a 64-bit unsigned integer", file=stderr)
        return EXIT_INVALID
    try:
        code, payload, text = args.func(args)
    except ValidationError as exc:
        print(f"specdual {args.command}: error: {exc}", file=stderr)
        return EXIT_INVALID
    if args.json:
        print(json.dumps(payload, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return code


def run():
    sys.exit(main())
