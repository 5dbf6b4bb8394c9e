"""Command-line interface: ``lenumbers {analyze,classify,snf,charpolys,verify,corpus}``.

Exit codes: 0 ok, 1 usage or parse error, 2 genericity failure, 3 input out
of scope (critical locus not a curve, or origin not critical), 4 corpus
mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import report
from .classify import classify
from .components import SplitConfig
from .errors import ClassificationError, JacobianError, LeError
from .lecycles import analyze
from .lemodule import (
    IntegerMatrix,
    format_intpoly,
    kernel_cokernel,
    possible_char_polys,
    smith_normal_form,
    verify_le_module_candidate,
)
from .poly import PolynomialParseError, parse_polynomial

EXIT_OK, EXIT_USAGE, EXIT_GENERICITY, EXIT_SCOPE, EXIT_CORPUS = 0, 1, 2, 3, 4
SEED_ENV = "LENUMBERS_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}")


def _int_list(text: str) -> list:
    return [int(x) for x in text.split(",") if x.strip()]


def _r_value(text: str):
    parts = _int_list(text)
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return tuple(parts)
    raise argparse.ArgumentTypeError("--r takes N or LO,HI")


def _matrix(text: str, shape: str | None = None) -> IntegerMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"matrix is not valid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix must be a list of rows")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in data for x in r):
        raise ValueError("matrix entries must be integers")
    if shape is not None:
        rows, cols = (int(x) for x in shape.lower().split("x"))
        if not data and rows == 0:
            return IntegerMatrix.zeros(0, cols)
        M = IntegerMatrix.from_rows(data)
        if (M.rows, M.cols) != (rows, cols):
            raise ValueError(f"matrix is {M.rows}x{M.cols}, shape says {shape}")
        return M
    return IntegerMatrix.from_rows(data)


def _emit(obj, fmt: str, text_fn=None):
    if fmt == "json" or text_fn is None:
        print(report.dumps(obj))
    else:
        print(text_fn(obj))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    if len(variables) < 3:
        print("error: need at least three variables (z0 first)", file=sys.stderr)
        return EXIT_USAGE
    try:
        f = parse_polynomial(args.poly, variables)
    except PolynomialParseError as exc:
        print(f"parse error ({exc.kind}) at position {exc.position}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cfg = SplitConfig(max_factor_degree=args.max_factor_degree, trials=args.trials, seed=args.seed)
    try:
        analysis = analyze(f, cfg)
    except JacobianError as exc:
        print(f"{exc.code}: {exc} (outside the one-dimensional critical locus setting)", file=sys.stderr)
        return EXIT_SCOPE
    except LeError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = report.analysis_report(args.poly, variables, analysis, cfg)
    _emit(rep, args.format, report.analysis_text)
    return EXIT_OK if analysis.valid else EXIT_GENERICITY


def cmd_classify(args) -> int:
    try:
        profiles = classify(args.l0, args.l1, m=args.m, r=args.r, mu=args.mu, n=args.n)
    except ClassificationError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = [report.profile_dict(p, args.n) for p in profiles]
    _emit(out, args.format, lambda ps: "\n".join(
        p["summary"] + ("  (no known example)" if p["open_example"] else "") for p in ps))
    return EXIT_OK


def cmd_snf(args) -> int:
    try:
        A = _matrix(args.matrix, args.shape)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = report.snf_dict(smith_normal_form(A))
    out["kernel_cokernel"] = report.kernel_cokernel_dict(kernel_cokernel(A))
    _emit(out, args.format, lambda o: "diag: " + " ".join(o["diag"]))
    return EXIT_OK


def cmd_charpolys(args) -> int:
    if args.degree < 1:
        print("error: --degree must be positive", file=sys.stderr)
        return EXIT_USAGE
    polys = [format_intpoly(q) for q in possible_char_polys(args.degree, args.trace)]
    _emit(polys, args.format, lambda ps: "\n".join(ps) or "(none)")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        A0 = _matrix(args.A0)
        A1 = _matrix(args.A1)
        D = _matrix(args.D, args.d_shape or f"{A0.rows}x{A1.rows}")
        rep = verify_le_module_candidate(D, A0, A1, args.m, args.n, _int_list(args.primes))
    except (ValueError, LeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = report.verify_dict(rep)
    _emit(out, args.format, lambda o: "\n".join(f"{k}: {v}" for k, v in sorted(o["checks"].items())))
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        entries = report.read_corpus(args.file)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not entries:
        print("warning: corpus is empty", file=sys.stderr)
        return EXIT_OK
    results = report.run_corpus(entries, args.seed, args.parallel, args.trials, args.max_factor_degree)
    _emit(results, args.format, report.corpus_table)
    return EXIT_OK if all(r["passed"] for r in results) else EXIT_CORPUS


def build_parser() -> argparse.ArgumentParser:
    seed = _default_seed()
    p = _Parser(prog="lenumbers", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, default_fmt="json"):
        sp.add_argument("--format", choices=("json", "text"), default=default_fmt)

    def split_flags(sp):
        sp.add_argument("--seed", type=int, default=seed, help=f"random seed (default ${SEED_ENV} or 0)")
        sp.add_argument("--max-factor-degree", type=int, default=6)
        sp.add_argument("--trials", type=int, default=4)

    a = sub.add_parser("analyze", help="Le cycles, Le numbers and cohomology profiles of a polynomial")
    a.add_argument("--poly", required=True)
    a.add_argument("--vars", required=True, help="comma-separated; the first is the distinguished z0")
    common(a)
    split_flags(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="admissible cohomology for given Le numbers")
    c.add_argument("--l0", type=int, required=True)
    c.add_argument("--l1", type=int, required=True)
    c.add_argument("--m", type=int)
    c.add_argument("--r", type=_r_value)
    c.add_argument("--mu", type=_int_list)
    c.add_argument("--n", type=int)
    common(c)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    s.add_argument("matrix", help='row-major JSON, e.g. "[[2,0],[0,3]]"')
    s.add_argument("--shape", help="RxC, required for matrices with no rows")
    common(s)
    s.set_defaults(func=cmd_snf)

    q = sub.add_parser("charpolys", help="products of cyclotomic polynomials with given degree and trace")
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--trace", type=int, required=True)
    common(q)
    q.set_defaults(func=cmd_charpolys)

    v = sub.add_parser("verify", help="check a candidate (D, A0, A1)")
    v.add_argument("--D", required=True)
    v.add_argument("--A0", required=True)
    v.add_argument("--A1", required=True)
    v.add_argument("--d-shape")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--primes", default="2,3,5,7")
    common(v)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("corpus", help="run a JSONL regression corpus (bundled one by default)")
    k.add_argument("--file")
    k.add_argument("--parallel", action="store_true")
    common(k, "text")
    split_flags(k)
    k.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
