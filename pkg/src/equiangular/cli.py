"""Command-line entry point: ``equiangular <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 precondition or usage error.
Certificates are printed to stdout as JSON with exact numbers only.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .certificates import NBoundCert, RBoundCert, load_certificate, verify
from .constructions import (
    certify,
    line_graph_complement_cert,
    n_from_r,
    shearer_cert,
    shearer_threshold,
    tau_threshold,
    theorem1_pipeline,
    union_cert,
)
from .errors import EquiangularError, InvalidParameters, PreconditionError, VerificationError
from .exact import AlgebraicNumber, IntPoly
from .graph import graph6_encode, parse_graph
from .realize import LineSystem, realize_lines, verify_lines
from .search import parity_audit, r_table, render_table

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2

_ROOT_RE = re.compile(r"root\(([^;]*);([^,]*),([^)]*)\)")


def parse_algebraic(text: str) -> AlgebraicNumber:
    """Parse an exact real number.

    Accepted forms: ``21/10``, ``0.18``, ``1e-4``, ``sqrt(q)``,
    ``root(c0,c1,...;lo,hi)`` (the root of c0 + c1*x + ... in (lo, hi], with
    ascending integer coefficients), ``shearer`` for sqrt(2 + sqrt 5) and
    ``tau-max`` for 1/(1 + 2*sqrt(2 + sqrt 5)).
    """
    s = text.strip().replace(" ", "")
    try:
        if s == "shearer":
            return shearer_threshold()
        if s == "tau-max":
            return tau_threshold()
        if s.startswith("sqrt(") and s.endswith(")"):
            return AlgebraicNumber.sqrt(Fraction(s[5:-1]))
        m = _ROOT_RE.fullmatch(s)
        if m:
            coeffs = IntPoly(int(c) for c in m.group(1).split(","))
            return AlgebraicNumber(coeffs, Fraction(m.group(2)), Fraction(m.group(3)))
        return AlgebraicNumber.from_rational(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameters(f"cannot parse number {text!r}: {exc}") from exc


def _emit(obj, out_path: str | None = None) -> None:
    text = json.dumps(obj, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidParameters(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidParameters(f"{path} is not valid JSON: {exc}") from exc


def _read_rcert(path: str) -> RBoundCert:
    cert = load_certificate(_read_json(path))
    if isinstance(cert, NBoundCert):
        return cert.witness
    if not isinstance(cert, RBoundCert):
        raise InvalidParameters("expected an R-bound or N-bound certificate")
    return cert


def cmd_construct(args) -> int:
    if args.kind == "shearer":
        cert = shearer_cert(parse_algebraic(args.lam), Fraction(args.eps), args.max_steps)
    elif args.kind == "union":
        cert = union_cert(parse_graph(args.graph), args.t)
    elif args.kind == "lgc":
        cert = line_graph_complement_cert(parse_graph(args.graph))
    else:
        cert = theorem1_pipeline(parse_algebraic(args.tau), args.i, args.t)
    _emit(cert.to_json(), args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    _emit(certify(parse_graph(args.graph), parse_algebraic(args.beta)).to_json(), args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    cert = _read_rcert(args.cert)
    _emit(n_from_r(cert, cert.d if args.d is None else args.d).to_json(), args.out)
    return EXIT_OK


def cmd_realize(args) -> int:
    cert = _read_rcert(args.cert)
    ls = realize_lines(cert, args.tolerance)
    report = verify_lines(ls)
    text = json.dumps(ls.to_json()) + "\n" if args.format == "json" else ls.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"verify-lines {report}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_verify(args) -> int:
    data = _read_json(args.cert)
    if "vectors" in data:
        report = verify_lines(LineSystem.from_json(data))
        print(report)
        return EXIT_OK if report.passed else EXIT_VERIFY
    verify(load_certificate(data))
    print(f"pass: {data.get('kind')} certificate re-verified")
    return EXIT_OK


def cmd_search(args) -> int:
    beta = parse_algebraic(args.beta)
    lo = args.n if args.n is not None else args.n_lo
    hi = args.n if args.n is not None else args.n_hi
    if lo is None or hi is None:
        raise InvalidParameters("give --n or both --n-lo and --n-hi")
    entries = r_table(beta, lo, hi, workers=args.workers, out_path=args.out, resume=args.resume)
    if args.table:
        print(render_table(entries))
    else:
        for e in entries:
            w = "-" if e.witness is None else graph6_encode(e.witness)
            print(f"R_{args.beta}({e.n}) = {e.value_text()}  witness {w}  ({e.classes_scanned} classes)")
    return EXIT_OK


def cmd_parity_audit(args) -> int:
    report = parity_audit(args.max_n)
    print(report.render())
    for g6, why in report.failing_graphs:
        print(f"FAIL {g6}: {why}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="equiangular", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a certificate")
    csub = c.add_subparsers(dest="kind", required=True)
    s = csub.add_parser("shearer", help="caterpillar with lambda - eps < rho <= lambda")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--eps", required=True, type=Fraction)
    s.add_argument("--max-steps", type=int, default=200_000)
    u = csub.add_parser("union", help="t copies of a connected graph at beta = 2 rho + 1")
    u.add_argument("--graph", required=True)
    u.add_argument("--t", type=int, required=True)
    g = csub.add_parser("lgc", help="complement of the line graph of a cubic graph")
    g.add_argument("--graph", required=True)
    t = csub.add_parser("theorem1", help="lines with cosine near tau and eta > 0")
    t.add_argument("--tau", required=True)
    t.add_argument("--i", type=int, required=True)
    t.add_argument("--t", type=int, required=True)
    for q in (s, u, g, t):
        q.add_argument("--out", help="also write the certificate here")
    c.set_defaults(func=cmd_construct)

    q = sub.add_parser("certify", help="R-bound certificate for a graph and beta")
    q.add_argument("--graph", required=True)
    q.add_argument("--beta", required=True)
    q.add_argument("--out")
    q.set_defaults(func=cmd_certify)

    q = sub.add_parser("convert", help="turn an R-bound certificate into an N-bound certificate")
    q.add_argument("--cert", required=True)
    q.add_argument("--d", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_convert)

    q = sub.add_parser("realize", help="unit vectors for a certificate")
    q.add_argument("--cert", required=True)
    q.add_argument("--out")
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.add_argument("--tolerance", type=float)
    q.set_defaults(func=cmd_realize)

    q = sub.add_parser("verify", help="re-verify a certificate or a JSON line system")
    q.add_argument("cert")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("search", help="exact R_beta(n) by exhaustive search")
    q.add_argument("--beta", required=True)
    q.add_argument("--n", type=int)
    q.add_argument("--n-lo", type=int)
    q.add_argument("--n-hi", type=int)
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--out", help="append results as JSON lines")
    q.add_argument("--resume", action="store_true", help="skip orders already present in --out")
    q.add_argument("--table", action="store_true")
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("parity-audit", help="exhaustive mod-2 and eigenvalue checks")
    q.add_argument("--max-n", type=int, default=7)
    q.set_defaults(func=cmd_parity_audit)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except EquiangularError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
