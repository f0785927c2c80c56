"""Command-line entry point: ``qbargmann {verify,transform,table,kernel}``.

Exit status is 0 on success, 1 when a check fails, and 2 for configuration,
input, or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from .csvio import format_coefficients, read_coefficients
from .errors import ConfigError, MismatchedWeight, QBargmannError
from .fock import FockElement, fock_norm_quadrature, monomial_inner, reproducing_kernel
from .hermite import HermiteExpansion, hermite_h, hermite_norm_sq
from .quadrature import QuadratureRule, SliceQuadrature
from .quaternion import UNIT_I, Quaternion
from .transform import bargmann_coeff, inverse_coeff, kernel_A, kernel_norm_quadrature
from .verify import RunConfig, run_verification, suite_names

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
TABLE_MAX_N = 64
TABLE_MAX_Q = 3.0
TABLE_RTOL = 1e-8


def _quaternion(text: str) -> Quaternion:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a quaternion: {text!r} (use w,x,y,z)") from None
    if not 1 <= len(vals) <= 4:
        raise argparse.ArgumentTypeError(f"expected 1 to 4 components, got {len(vals)}")
    return Quaternion(*vals)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nu", type=float, default=None, help="Gaussian weight parameter (default 1)")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--out", type=Path, help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbargmann", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity and property suites",
                       description="Run every suite and report residuals. Per-suite "
                                   "tolerances can be overridden with --tol.<suite> VALUE.")
    _add_common(v)
    v.add_argument("--trunc", type=int, default=32, help="expansion degree for coefficient checks")
    v.add_argument("--gh-nodes", type=int, default=128)
    v.add_argument("--radial-nodes", type=int, default=96)
    v.add_argument("--angular", type=int, default=256)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--only", help="comma-separated subset of suites")
    v.add_argument("--timing", action="store_true", help="record wall-clock runtime per suite")
    for name in suite_names():
        v.add_argument(f"--tol.{name}", dest=f"tol_{name}", type=float, help=argparse.SUPPRESS)

    t = sub.add_parser("transform", help="map coefficient files between L^2 and Fock")
    _add_common(t)
    t.add_argument("input", type=Path, help="coefficient CSV (n,w,x,y,z)")
    t.add_argument("--direction", choices=("forward", "inverse"), default="forward",
                   help="forward: Hermite -> Fock monomials; inverse: the reverse")

    tb = sub.add_parser("table", help="closed forms next to their quadrature values")
    _add_common(tb)
    tb.add_argument("kind", choices=("monomial-norms", "hermite-norms", "kernel-norms"))
    tb.add_argument("--n-max", type=int, default=10)
    tb.add_argument("--q-max", type=float, default=1.5)
    tb.add_argument("--q-steps", type=int, default=7)

    k = sub.add_parser("kernel", help="evaluate A(q; x) and K(p, q)")
    _add_common(k)
    k.add_argument("--q", type=_quaternion, required=True, help="w,x,y,z")
    k.add_argument("--x", type=float, action="append", default=[], help="real point (repeatable)")
    k.add_argument("--p", type=_quaternion, action="append", default=[], help="w,x,y,z (repeatable)")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _render_rows(head: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(head, r)) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows([[repr(c) if isinstance(c, float) else c for c in r] for r in rows])
        return buf.getvalue()
    cells = [[f"{c:.12g}" if isinstance(c, float) else str(c) for c in r] for r in rows]
    widths = [max(len(x) for x in col) for col in zip(head, *cells)]
    fmt_row = "  ".join(f"{{:>{w}}}" for w in widths).format
    return "\n".join([fmt_row(*head)] + [fmt_row(*r) for r in cells]) + "\n"


def _cmd_verify(args) -> int:
    tol = {n: getattr(args, f"tol_{n}") for n in suite_names()
           if getattr(args, f"tol_{n}") is not None}
    config = RunConfig(nu=1.0 if args.nu is None else args.nu, trunc=args.trunc,
                       gh_nodes=args.gh_nodes, radial_nodes=args.radial_nodes,
                       angular_count=args.angular, seed=args.seed, tolerances=tol)
    only = [s.strip() for s in args.only.split(",") if s.strip()] if args.only else None
    report = run_verification(config, only=only, timing=args.timing)
    _emit(report.render(args.format), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_transform(args) -> int:
    table = read_coefficients(args.input)
    nu = table.nu if args.nu is None else args.nu
    if nu is None:
        nu = 1.0
    if table.nu is not None and table.nu != nu:
        raise MismatchedWeight(f"file has nu = {table.nu}, --nu is {nu}")
    want = "hermite" if args.direction == "forward" else "fock"
    if table.basis is not None and table.basis != want:
        raise ConfigError(f"{args.direction} expects {want} coefficients, file holds {table.basis}")
    if args.direction == "forward":
        out, basis = bargmann_coeff(HermiteExpansion(nu, table.coeffs)).coeffs, "fock"
    else:
        out, basis = inverse_coeff(FockElement.from_coeffs(table.coeffs, nu)).coeffs, "hermite"
    if args.format == "csv" or args.format == "table":
        text = format_coefficients(out, nu, basis)
    else:
        text = json.dumps({"nu": nu, "basis": basis, "coeffs": out.tolist()}, indent=2) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    nu = 1.0 if args.nu is None else args.nu
    if nu <= 0:
        raise ConfigError(f"--nu must be positive, got {nu}")
    rows = []
    if args.kind in ("monomial-norms", "hermite-norms"):
        if not 0 <= args.n_max <= TABLE_MAX_N:
            raise ConfigError(f"--n-max must lie in [0, {TABLE_MAX_N}], got {args.n_max}")
        if args.kind == "monomial-norms":
            head = ["n", "closed", "quadrature", "rel_diff"]
            rule = SliceQuadrature.build(nu)
            for n in range(args.n_max + 1):
                closed = monomial_inner(n, n, nu)
                quad = fock_norm_quadrature(FockElement.monomial(n, nu), UNIT_I, rule)
                rows.append([n, closed, quad, abs(quad / closed - 1)])
        else:
            head = ["n", "closed", "quadrature", "rel_diff"]
            rule = QuadratureRule.gauss_hermite(128, nu)
            for n in range(args.n_max + 1):
                closed = hermite_norm_sq(n, nu)
                h = hermite_h(n, rule.nodes, nu)
                quad = float(rule.integrate(h * h))
                rows.append([n, closed, quad, abs(quad / closed - 1)])
    else:
        if not 0 <= args.q_max <= TABLE_MAX_Q:
            raise ConfigError(f"--q-max must lie in [0, {TABLE_MAX_Q}], got {args.q_max}")
        if args.q_steps < 1:
            raise ConfigError("--q-steps must be positive")
        head = ["|q|", "closed", "A_q_quadrature", "K_q_diagonal", "rel_diff"]
        rule = QuadratureRule.gauss_hermite(128, nu)
        direction = np.array([0.5, 0.5, 0.5, 0.5])
        for r in np.linspace(0.0, args.q_max, args.q_steps):
            q = Quaternion(*(r * direction))
            closed = math.sqrt(nu / math.pi) * math.exp(0.5 * nu * r * r)
            a = kernel_norm_quadrature(q, nu, rule)
            kq = math.sqrt(reproducing_kernel(q, q, nu).w)
            rows.append([float(r), closed, a, kq, max(abs(a / closed - 1), abs(kq / closed - 1))])
    _emit(_render_rows(head, rows, args.format), args.out)
    return EXIT_OK if all(r[-1] <= TABLE_RTOL for r in rows) else EXIT_FAIL


def _cmd_kernel(args) -> int:
    nu = 1.0 if args.nu is None else args.nu
    if nu <= 0:
        raise ConfigError(f"--nu must be positive, got {nu}")
    if not args.x and not args.p:
        raise ConfigError("give at least one --x or --p")
    head = ["quantity", "point", "w", "x", "y", "z"]
    rows = []
    for x in args.x:
        rows.append(["A(q;x)", repr(x), *map(float, kernel_A(args.q, x, nu))])
    for p in args.p:
        rows.append(["K(p,q)", ",".join(repr(float(c)) for c in p),
                     *map(float, reproducing_kernel(p, args.q, nu))])
    _emit(_render_rows(head, rows, args.format), args.out)
    return EXIT_OK


COMMANDS = {"verify": _cmd_verify, "transform": _cmd_transform,
            "table": _cmd_table, "kernel": _cmd_kernel}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (QBargmannError, OSError) as exc:
        print(f"qbargmann {args.command}: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
