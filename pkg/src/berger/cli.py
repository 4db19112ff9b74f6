"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
Every command prints a JSON object with ``inputs``, ``results`` and
``errors`` keys, or CSV with a fixed header when ``--format csv`` is given.
"""
import argparse
import csv
import io
import math
import sys

import numpy as np

from . import _json
from .ambient import SpaceKind
from .connection import (
    FRAME_NAMES,
    Plane,
    boundary_lambda_squared,
    closed_form_connection,
    closed_form_curvature,
    curvature_numerator,
    koszul_for,
    sectional_curvature,
    sign_region_check,
)
from .errors import BergerError, UnsupportedSignature
from .metric import LORENTZIAN, RIEMANNIAN, BergerParams, ModelSpec, Signature
from .torus import TorusPoint, closed_form_h_norm, cmc_solve, mean_curvature
from .verify import TABULATED_CASES, FdConfig, MAX_STEP, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3

CSV_HEADERS = {
    "connection": ["i", "j", "k", "koszul", "closed_form"],
    "curvature": ["plane", "numerator", "sectional", "closed_form", "region", "boundary_lambda_squared"],
    "mean-curvature": [
        "E", "F", "G", "b_x", "b_y", "b_z", "b_n",
        "trace_x", "trace_y", "trace_z", "h_x", "h_y", "h_z", "h_norm", "h_norm_closed_form", "minimal",
    ],
    "cmc-solve": ["index", "theta", "residual"],
    "verify": ["name", "cases", "max_abs_deviation", "tolerance", "passed", "expected_fail"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _finite(text):
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return x


def _signature(text):
    try:
        return Signature.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _space(text):
    try:
        return SpaceKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _step(text):
    x = _finite(text)
    if not 0.0 < x <= MAX_STEP:
        raise argparse.ArgumentTypeError(f"step must be in (0, {MAX_STEP}], got {text}")
    return x


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _seed(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {n}")
    return n


def _model_args(p, sig_default=RIEMANNIAN, space_default=SpaceKind.S3):
    p.add_argument("--space", type=_space, default=space_default, help="s3 or sigma3")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sig", type=_signature, default=sig_default, help="frame signature, e.g. +,+,+")
    g.add_argument("--riemannian", dest="sig", action="store_const", const=RIEMANNIAN)
    g.add_argument("--lorentzian", dest="sig", action="store_const", const=LORENTZIAN)
    p.add_argument("--lambda", dest="lam", type=_finite, default=1.0)
    p.add_argument("--mu", type=_finite, default=1.0)
    p.add_argument("--nu", type=_finite, default=1.0)


def _common(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="berger", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("connection", help="Levi-Civita connection table on the frame")
    _model_args(p)
    p.add_argument("--method", choices=("koszul", "closed-form", "both"), default="koszul")
    _common(p)

    p = sub.add_parser("curvature", help="sectional curvatures and sign regions")
    _model_args(p)
    _common(p)

    p = sub.add_parser("mean-curvature", help="fundamental forms and mean curvature of a torus")
    _model_args(p)
    p.add_argument("--theta", type=_finite, required=True)
    p.add_argument("--alpha", type=_finite, default=0.0)
    p.add_argument("--beta", type=_finite, default=0.0)
    _common(p)

    p = sub.add_parser("cmc-solve", help="tori with constant |H| = target (needs mu = nu)")
    _model_args(p)
    p.add_argument("--target", type=_finite, required=True)
    p.add_argument("--method", choices=("closed-form", "bisection"), default="closed-form")
    _common(p)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--space", type=_space, default=None, help="restrict to one space")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--sig", type=_signature, default=None, help="restrict to one signature")
    g.add_argument("--riemannian", dest="sig", action="store_const", const=RIEMANNIAN)
    g.add_argument("--lorentzian", dest="sig", action="store_const", const=LORENTZIAN)
    p.add_argument("--samples", type=_positive_int, default=1000)
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--step", type=_step, default=1e-5)
    p.add_argument("--curvature-step", type=_finite, default=1e-3)
    p.add_argument("--workers", type=_positive_int, default=1)
    _common(p)
    return parser


def _spec(args) -> ModelSpec:
    return ModelSpec(args.space, BergerParams(args.lam, args.mu, args.nu), args.sig)


def _model_inputs(args):
    return {
        "space": args.space.value,
        "signature": str(args.sig),
        "params": {"lambda": args.lam, "mu": args.mu, "nu": args.nu},
    }


def _nested(table):
    return np.asarray(table).tolist()


def cmd_connection(args):
    spec = _spec(args)
    inputs = dict(_model_inputs(args), method=args.method)
    results, rows = {}, []
    kos = koszul_for(spec) if args.method in ("koszul", "both") else None
    closed = closed_form_connection(spec) if args.method in ("closed-form", "both") else None
    if kos is not None:
        results["koszul"] = _nested(kos)
    if closed is not None:
        results["closed_form"] = _nested(closed)
    if kos is not None and closed is not None:
        results["max_deviation"] = float(np.max(np.abs(kos - closed)))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                rows.append([
                    FRAME_NAMES[i], FRAME_NAMES[j], FRAME_NAMES[k],
                    None if kos is None else kos[i, j, k],
                    None if closed is None else closed[i, j, k],
                ])
    return inputs, results, rows, EXIT_OK


def cmd_curvature(args):
    spec = _spec(args)
    planes, rows = {}, []
    for plane in Plane:
        entry = {
            "numerator": curvature_numerator(spec, plane),
            "sectional": sectional_curvature(spec, plane),
        }
        try:
            entry["closed_form"] = closed_form_curvature(spec, plane)
            entry["region"] = sign_region_check(spec, plane).value
            entry["boundary_lambda_squared"] = boundary_lambda_squared(spec, plane)
        except UnsupportedSignature:
            entry.update(closed_form=None, region=None, boundary_lambda_squared=None)
        planes[plane.name] = entry
        rows.append([plane.name] + [entry[k] for k in CSV_HEADERS["curvature"][1:]])
    return _model_inputs(args), {"planes": planes}, rows, EXIT_OK


def cmd_mean_curvature(args):
    spec = _spec(args)
    tp = TorusPoint(args.theta, args.alpha, args.beta)
    geo = mean_curvature(spec, tp)
    closed = closed_form_h_norm(spec, tp)
    inputs = dict(_model_inputs(args), point={"theta": tp.theta, "alpha": tp.alpha, "beta": tp.beta})
    f = geo.form
    results = {
        "E": f.E,
        "F": f.F,
        "G": f.G,
        "B_alpha": geo.b_alpha._asdict(),
        "traceB": {k: getattr(geo.trace_b, k) for k in "xyz"},
        "H": {k: getattr(geo.h, k) for k in "xyz"},
        "H_norm": geo.h_norm,
        "H_norm_closed_form": closed,
        "minimal": geo.minimal,
    }
    row = [f.E, f.F, f.G, *geo.b_alpha, *geo.trace_b[:3], *geo.h[:3], geo.h_norm, closed, geo.minimal]
    return inputs, results, [row], EXIT_OK


def cmd_cmc_solve(args):
    spec = _spec(args)
    inputs = dict(_model_inputs(args), target=args.target, method=args.method)
    sol = cmc_solve(spec, args.target, method=args.method)
    results = {"thetas": list(sol.thetas), "residuals": list(sol.residuals), "count": len(sol.thetas)}
    rows = [[n, t, r] for n, (t, r) in enumerate(zip(sol.thetas, sol.residuals))]
    return inputs, results, rows, EXIT_OK


def cmd_verify(args):
    try:
        cfg = FdConfig(args.step, args.samples, args.seed, args.curvature_step)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    specs = [
        s for s in TABULATED_CASES
        if (args.space is None or s.space is args.space) and (args.sig is None or s.signature == args.sig)
    ]
    if args.sig is not None and not specs:
        spaces = [args.space] if args.space else list(SpaceKind)
        specs = [ModelSpec(sp, BergerParams(), args.sig) for sp in spaces]
    report = run_suite(specs, cfg, workers=args.workers)
    inputs = {
        "spaces": sorted({s.space.value for s in specs}),
        "signatures": sorted({str(s.signature) for s in specs}),
        "samples": cfg.samples,
        "seed": cfg.seed,
        "step": cfg.step,
        "curvature_step": cfg.curvature_step,
    }
    rows = [[c.name, c.cases, c.max_abs_deviation, c.tolerance, c.passed, c.expected_fail] for c in report.checks]
    code = EXIT_OK if report.ok else EXIT_VERIFY
    return inputs, report.to_dict(), rows, code


COMMANDS = {
    "connection": cmd_connection,
    "curvature": cmd_curvature,
    "mean-curvature": cmd_mean_curvature,
    "cmc-solve": cmd_cmc_solve,
    "verify": cmd_verify,
}


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return _json.format_float(v)
    return str(v)


def render_csv(command, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADERS[command])
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _emit(text, path, stream):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        stream.write(text)


def _glue_signature(argv):
    # "-,+,+" looks like an option to argparse; bind it to --sig explicitly
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--sig":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--sig={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_signature(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(stderr)
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    try:
        inputs, results, rows, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"berger: error: {exc}", file=stderr)
        return EXIT_USAGE
    except BergerError as exc:
        inputs = _model_inputs(args) if hasattr(args, "lam") else None
        payload = {"inputs": inputs, "results": None, "errors": [{"code": exc.code, "message": str(exc)}]}
        if args.format == "json":
            _emit(_json.dumps(payload) + "\n", args.output, stdout)
        print(f"berger: {exc.code}: {exc}", file=stderr)
        return EXIT_DOMAIN

    if args.format == "csv":
        text = render_csv(args.command, rows)
    else:
        errors = []
        if code == EXIT_VERIFY:
            errors = [{"code": "verification_failed", "message": c["name"]}
                      for c in results["checks"] if not c["passed"] and not c["expected_fail"]]
        text = _json.dumps({"inputs": inputs, "results": results, "errors": errors}) + "\n"
    _emit(text, args.output, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
