"""Command-line front end.

Subcommands: verify (run the check suite and emit reports), eval (evaluate
a series file at a point), norm (weighted norms of a series file), kernel
(compare the exponential and Gram-normalized kernels), gram (print the
monomial Gram diagonal against its slow reference).

Exit codes: 0 all requested checks pass, 1 at least one check failed,
2 usage or parse errors, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from .checks import REGISTRY
from .fock import (
    FockParams,
    corrected_kernel_eval,
    fock_norm_slice,
    fock_norm_sup,
    gram_table,
    kernel_eval,
)
from .harness import RunConfig, render_csv, render_json, run_suite, write_reports
from .quaternions import I, Quaternion
from .reference import monomial_gram_reference
from .series import SeriesFormatError, read_series

_CONFIG_KEYS = {
    "alpha": ("alpha", float),
    "p": ("p", float),
    "domain": ("domain", str),
    "radius": ("radius", float),
    "degree": ("degree", int),
    "quad-r": ("n_r", int),
    "quad-theta": ("n_theta", int),
    "slices": ("n_slices", int),
    "seed": ("seed", int),
    "n-series": ("n_series", int),
    "max-degree": ("max_degree", int),
    "checks": ("checks", str),
    "out": ("out", str),
    "format": ("fmt", str),
}


class UsageError(Exception):
    pass


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=None, help="Gaussian weight exponent (> 0)")
    parser.add_argument("--p", type=float, default=None, help="integrability exponent (> 1)")
    parser.add_argument("--domain", choices=("disk", "plane"), default=None,
                        help="slice integration domain")
    parser.add_argument("--radius", type=float, default=None,
                        help="truncation radius in plane mode")
    parser.add_argument("--degree", type=int, default=None,
                        help="kernel / Gram truncation degree")
    parser.add_argument("--quad-r", type=int, default=None, help="radial quadrature nodes")
    parser.add_argument("--quad-theta", type=int, default=None, help="angular quadrature nodes")
    parser.add_argument("--slices", type=int, default=None, help="slice-sample size for sup norms")
    parser.add_argument("--seed", type=int, default=None, help="run seed")
    parser.add_argument("--config", default=None, metavar="FILE",
                        help="key=value config file; command-line flags override it")


def _parse_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError("cannot read config file %s: %s" % (path, exc)) from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError("%s:%d: expected key=value, got %r" % (path, lineno, raw.strip()))
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError("%s:%d: unknown config key %r (known: %s)"
                             % (path, lineno, key, ", ".join(sorted(_CONFIG_KEYS))))
        attr, cast = _CONFIG_KEYS[key]
        try:
            values[attr] = cast(val)
        except ValueError:
            raise UsageError("%s:%d: bad value %r for key %r" % (path, lineno, val, key)) from None
    return values


def _build_config(args: argparse.Namespace) -> RunConfig:
    values = {}
    if getattr(args, "config", None):
        values.update(_parse_config_file(args.config))
    flag_map = {
        "alpha": "alpha", "p": "p", "domain": "domain", "radius": "radius",
        "degree": "degree", "quad_r": "n_r", "quad_theta": "n_theta",
        "slices": "n_slices", "seed": "seed", "n_series": "n_series",
        "max_degree": "max_degree", "out": "out", "format": "fmt",
    }
    for flag, attr in flag_map.items():
        val = getattr(args, flag, None)
        if val is not None:
            values[attr] = val
    checks = values.pop("checks", None)
    if getattr(args, "checks", None) is not None:
        checks = args.checks
    if isinstance(checks, str):
        names = tuple(c.strip() for c in checks.split(",") if c.strip())
        values["checks"] = names
    elif checks is not None:
        values["checks"] = tuple(checks)
    try:
        return RunConfig(**values)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _params_from_config(config: RunConfig) -> FockParams:
    try:
        return config.to_params()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_point(text: str, what: str) -> Quaternion:
    try:
        return Quaternion.from_text(text)
    except ValueError as exc:
        raise UsageError("bad %s %r: %s" % (what, text, exc)) from None


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _build_config(args)
    try:
        results = run_suite(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = "%s %-22s lhs=%.6g rhs=%.6g margin=%.6g (%.2fs)" % (
            status, r.check_id, r.lhs, r.rhs, r.margin, r.seconds)
        if r.note:
            line += "  [%s]" % r.note
        print(line)
    if config.out:
        json_path, csv_path = write_reports(results, config.out)
        print("report: %s, %s" % (json_path, csv_path))
    elif args.emit_report or args.format is not None:
        sys.stdout.write(render_json(results) if config.fmt == "json" else render_csv(results))
    failed = [r.check_id for r in results if not r.passed]
    if failed:
        print("%d check(s) failed: %s" % (len(failed), ", ".join(failed)), file=sys.stderr)
        return 1
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    f = read_series(args.series)
    q = _parse_point(args.at, "evaluation point")
    print(f.eval(q).to_text())
    return 0


def _cmd_norm(args: argparse.Namespace) -> int:
    f = read_series(args.series)
    params = _params_from_config(_build_config(args))
    sup = fock_norm_sup(f, params)
    print("sup-norm:   %.17g" % sup.value)
    print("at axis:    %s" % sup.axis.to_text())
    print("slice at i: %.17g" % fock_norm_slice(f, I, params))
    return 0


def _cmd_kernel(args: argparse.Namespace) -> int:
    params = _params_from_config(_build_config(args))
    q = _parse_point(args.q, "kernel point q")
    w = _parse_point(args.w, "kernel point w")
    a = kernel_eval(q, w, params)
    b = corrected_kernel_eval(q, w, params)
    print("kernel:     %s" % a.to_text())
    print("corrected:  %s" % b.to_text())
    print("abs-diff:   %.17g" % abs(a - b))
    return 0


def _cmd_gram(args: argparse.Namespace) -> int:
    config = _build_config(args)
    params = _params_from_config(config)
    table = gram_table(params)
    top = min(params.degree, args.max_degree if args.max_degree is not None else 16)
    print("m   measured              reference             abs-err")
    for m in range(top + 1):
        ref = monomial_gram_reference(m, params.alpha, params.r_max)
        print("%-3d %-21.15g %-21.15g %.3g" % (m, table.diag[m], ref, abs(table.diag[m] - ref)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicefock",
        description="Quaternionic slice-series numerics and verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification checks and emit reports")
    _add_param_flags(p_verify)
    p_verify.add_argument("--n-series", type=int, default=None,
                          help="random series per sampling check")
    p_verify.add_argument("--max-degree", type=int, default=None,
                          help="degree of the random series draws")
    p_verify.add_argument("--checks", default=None,
                          help="comma-separated check ids (default: the standard set)")
    p_verify.add_argument("--list-checks", action="store_true",
                          help="list known check ids and exit")
    p_verify.add_argument("--out", default=None,
                          help="report base path; writes <out>.json and <out>.csv")
    p_verify.add_argument("--format", choices=("json", "csv"), default=None,
                          help="report format to print when --out is not given")
    p_verify.add_argument("--emit-report", action="store_true",
                          help="print the raw report to stdout")
    p_verify.set_defaults(func=_cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate a series file at a point")
    p_eval.add_argument("series", help="series file in the plain text format")
    p_eval.add_argument("--at", required=True, metavar="'x0 x1 x2 x3'",
                        help="evaluation point")
    p_eval.set_defaults(func=_cmd_eval)

    p_norm = sub.add_parser("norm", help="weighted norms of a series file")
    p_norm.add_argument("series", help="series file in the plain text format")
    _add_param_flags(p_norm)
    p_norm.set_defaults(func=_cmd_norm)

    p_kernel = sub.add_parser("kernel", help="kernel values at a pair of points")
    p_kernel.add_argument("--q", required=True, metavar="'x0 x1 x2 x3'")
    p_kernel.add_argument("--w", required=True, metavar="'x0 x1 x2 x3'")
    _add_param_flags(p_kernel)
    p_kernel.set_defaults(func=_cmd_kernel)

    p_gram = sub.add_parser("gram", help="monomial Gram diagonal vs. slow reference")
    _add_param_flags(p_gram)
    p_gram.add_argument("--max-degree", type=int, default=None,
                        help="largest monomial degree to print")
    p_gram.set_defaults(func=_cmd_gram)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "list_checks", False):
        for name in sorted(REGISTRY):
            mark = "" if REGISTRY[name].default else "  (not in default set)"
            print("%-22s %s%s" % (name, REGISTRY[name].paper_ref, mark))
        return 0
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except SeriesFormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
