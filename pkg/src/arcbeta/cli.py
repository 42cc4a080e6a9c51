"""``arcbeta`` command line.

Exit codes: 0 on success, 1 on a domain error or failed verification,
2 on bad usage.  Results go to stdout as JSON (default) or CSV; floats are
written with 17 significant digits so they reparse to the same double.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import identities
from .arcsine_laws import TIE_RULES, WalkConfig, arcsine_law_check, ks_against
from .distribution import make_dist
from .errors import ConvergenceError, DomainError, UnsupportedCaseError
from .special import beta

SUITES = {
    "thm1": [identities.IdentityName.SHIFTED],
    "thm2-upper": [identities.IdentityName.SPLIT_UPPER],
    "thm2-lower": [identities.IdentityName.SPLIT_LOWER],
    "half-interval": [identities.IdentityName.HALF_INTERVAL],
}
SUITES["all"] = [name for names in SUITES.values() for name in names]


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def to_json(obj) -> str:
    """JSON text with floats at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return to_json(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_csv(rows: list[dict], fieldnames=None) -> str:
    buf = io.StringIO()
    fieldnames = fieldnames or list(rows[0])
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(row.get(k, "")) for k in fieldnames})
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if hasattr(v, "item"):
        v = v.item()
    if isinstance(v, float):
        return fmt_float(v)
    return v


def _emit(args, record=None, rows=None, fieldnames=None):
    out = sys.stdout
    if args.format == "json":
        out.write(to_json(record if record is not None else rows) + "\n")
    else:
        if rows is None:
            rows = [_flatten(record)]
        out.write(to_csv(rows, fieldnames))


def _flatten(record, prefix=""):
    flat = {}
    for k, v in record.items():
        if isinstance(v, dict):
            flat.update(_flatten(v, f"{prefix}{k}."))
        else:
            flat[f"{prefix}{k}"] = v
    return flat


def _dist(args):
    return make_dist((args.r1, args.r2), (args.s, args.t))


def cmd_eval(args):
    kind = args.kind
    inputs = {"s": args.s, "t": args.t}
    if kind == "beta":
        value = beta(args.s, args.t)
    else:
        if args.r1 is None or args.r2 is None:
            raise UsageError(f"eval {kind} needs --r1 and --r2")
        inputs = {"r1": args.r1, "r2": args.r2, **inputs}
        d = _dist(args)
        if kind in ("pdf", "cdf"):
            if args.x is None:
                raise UsageError(f"eval {kind} needs --x")
            inputs["x"] = args.x
            value = d.pdf(args.x) if kind == "pdf" else d.cdf(args.x)
        elif kind == "quantile":
            if args.p is None:
                raise UsageError("eval quantile needs --p")
            inputs["p"] = args.p
            value = d.quantile(args.p)
        else:
            value = d.mean()
    _emit(args, {"kind": kind, "inputs": inputs, "value": float(value)})
    return 0


def cmd_moments(args):
    d = _dist(args)
    table = d.moment_table(args.max_k, method=args.method)
    _emit(args, rows=table.as_records(), fieldnames=["k", "mu_k", "method"])
    return 0


def cmd_verify(args):
    reports = []
    for name in SUITES[args.suite]:
        reports += identities.sweep(name, rel_threshold=args.rel_tol)
    rows = [r.as_row() for r in reports]
    _emit(args, rows=rows)
    failed = sum(not r.passed for r in reports)
    if failed:
        print(f"{failed} of {len(reports)} identity checks failed", file=sys.stderr)
        return 1
    return 0


def cmd_sample(args):
    d = _dist(args)
    values = d.sample(args.n, args.seed)
    ks = ks_against(values, d).as_record()
    inputs = {"r1": args.r1, "r2": args.r2, "s": args.s, "t": args.t, "n": args.n, "seed": args.seed}
    if args.format == "json":
        _emit(args, {"inputs": inputs, "values": values.tolist(), "ks": ks})
    else:
        rows = [{"record": "sample", "index": i, "value": v} for i, v in enumerate(values.tolist())]
        rows += [{"record": f"ks_{k}", "index": "", "value": v} for k, v in ks.items()]
        _emit(args, rows=rows, fieldnames=["record", "index", "value"])
    return 0


def cmd_simulate(args):
    cfg = WalkConfig(args.steps, args.paths, args.seed)
    fractions, report = arcsine_law_check(cfg, tie=args.tie, workers=args.workers)
    ks = report.as_record()
    inputs = {"steps": args.steps, "paths": args.paths, "seed": args.seed, "tie": args.tie}
    if args.format == "json":
        _emit(args, {"inputs": inputs, "fractions": fractions.tolist(), "ks": ks})
    else:
        rows = [
            {"record": "fraction", "index": i, "value": v} for i, v in enumerate(fractions.tolist())
        ]
        rows += [{"record": f"ks_{k}", "index": "", "value": v} for k, v in ks.items()]
        _emit(args, rows=rows, fieldnames=["record", "index", "value"])
    return 0


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _seed(text):
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcbeta",
        description="Beta integrals and the arcsine distribution on a bounded interval.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    def dist_flags(p, r_required=True):
        p.add_argument("--r1", type=float, required=r_required)
        p.add_argument("--r2", type=float, required=r_required)
        p.add_argument("--s", type=float, required=True)
        p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one quantity")
    p.add_argument("kind", choices=("beta", "pdf", "cdf", "quantile", "mean"))
    dist_flags(p, r_required=False)
    p.add_argument("--x", type=float)
    p.add_argument("--p", type=float)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("moments", parents=[common], help="central moments k = 1..K")
    dist_flags(p)
    p.add_argument("--max-k", type=_positive_int, required=True)
    p.add_argument(
        "--method",
        choices=("auto", "closed", "quadrature"),
        default="auto",
        help="auto: closed form when s == t, quadrature otherwise",
    )
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("verify", parents=[common], help="check closed forms against quadrature")
    p.add_argument("--suite", choices=tuple(SUITES), default="all")
    p.add_argument("--rel-tol", type=float, default=identities.DEFAULT_REL_THRESHOLD)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", parents=[common], help="inverse-transform samples + KS summary")
    dist_flags(p)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("simulate", parents=[common], help="random-walk argmax times vs arcsine")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--paths", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--tie", choices=TIE_RULES, default="mid")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rel_tol", 1.0) <= 0:
        parser.error("--rel-tol must be positive")
    try:
        return args.func(args)
    except UsageError as err:
        parser.error(str(err))
    except (DomainError, UnsupportedCaseError, ConvergenceError) as err:
        print(f"arcbeta: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
