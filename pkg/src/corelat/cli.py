"""Command-line interface.

Subcommands::

    corelat roots TYPE                  root system invariants as JSON
    corelat cores TYPE B                region lattice points with sizes
    corelat verify THEOREM [flags]      run a verification suite
    corelat draw TYPE --b B             rank-2 SVG picture

Exit codes: 0 = pass, 1 = verification failure, 2 = usage error.
Rationals print as "p/q" in lowest terms, never as decimals.
The feasibility cap is --cap or the CORELAT_CAP environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import gcd

from . import cores, draw, models, rootsys, sommers, verify
from .rootsys import CartanType

USAGE_ERROR = 2

VERIFY_THEOREMS = (
    "arm", "main", "max", "transfer", "sizer", "welldef", "ip_content",
    "models", "haiman", "strange", "typea", "fg_poly", "conjecture",
)


class UsageError(Exception):
    pass


def _parse_type(text: str) -> CartanType:
    try:
        return CartanType.parse(text)
    except rootsys.CartanTypeError as exc:
        raise UsageError(str(exc)) from exc


def _cap(args) -> int:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("CORELAT_CAP")
    return int(env) if env else sommers.DEFAULT_CAP


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _matrix_from_args(args):
    if args.type:
        types = [str(_parse_type(t)) for t in args.type]
    else:
        types = [t for t, _ in verify.DEFAULT_MATRIX]
    default_bs = dict(verify.DEFAULT_MATRIX)
    out = []
    for t in types:
        if args.b:
            bs = args.b
        elif t in default_bs:
            bs = default_bs[t]
        else:
            rs = rootsys.build_named(t)
            bs = [b for b in range(2, 40) if gcd(b, rs.coxeter_number) == 1][:2]
        out.append((t, tuple(bs)))
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_roots(args) -> int:
    rs = rootsys.build(_parse_type(args.type))
    _emit(args, rootsys.to_json(rs, indent=2, sort_keys=True))
    return 0


def cmd_cores(args) -> int:
    t = _parse_type(args.type)
    rs = rootsys.build(t)
    if args.b < 1 or gcd(args.b, rs.coxeter_number) != 1:
        raise UsageError(f"b = {args.b} must be a positive integer coprime to h = {rs.coxeter_number}")
    coreset = sommers.enumerate_cores(rs, args.b, cap=_cap(args))
    rows = []
    for q, s in zip(coreset.points, coreset.sizes):
        row = {"coords": list(q), "size": str(s)}
        if t.family == "A":
            ambient = models.type_a_ambient_from_coords(q)
            row["partition"] = list(cores.from_coroot(t.rank + 1, ambient))
        elif t.family == "C":
            row["partition"] = list(models.embed(t, q).core().partition)
        rows.append(row)
    if args.format == "csv":
        lines = ["coords,size,partition"]
        for row in rows:
            part = json.dumps(row.get("partition", "")).replace(",", " ")
            lines.append(f"\"{tuple(row['coords'])}\",{row['size']},{part}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        doc = coreset.to_json_dict()
        doc["rows"] = rows
        _emit(args, json.dumps(doc, indent=2, sort_keys=True))
    return 0


def cmd_draw(args) -> int:
    t = _parse_type(args.type)
    if t.rank != 2:
        raise UsageError(f"draw requires a rank-2 type, got {t}")
    rs = rootsys.build(t)
    if args.b < 1 or gcd(args.b, rs.coxeter_number) != 1:
        raise UsageError(f"b = {args.b} must be a positive integer coprime to h = {rs.coxeter_number}")
    _emit(args, draw.region_svg(rs, args.b))
    return 0


# ---------------------------------------------------------------------------
# verify subcommand: thin wrappers around the suites in corelat.verify
# ---------------------------------------------------------------------------

def _verify_arm(args, cap):
    return verify.check_arm(cap=cap)


def _verify_main(args, cap):
    return verify.check_main(_matrix_from_args(args), cap=cap)


def _verify_max(args, cap):
    return verify.check_max(_matrix_from_args(args), cap=cap)


def _verify_transfer(args, cap):
    return verify.check_transfer(_matrix_from_args(args), cap=cap)


def _verify_sizer(args, cap):
    types = [t for t, _ in _matrix_from_args(args)]
    return verify.check_sizer(count=args.count or 1000, types=types)


def _verify_welldef(args, cap):
    types = [t for t in verify.WELLDEF_TYPES
             if not args.type or t in {str(_parse_type(x)) for x in args.type}]
    return verify.check_welldef(types, max_len=args.length or 8)


def _verify_ip_content(args, cap):
    return verify.check_ip_content()


def _verify_models(args, cap):
    return verify.check_models()


def _verify_haiman(args, cap):
    return verify.check_haiman(_matrix_from_args(args) if args.type else None, cap=cap)


def _verify_strange(args, cap):
    return verify.check_strange()


def _verify_typea(args, cap):
    return verify.check_typea()


def _verify_fg_poly(args, cap):
    return verify.check_fg_poly(cap=cap)


def _verify_conjecture(args, cap):
    if args.type:
        return verify.check_conjecture(_matrix_from_args(args), cap=cap)
    return verify.check_conjecture(cap=cap)


_VERIFIERS = {
    "arm": _verify_arm,
    "main": _verify_main,
    "max": _verify_max,
    "transfer": _verify_transfer,
    "sizer": _verify_sizer,
    "welldef": _verify_welldef,
    "ip_content": _verify_ip_content,
    "models": _verify_models,
    "haiman": _verify_haiman,
    "strange": _verify_strange,
    "typea": _verify_typea,
    "fg_poly": _verify_fg_poly,
    "conjecture": _verify_conjecture,
}


def cmd_verify(args) -> int:
    if args.theorem not in _VERIFIERS:
        raise UsageError(
            f"unknown theorem id {args.theorem!r}; choose from {', '.join(VERIFY_THEOREMS)}")
    failures = _VERIFIERS[args.theorem](args, _cap(args))
    report = {
        "theorem": args.theorem,
        "pass": not failures,
        "counterexamples": failures,
    }
    if args.theorem == "conjecture":
        report["note"] = "evidence only: exhaustive check at these parameters, not a proof"
    _emit(args, json.dumps(report, indent=2, sort_keys=True))
    return 0 if not failures else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="corelat",
                                     description="Exact lattice-point machinery for "
                                                 "affine Weyl groups and core partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="print root system data as JSON")
    p_roots.add_argument("type")
    p_roots.add_argument("--out")
    p_roots.set_defaults(func=cmd_roots)

    p_cores = sub.add_parser("cores", help="list the b-region lattice points")
    p_cores.add_argument("type")
    p_cores.add_argument("b", type=int)
    p_cores.add_argument("--format", choices=("json", "csv"), default="json")
    p_cores.add_argument("--cap", type=int)
    p_cores.add_argument("--out")
    p_cores.set_defaults(func=cmd_cores)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("theorem")
    p_verify.add_argument("--type", action="append")
    p_verify.add_argument("--b", type=lambda s: tuple(int(x) for x in s.split(",")))
    p_verify.add_argument("--cap", type=int)
    p_verify.add_argument("--count", type=int)
    p_verify.add_argument("--length", type=int)
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify)

    p_draw = sub.add_parser("draw", help="SVG picture of a rank-2 b-region")
    p_draw.add_argument("type")
    p_draw.add_argument("--b", type=int, required=True)
    p_draw.add_argument("--out")
    p_draw.set_defaults(func=cmd_draw)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (rootsys.CartanTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
