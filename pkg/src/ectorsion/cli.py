"""Command-line front-end: construction, halving, orders, isomorphism, census.

Exit codes: 0 success (including "not halvable", which is an answer, not an
error) — 1 usage — 2 invalid input (bad parameters, literals, off-curve
points, wrong-case requests) — 3 internal verification failure (a produced
witness or half failed its group-law replay; should be unreachable).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, Tuple

from .census import family_sweep, sigma_char2, verify_f3_example, verify_f4_example
from .curve import Char2Curve, CubicCurve, curve_from_json, point_from_json
from .errors import Error, InvalidParams, NotHalvable, VerificationError
from .families import (
    FAMILY_NAMES,
    e4_new,
    e4char2_new,
    e6_new,
    e8char2_new,
    e8_new,
    e10_new,
    e12_new,
    iso_e4,
    iso_e8,
    iso_e8char2,
)
from .field import Field, field_from_descriptor
from .halving import halve, halve_char2, halve_quadext, halve_rT, halve_split

_FAMILY_PARAMS = {
    "e4": ("a", "b"),
    "e6": ("t",),
    "e8": ("t",),
    "e10": ("u",),
    "e12": ("T",),
    "e4char2": ("gamma",),
    "e8char2": ("t",),
}

_FAMILY_CTORS = {
    "e4": e4_new,
    "e6": e6_new,
    "e8": e8_new,
    "e10": e10_new,
    "e12": e12_new,
    "e4char2": e4char2_new,
    "e8char2": e8char2_new,
}


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="ectorsion", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--output", choices=("json", "text"), default="json")

    fam = sub.add_parser("family", help="construct a family instance with witnesses")
    fam.add_argument("--field", required=True)
    fam.add_argument("--family", required=True, choices=FAMILY_NAMES)
    for flag in ("a", "b", "t", "u", "T", "gamma"):
        fam.add_argument(f"--{flag}")
    fam.add_argument("--no-verify", action="store_true", help="skip witness re-verification")
    common(fam)

    hal = sub.add_parser("halve", help="compute all rational halves of a point")
    hal.add_argument("--field")
    hal.add_argument("--curve", required=True, help="curve JSON")
    hal.add_argument("--point", required=True, help="point JSON")
    hal.add_argument(
        "--method", choices=("auto", "split", "quadext", "rT", "char2"), default="auto"
    )
    common(hal)

    order = sub.add_parser("order", help="exact order of a point")
    order.add_argument("--field")
    order.add_argument("--curve", required=True)
    order.add_argument("--point", required=True)
    order.add_argument("--cap", type=int)
    common(order)

    iso = sub.add_parser("iso", help="test family parameters for isomorphism")
    iso.add_argument("--field", required=True)
    iso.add_argument("--kind", required=True, choices=("e4", "e8", "e8char2"))
    for flag in ("a", "b", "c", "d", "s", "t"):
        iso.add_argument(f"--{flag}")
    common(iso)

    cen = sub.add_parser("census", help="count iso classes with an order-N point")
    cen.add_argument("--field", required=True)
    cen.add_argument("--order", required=True, type=int, choices=(4, 8))
    cen.add_argument("--table", action="store_true", help="render as an aligned table")
    common(cen)

    ver = sub.add_parser("verify-examples", help="replay the F_3 and F_4 worked examples")
    common(ver)
    return p


def _load_curve_and_field(args) -> Tuple[object, Field]:
    field = field_from_descriptor(args.field) if args.field else None
    curve = curve_from_json(json.loads(args.curve), field)
    return curve, curve.field


def _cmd_family(args) -> dict:
    field = field_from_descriptor(args.field)
    wanted = _FAMILY_PARAMS[args.family]
    supplied = {
        k: v for k, v in vars(args).items() if k in ("a", "b", "t", "u", "T", "gamma") and v is not None
    }
    extra = set(supplied) - set(wanted)
    if extra:
        raise InvalidParams(f"family {args.family} does not take {sorted(extra)}")
    missing = [k for k in wanted if k not in supplied]
    if missing:
        raise InvalidParams(f"family {args.family} needs --{' --'.join(missing)}")
    params = [field.parse_element(supplied[k]) for k in wanted]
    inst = _FAMILY_CTORS[args.family](field, *params, verify=not args.no_verify)
    return inst.to_json_dict()


def _cmd_halve(args) -> dict:
    curve, field = _load_curve_and_field(args)
    P = point_from_json(field, json.loads(args.point))
    method = args.method
    try:
        if method == "auto":
            result = halve(curve, P)
        elif method == "split":
            result = halve_split(curve, P)
        elif method == "quadext":
            result = halve_quadext(curve, P)
        elif method == "rT":
            result = halve_rT(curve, P)
        else:
            result = halve_char2(curve, P)
    except NotHalvable:
        return {"halvable": False, "criterion": "rT", "halves": [], "witness": {}}
    return result.to_json_dict()


def _cmd_order(args) -> dict:
    curve, field = _load_curve_and_field(args)
    P = point_from_json(field, json.loads(args.point))
    n = curve.order_of(P, cap=args.cap)
    out = {"point": json.loads(args.point), "order": n}
    if args.cap is not None:
        out["cap"] = args.cap
    return out


def _require_iso_args(args, names: Sequence[str]) -> List[str]:
    vals = []
    for n in names:
        v = getattr(args, n)
        if v is None:
            raise InvalidParams(f"iso --kind {args.kind} needs --{n}")
        vals.append(v)
    for n in ("a", "b", "c", "d", "s", "t"):
        if n not in names and getattr(args, n) is not None:
            raise InvalidParams(f"iso --kind {args.kind} does not take --{n}")
    return vals


def _cmd_iso(args) -> dict:
    field = field_from_descriptor(args.field)
    if args.kind == "e4":
        a, b, c, d = (field.parse_element(v) for v in _require_iso_args(args, ("a", "b", "c", "d")))
        u = iso_e4(field, a, b, c, d)
        return {
            "kind": "e4",
            "isomorphic": u is not None,
            "u": None if u is None else field.format_element(u),
        }
    s, t = (field.parse_element(v) for v in _require_iso_args(args, ("s", "t")))
    ok = iso_e8(field, s, t) if args.kind == "e8" else iso_e8char2(field, s, t)
    return {"kind": args.kind, "isomorphic": ok}


def _cmd_census(args) -> dict:
    field = field_from_descriptor(args.field)
    report = sigma_char2(field, args.order)
    return report.to_json_dict()


def _census_table(d: dict) -> str:
    headers = ("field", "torsion_order", "family_count", "brute_force_count", "agree")
    row = [str(d[h]) for h in headers]
    widths = [max(len(h), len(v)) for h, v in zip(headers, row)]
    line1 = "  ".join(h.ljust(w) for h, w in zip(headers, widths))
    line2 = "  ".join(v.ljust(w) for v, w in zip(row, widths))
    return line1 + "\n" + line2


def _cmd_verify_examples(args) -> dict:
    f3 = verify_f3_example()
    f4 = verify_f4_example()
    if not (f3["ok"] and f4["ok"]):
        raise VerificationError("a worked example failed to replay")
    return {"f3": f3, "f4": f4, "ok": True}


def _render_text(obj, prefix: str = "") -> List[str]:
    if isinstance(obj, dict):
        lines: List[str] = []
        for k, v in obj.items():
            lines += _render_text(v, f"{prefix}{k}.")
        return lines
    if isinstance(obj, list):
        lines = []
        for i, v in enumerate(obj):
            lines += _render_text(v, f"{prefix}{i}.")
        return lines
    return [f"{prefix.rstrip('.')}: {obj}"]


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "family":
            out = _cmd_family(args)
        elif args.command == "halve":
            out = _cmd_halve(args)
        elif args.command == "order":
            out = _cmd_order(args)
        elif args.command == "iso":
            out = _cmd_iso(args)
        elif args.command == "census":
            out = _cmd_census(args)
        else:
            out = _cmd_verify_examples(args)
    except VerificationError as e:
        sys.stderr.write(f"verification failure: {e}\n")
        return 3
    except (Error, ValueError, ZeroDivisionError, KeyError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    if args.command == "census" and args.table:
        print(_census_table(out))
    elif args.output == "text":
        print("\n".join(_render_text(out)))
    else:
        print(json.dumps(out, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
