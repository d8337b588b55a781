"""Command-line entry point: ``curvekit {enumerate,curve,verify,tables}``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import suites, tables
from .autgroup import g0_of, pgl3_generators, structure_of
from .classify import ALL_DIHEDRAL, Configuration, enumerate_configs, enumerate_range, generic_params, instantiate
from .errors import CurvekitError, ExclusionViolated
from .exactfield import elem_to_json, format_elem, parse_scalar
from .invariants import GroupKind

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXCLUDED = 0, 1, 2, 3
GROUPS = ("d_m", "a4", "s4", "a5")


class UsageError(Exception):
    pass


def _kind(group: str, m: Optional[int] = None):
    g = group.lower()
    if g not in GROUPS:
        raise UsageError(f"unknown group {group!r}; choose from {', '.join(GROUPS)}, all")
    if g == "d_m":
        return GroupKind.dihedral(m) if m else ALL_DIHEDRAL
    if m is not None:
        raise UsageError("--m applies only to d_m")
    return g


def _configs(group: str, d_min: int, d_max: int, m: Optional[int] = None) -> list[Configuration]:
    groups = GROUPS if group == "all" else (group,)
    out = []
    for g in groups:
        out += enumerate_range(_kind(g, m), d_min, d_max)
    return sorted(out, key=Configuration.sort_key) if group != "all" else out


def _parse_params(items: Optional[Sequence[str]], n_slots: int) -> Optional[list]:
    if not items:
        return None
    values: dict[int, object] = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not of the form name=value")
        name, text = item.split("=", 1)
        m = re.fullmatch(r"a_?(\d*)", name.strip())
        if not m:
            raise UsageError(f"unknown parameter name {name!r}; use a, a1, a2, ...")
        idx = int(m.group(1) or 1) - 1
        if idx < 0 or idx >= max(n_slots, 1):
            raise UsageError(f"parameter {name!r} out of range; this configuration has {n_slots} slot(s)")
        try:
            values[idx] = parse_scalar(text)
        except (ValueError, CurvekitError) as exc:
            raise UsageError(f"cannot parse value {text!r}: {exc}") from None
    if sorted(values) != list(range(n_slots)):
        raise UsageError(f"expected values for a1..a{n_slots}")
    return [values[i] for i in range(n_slots)]


def _pretty_minus(s: str) -> str:
    return s.replace(" - ", " − ")


def _record(c: Configuration, params=None, with_generators=False) -> dict:
    rec = c.to_json()
    if params is not None:
        rec["params"] = [elem_to_json(p) for p in params]
        rec["equation_pretty"] = c.equation_pretty(params)
    desc = structure_of(c)
    rec["group"] = desc.to_json()
    rec["group_pretty"] = str(desc)
    rec["G0_pretty"] = str(g0_of(c))
    if with_generators:
        rec["generators"] = [g.to_json() | {"note": g.note} for g in pgl3_generators(c)]
    return rec


def _pretty_config(c: Configuration, params=None, with_generators=False) -> str:
    desc = structure_of(c)
    lines = [
        f"{c.kind}  d={c.degree}  flags {c.table_flags()}  {c.equation_symbol()}",
        "  " + _pretty_minus(c.equation_pretty(params)),
        f"  Aut: {desc}  (order {desc.order});  G_0: {g0_of(c)}",
    ]
    if c.exclusions:
        lines.append("  exclusions: " + "; ".join(f"{x.describe()} [{x.reason}]" for x in c.exclusions))
    if with_generators:
        for g in pgl3_generators(c):
            lines.append("  " + g.pretty() + (f"   # {g.note}" if g.note else ""))
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------------


def cmd_enumerate(args) -> int:
    d_min, d_max = _degree_range(args)
    group = args.group or args.group_pos or "all"
    cs = _configs(group, d_min, d_max, args.m)
    if args.format == "json":
        json.dump([_record(c, with_generators=args.with_generators) for c in cs], sys.stdout, indent=1)
        print()
    elif args.format == "csv":
        tables.write_csv([tables.row_of(c) for c in cs], sys.stdout)
    else:
        for c in cs:
            print(_pretty_config(c, with_generators=args.with_generators))
    return EXIT_OK


def _degree_range(args) -> tuple[int, int]:
    lo = args.d_min if args.d_min is not None else args.d_min_pos
    hi = args.d_max if args.d_max is not None else args.d_max_pos
    if args.degree is not None:
        lo = hi = args.degree
    if lo is None:
        raise UsageError("give a degree (--degree) or a range (--d-min/--d-max)")
    hi = lo if hi is None else hi
    if not 4 <= lo <= hi:
        raise UsageError("need 4 <= d_min <= d_max")
    return lo, hi


def cmd_curve(args) -> int:
    d = args.degree if args.degree is not None else args.d_pos
    group = args.group or args.group_pos
    if group is None or d is None:
        raise UsageError("curve needs a group and a degree")
    if group == "all":
        raise UsageError("curve needs a single group")
    cs = enumerate_configs(_kind(group, args.m), d)
    if not cs:
        raise UsageError(f"no {group} configuration in degree {d}")
    if args.config is not None:
        if not 0 <= args.config < len(cs):
            raise UsageError(f"--config must be in 0..{len(cs) - 1}")
        c = cs[args.config]
    elif len(cs) == 1:
        c = cs[0]
    else:
        listing = "\n".join(f"  {i}: {x.table_flags()} {x.equation_symbol()}" for i, x in enumerate(cs))
        raise UsageError(f"{len(cs)} configurations match; pick one with --config N:\n{listing}")
    params = _parse_params(args.params, c.n_slots)
    if params is None and c.n_slots:
        params = generic_params(c, start=args.seed_params)
    instantiate(c, params)  # raises ExclusionViolated
    if args.format == "json":
        json.dump(_record(c, params, args.with_generators), sys.stdout, indent=1)
        print()
    elif args.format == "csv":
        tables.write_csv([tables.row_of(c)], sys.stdout)
    else:
        if params:
            print("params: " + ", ".join(f"a{i + 1}={format_elem(p)}" for i, p in enumerate(params)))
        print(_pretty_config(c, params, args.with_generators))
    return EXIT_OK


def cmd_verify(args) -> int:
    scopes = list(suites.SCOPES) if args.scope == "all" else [args.scope]
    kinds = (args.group,) if args.group and args.group != "all" else ()
    ok = True
    for scope in scopes:
        for check in suites.SCOPES[scope](kinds):
            ok &= check.ok
            if args.format == "json":
                print(json.dumps({"scope": scope, "name": check.name, "ok": check.ok,
                                  "seconds": round(check.seconds, 3), "detail": check.detail}))
            else:
                print(check.line(), flush=True)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tables(args) -> int:
    names = list(tables.TABLES) if (args.group or "all") == "all" else [tables.table_name(args.group)]
    rows = [r for n in names for r in tables.emit_rows(n)]
    if args.format == "json":
        json.dump([tables.row_to_json(r) for r in rows], sys.stdout, indent=1, ensure_ascii=False)
        print()
    elif args.format == "csv":
        tables.write_csv(rows, sys.stdout)
    else:
        for r in rows:
            print(f"{r.d:>3}  {r.flags:<14} {r.equation:<44} {r.group:<26} {r.remarks}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvekit", description="Smooth plane curves Z^d + L(X,Y) = 0 with prescribed symmetry.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="pretty"):
        sp.add_argument("--group", choices=GROUPS + ("all",))
        sp.add_argument("--format", choices=("json", "csv", "pretty"), default=fmt_default)

    e = sub.add_parser("enumerate", help="list configurations in a degree range")
    e.add_argument("group_pos", nargs="?", choices=GROUPS + ("all",), metavar="GROUP")
    e.add_argument("d_min_pos", nargs="?", type=int, metavar="D_MIN")
    e.add_argument("d_max_pos", nargs="?", type=int, metavar="D_MAX")
    common(e)
    e.add_argument("--degree", type=int)
    e.add_argument("--d-min", type=int)
    e.add_argument("--d-max", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--with-generators", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("curve", help="build one curve")
    c.add_argument("group_pos", nargs="?", choices=GROUPS, metavar="GROUP")
    c.add_argument("d_pos", nargs="?", type=int, metavar="D")
    common(c)
    c.add_argument("--degree", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--params", nargs="+", metavar="NAME=VALUE")
    c.add_argument("--config", type=int)
    c.add_argument("--seed-params", type=int, default=3, metavar="START",
                   help="first odd integer tried by the generic parameter picker")
    c.add_argument("--with-generators", action="store_true")
    c.set_defaults(func=cmd_curve)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("scope", nargs="?", default="all", choices=tuple(suites.SCOPES) + ("all",))
    common(v)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="emit the classification tables")
    common(t, "csv")
    t.set_defaults(func=cmd_tables)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"curvekit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ExclusionViolated as exc:
        print(f"curvekit: excluded parameter: {exc}", file=sys.stderr)
        return EXIT_EXCLUDED
    except KeyError as exc:
        print(f"curvekit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
