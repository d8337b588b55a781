"""Run every verification suite over the desk ranges and print a timing summary."""

import argparse
import time

from curvekit import suites


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scope", choices=list(suites.SCOPES), action="append")
    ap.add_argument("--group", choices=("d_m", "s4", "a4", "a5"), action="append")
    ap.add_argument("--quiet", action="store_true", help="print failures only")
    args = ap.parse_args()
    kinds = tuple(args.group or ())
    summary = []
    for scope in args.scope or suites.SCOPES:
        t0 = time.perf_counter()
        checks = suites.SCOPES[scope](kinds)
        for c in checks:
            if not (args.quiet and c.ok):
                print(c.line(), flush=True)
        failed = sum(not c.ok for c in checks)
        summary.append((scope, len(checks), failed, time.perf_counter() - t0))
    print()
    for scope, n, failed, secs in summary:
        print(f"{scope:12s} {n:4d} checks  {failed:3d} failed  {secs:7.1f}s")
    return 1 if any(f for _, _, f, _ in summary) else 0


if __name__ == "__main__":
    raise SystemExit(main())
