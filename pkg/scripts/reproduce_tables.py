"""Regenerate the classification tables as CSV and diff them against the golden files."""

import argparse
from pathlib import Path

from curvekit import tables


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("tables_out"), help="output directory")
    ap.add_argument("--group", choices=list(tables.TABLES), action="append")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    bad = 0
    for name in args.group or tables.TABLES:
        rows = tables.emit_rows(name)
        with open(args.out / f"table_{name}.csv", "w", encoding="utf-8") as fh:
            tables.write_csv(rows, fh)
        checks = tables.compare(name, rows)
        counts = {s: sum(c.status == s for c in checks) for s in ("match", "override", "missing", "unexpected")}
        print(f"{name:9s} {len(rows):3d} rows  " + "  ".join(f"{k}={v}" for k, v in counts.items()))
        for c in checks:
            if c.status == "override":
                print(f"    d={c.d} {c.flags}: {c.detail}")
            elif not c.ok:
                bad += 1
                print(f"    {c.status.upper()} d={c.d} {c.flags}: {c.detail}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
