"""List every configuration whose generators break a presentation relation.

For each failing row the script prints the relation, whether a kernel-adjusted
lift was tried, and the element-order profile of the full group, which is what
identifies the true structure.
"""

import argparse

from curvekit import suites
from curvekit.autgroup import check_relations, element_order_counts, pgl3_generators, structure_of


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--group", choices=("d_m", "s4", "a4", "a5"), action="append")
    ap.add_argument("--table-range", action="store_true", help="restrict to the published degree ranges")
    ap.add_argument("--profile-limit", type=int, default=800, help="skip profiles of larger groups")
    args = ap.parse_args()
    ranges = suites.TABLE if args.table_range else suites.DESK
    n = 0
    for c in suites.configs(ranges, tuple(args.group or ())):
        bad = [r for r in check_relations(c) if not r.holds]
        if not bad:
            continue
        n += 1
        desc = structure_of(c)
        print(f"{c.kind} d={c.degree} {c.table_flags()}  claimed {desc} (order {desc.order})")
        for r in bad:
            print(f"    fails: {r.name}  [{r.mode}{', lifted' if r.lift else ''}]")
        if desc.order <= args.profile_limit:
            print(f"    orders: {element_order_counts(pgl3_generators(c))}")
    print(f"{n} configuration(s) with failing relations")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
