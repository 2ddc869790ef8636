#!/usr/bin/env python3
"""Cross-check every closed-form Ramsey formula against the exhaustive oracle.

Runs each formula over the grid it is warranted on, prints one row per cell,
and exits 2 if any cell disagrees (mirroring the CLI convention).
"""

import argparse
import sys
import time

from hramsey.formulas import crosscheck_cell, formula_ids

# Grid per formula: (a values, b values, enumeration cap).
GRIDS = {
    "thm_2k2_c4": (range(3, 6), range(3, 6), 10),
    "thm_2k2_diamond": (range(3, 5), range(3, 5), 10),
    "thm_claw_coclaw": (range(3, 5), range(3, 5), 10),
    "thm_cdpawclaw": (range(3, 6), range(3, 7), 11),
    "thm_cop3free": (range(3, 5), range(3, 5), 10),
    "thm_diamond": (range(3, 5), range(3, 5), 10),
    "thm_p2p3_bip": (range(2, 3), range(2, 4), 6),
    "thm_p3free": (range(3, 5), range(3, 5), 10),
    "thm_p4c4coclaw": (range(3, 6), range(3, 5), 10),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--only", metavar="ID", help="restrict to one formula id", default=None
    )
    args = parser.parse_args()

    missing = set(formula_ids()) - set(GRIDS)
    if missing:
        print(f"no grid registered for: {sorted(missing)}", file=sys.stderr)
        return 1

    ids = [args.only] if args.only else sorted(GRIDS)
    if args.only and args.only not in GRIDS:
        print(f"unknown formula id {args.only!r}", file=sys.stderr)
        return 1

    header = f"{'formula':<18} {'a':>2} {'b':>2} {'predicted':>9} {'enumerated':>10}  status"
    print(header)
    print("-" * len(header))
    cells = 0
    bad = 0
    t0 = time.time()
    for fid in ids:
        arange, brange, cap = GRIDS[fid]
        for a in arange:
            for b in brange:
                cell = crosscheck_cell(fid, a, b, cap)
                cells += 1
                if cell["status"] != "agree":
                    bad += 1
                enum = cell["enumerated"]
                print(
                    f"{fid:<18} {a:>2} {b:>2} {cell['predicted']:>9} "
                    f"{enum if enum is not None else '?':>10}  {cell['status']}"
                )
    print("-" * len(header))
    print(f"{cells} cells, {cells - bad} agree, {bad} disagree ({time.time() - t0:.1f}s)")
    return 2 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
