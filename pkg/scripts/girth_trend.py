#!/usr/bin/env python3
"""Report the balanced-cobiclique ratio a(G)/n for girth-constrained samples.

Statistical sanity check only: draws random bipartite graphs, destroys short
cycles, and prints the measured ratio per seed plus summary statistics.
No threshold is asserted; the interesting behaviour is asymptotic and this
just exposes the finite-n trend.
"""

import argparse
import statistics

from hramsey.randbip import RandomParams, sample_girth_construction


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=32, help="final size of each part")
    parser.add_argument("--k", type=int, default=4, help="destroy cycles up to this length")
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0, help="first seed; consecutive after")
    args = parser.parse_args()

    print(f"{'seed':>4} {'a(G)':>5} {'a(G)/n':>7} {'deletions':>9}  certified")
    ratios = []
    for offset in range(args.samples):
        params = RandomParams(n=args.n, k=args.k, seed=args.seed + offset)
        _, report = sample_girth_construction(params)
        ratio = report.cobiclique / args.n
        ratios.append(ratio)
        dels = report.deletions_a + report.deletions_b
        mark = "yes" if report.girth_certified else "NO"
        print(f"{params.seed:>4} {report.cobiclique:>5} {ratio:>7.3f} {dels:>9}  {mark}")

    print(
        f"\nn={args.n} k={args.k} samples={args.samples}: "
        f"a(G)/n mean {statistics.mean(ratios):.3f}, "
        f"min {min(ratios):.3f}, max {max(ratios):.3f}"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
