"""Which standard-deviation divisor best explains the published Z power columns?

Three protocols are compared over all Z columns of the power table:

* ``1/n``: the 1/n statistic against its own simulated critical values;
* ``1/(n-1)``: the 1/(n-1) statistic against its own simulated critical values;
* ``1/(n-1) vs published cv``: the 1/(n-1) statistic against the published
  (1/n) finite-n critical values.

    python scripts/divisor_convention.py --reps 3000
"""
import argparse

import numpy as np

from zbgof.alternatives import STANDARD_NORMAL
from zbgof.competitors import StatisticId
from zbgof.published import TABLE1_A, TABLE2, TABLE2_LEVELS, TABLE3, TABLE3_STATISTICS, table3_alternative
from zbgof.rng import SeedSpec, stream_for
from zbgof.simulation import simulate_statistics


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--reps", type=int, default=3000, help="replications per power cell")
    p.add_argument("--critical-reps", type=int, default=20_000)
    p.add_argument("--seed", type=int, default=20240101)
    p.add_argument("--workers", type=int, default=None)
    args = p.parse_args()

    cols = [TABLE3_STATISTICS.index(f"Z({a:g})") for a in TABLE1_A]
    protocols = {"1/n": [], "1/(n-1)": [], "1/(n-1) vs published cv": []}
    for n in (20, 50, 100):
        z0 = [StatisticId("Z", a) for a in TABLE1_A]
        z1 = [s.with_ddof(1) for s in z0]
        null = simulate_statistics(STANDARD_NORMAL, n, z0 + z1, args.critical_reps,
                                   SeedSpec(args.seed, stream_for(f"null/n={n}")), args.workers)
        k = len(z0)
        c0 = np.quantile(null[:, :k], 0.95, axis=0)
        c1 = np.quantile(null[:, k:], 0.95, axis=0)
        cpub = np.array([TABLE2[n][a][TABLE2_LEVELS.index(0.95)] for a in TABLE1_A])
        for alt, m in TABLE3:
            if m != n:
                continue
            M = simulate_statistics(table3_alternative(alt), n, z0 + z1, args.reps,
                                    SeedSpec(args.seed, stream_for(f"power/{alt}/n={n}")), args.workers)
            pub = np.array([TABLE3[(alt, n)][j] for j in cols], dtype=float)
            protocols["1/n"].append((M[:, :k] > c0).mean(axis=0) * 100 - pub)
            protocols["1/(n-1)"].append((M[:, k:] > c1).mean(axis=0) * 100 - pub)
            protocols["1/(n-1) vs published cv"].append((M[:, k:] > cpub).mean(axis=0) * 100 - pub)

    print(f"{'protocol':28s}{'mean |diff|':>12s}{'max':>8s}{'> 3pp':>8s}{'cells':>7s}")
    for name, parts in protocols.items():
        d = np.abs(np.concatenate(parts))
        print(f"{name:28s}{d.mean():10.2f}pp{d.max():6.1f}pp{int((d > 3).sum()):8d}{d.size:7d}")


if __name__ == "__main__":
    main()
