#!/usr/bin/env python3
"""Run all inequality checks over random band-limited corpora and summarise.

Prints, per (n, s), the number of reports, failures and the largest
lhs/rhs ratio seen for each inequality.
"""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from supnorm.constants import SobolevIndex
from supnorm.extremizer import random_band_limited
from supnorm.spectral import GridSpec, default_points, norms
from supnorm.verifier import check_all, check_young


@dataclass
class CorpusConfig:
    dims: tuple[int, ...] = (1, 2)
    orders: tuple[float, ...] = (1.0, 1.5, 2.0, 4.0)
    seeds: int = 100
    L: float = 60.0


def summarise(cfg: CorpusConfig):
    for n in cfg.dims:
        g = GridSpec(n, default_points(n), cfg.L)
        for s in cfg.orders:
            if 2 * s <= n:
                continue
            idx = SobolevIndex(n, s)
            worst = defaultdict(float)
            failures = 0
            for seed in range(cfg.seeds):
                u = random_band_limited(g, seed)
                b = norms(u, s)
                for rep in check_all(u, idx) + [check_young(b.l2, b.hs_semi, idx)]:
                    worst[rep.inequality_id] = max(worst[rep.inequality_id], rep.ratio)
                    failures += not rep.passed
            yield n, s, failures, dict(worst)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dims", type=int, nargs="+", default=[1, 2])
    p.add_argument("--orders", type=float, nargs="+", default=[1.0, 1.5, 2.0, 4.0])
    p.add_argument("--seeds", type=int, default=100)
    args = p.parse_args(argv)
    cfg = CorpusConfig(tuple(args.dims), tuple(args.orders), args.seeds)
    print(f"{'n':>2} {'s':>5} {'fail':>5}  max ratio (l1_bound / embedding / interpolation / young)")
    for n, s, fails, worst in summarise(cfg):
        cols = " / ".join(f"{worst[k]:.4f}" for k in ("l1_bound", "embedding", "interpolation", "young"))
        print(f"{n:>2} {s:>5.2f} {fails:>5}  {cols}")


if __name__ == "__main__":
    main()
