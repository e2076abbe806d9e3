#!/usr/bin/env python3
"""Grid sharpness ratio of the extremizer as the resolution N grows.

The discrete ratio falls short of 1 by the part of the Lorentzian mass
lying outside the frequency band, roughly |xi|^(n-2s) at the Nyquist
frequency. This script tabulates 1 - ratio against N for fixed L.
"""

import argparse
from dataclasses import dataclass

from supnorm.constants import SobolevIndex
from supnorm.spectral import GridSpec
from supnorm.verifier import sharpness_ratio


@dataclass
class ConvergenceConfig:
    n: int = 2
    s: float = 2.0
    L: float = 60.0
    sizes: tuple[int, ...] = (64, 128, 256, 512, 1024)


def run(cfg: ConvergenceConfig):
    idx = SobolevIndex(cfg.n, cfg.s)
    out = []
    for N in cfg.sizes:
        g = GridSpec(cfg.n, N, cfg.L)
        out.append((N, g.nyquist, sharpness_ratio(idx, "grid", N, cfg.L)))
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--L", type=float, default=60.0)
    p.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512, 1024])
    args = p.parse_args(argv)
    cfg = ConvergenceConfig(args.n, args.s, args.L, tuple(args.sizes))
    print(f"{'N':>6} {'nyquist':>10} {'ratio':>14} {'1 - ratio':>11}")
    for N, nyq, r in run(cfg):
        print(f"{N:>6} {nyq:>10.4f} {r:>14.10f} {1.0 - r:>11.3e}")


if __name__ == "__main__":
    main()
