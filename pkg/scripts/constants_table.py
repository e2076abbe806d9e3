#!/usr/bin/env python3
"""Print K(n, s), C_emb(n, s) and Y(n, s) over a regular grid of s values."""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from supnorm.constants import SobolevIndex, embedding_constant, gn_constant, young_factor


@dataclass
class TableConfig:
    dims: tuple[int, ...] = (1, 2, 3)
    s_max: float = 10.0
    per_dim: int = 12
    offset: float = 0.05


def rows(cfg: TableConfig):
    for n in cfg.dims:
        for s in np.linspace(n / 2 + cfg.offset, cfg.s_max, cfg.per_dim):
            idx = SobolevIndex(n, float(s))
            yield n, float(s), gn_constant(idx), embedding_constant(idx), young_factor(idx)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3])
    p.add_argument("--s-max", type=float, default=10.0)
    p.add_argument("--per-dim", type=int, default=12)
    args = p.parse_args(argv)
    cfg = TableConfig(tuple(args.dims), args.s_max, args.per_dim)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "s", "K_gn", "C_embedding", "young_factor"])
    for n, s, k, c, y in rows(cfg):
        w.writerow([n, f"{s:.4f}", f"{k:.12g}", f"{c:.12g}", f"{y:.12g}"])


if __name__ == "__main__":
    main()
