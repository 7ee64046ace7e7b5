#!/usr/bin/env python3
"""Compare the closed-form length with word-metric balls over finite generator sets."""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from atilde.geodesic import bfs_length_oracle, length, letter_bound, reduced_expression


@dataclass
class Config:
    n_values: tuple = (2, 3, 4)
    index_bound: int = 3
    radius: int = 6


def main(cfg: Config):
    for n in cfg.n_values:
        t0 = time.perf_counter()
        ball = bfs_length_oracle(n, cfg.index_bound, cfg.radius)
        stats = Counter()
        for w, d in ball.items():
            re_ = reduced_expression(w)
            ell = length(w)
            if ell > d:
                stats["length exceeds distance"] += 1
            if letter_bound(re_) <= cfg.index_bound:
                stats["in range"] += 1
                stats["exact" if ell == d == len(re_) else "mismatch"] += 1
            elif ell < d:
                stats["shortcut outside range"] += 1
        dt = time.perf_counter() - t0
        print(f"n={n} ball={len(ball)} " + " ".join(f"{k}={v}" for k, v in sorted(stats.items()))
              + f" ({dt:.1f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, nargs="+", default=list(Config.n_values))
    p.add_argument("--index-bound", type=int, default=Config.index_bound)
    p.add_argument("--radius", type=int, default=Config.radius)
    a = p.parse_args()
    main(Config(tuple(a.n), a.index_bound, a.radius))
