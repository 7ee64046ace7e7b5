#!/usr/bin/env python3
"""Growth of normal forms: number of simple factors against word length."""
import argparse
import random
import statistics
from dataclasses import dataclass

from atilde.garside import from_group_word
from atilde.interval import IntervalCtx
from atilde.monomial import S, T


@dataclass
class Config:
    n: int = 4
    k: int = 1
    lengths: tuple = (4, 8, 16, 32)
    samples: int = 200
    t_bound: int = 4
    seed: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    ctx = IntervalCtx(cfg.n, cfg.k)
    gens = [T(i) for i in range(-cfg.t_bound, cfg.t_bound + 1)] + [S(j) for j in range(3, cfg.n + 1)]
    print(f"n={cfg.n} k={cfg.k}")
    print(" len  mean(inf)  mean(sup)  mean(#factors)")
    for L in cfg.lengths:
        infs, sups, nfac = [], [], []
        for _ in range(cfg.samples):
            w = tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(L))
            g = from_group_word(w, ctx)
            infs.append(g.delta_exp)
            sups.append(g.delta_exp + len(g.factors))
            nfac.append(len(g.factors))
        print(f"{L:4d}  {statistics.mean(infs):9.2f}  {statistics.mean(sups):9.2f}"
              f"  {statistics.mean(nfac):14.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    main(Config(n=a.n, k=a.k, samples=a.samples, seed=a.seed))
