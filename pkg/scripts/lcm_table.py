#!/usr/bin/env python3
"""Print the table of left lcms of atoms in [1, lambda^k]."""
import argparse
from dataclasses import dataclass

from atilde.geodesic import reduced_expression
from atilde.interval import IntervalCtx, join_left, join_right
from atilde.monomial import S, T, format_word, generator_matrix


@dataclass
class Config:
    n: int = 4
    k: int = 1
    t_bound: int = 2


def main(cfg: Config):
    ctx = IntervalCtx(cfg.n, cfg.k)
    atoms = [T(i) for i in range(-cfg.t_bound, cfg.t_bound + 1)] + [S(j) for j in range(3, cfg.n + 1)]
    names = [format_word(((a, 1),)) for a in atoms]
    width = max(len(nm) for nm in names)
    print(f"lcm of atoms, n={cfg.n} k={cfg.k}")
    for x, nx in zip(atoms, names):
        for y, ny in zip(atoms, names):
            if x == y:
                continue
            a, b = generator_matrix(x, cfg.n), generator_matrix(y, cfg.n)
            j = join_left(a, b, ctx)
            flag = "" if j == join_right(a, b, ctx) else "   (left != right!)"
            print(f"{nx:>{width}} v {ny:<{width}} = {format_word(reduced_expression(j))}{flag}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--t-bound", type=int, default=Config.t_bound)
    a = p.parse_args()
    main(Config(a.n, a.k, a.t_bound))
