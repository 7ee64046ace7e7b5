#!/usr/bin/env python3
"""Run every verification suite over a grid of (n, k) and summarise."""
import argparse
from dataclasses import dataclass, field

from atilde.artin_maps import verify_cll, verify_k_iso, verify_phi, verify_shi, verify_transfer
from atilde.garside import verify_monoid_relations
from atilde.interval import IntervalCtx


@dataclass
class Config:
    n_values: list = field(default_factory=lambda: [3, 4, 5])
    k_values: list = field(default_factory=lambda: [1, 2, -1])
    bound: int = 3
    verbose: bool = False


def main(cfg: Config) -> int:
    reports = []
    for n in cfg.n_values:
        reports += [verify_cll(n, cfg.bound), verify_shi(n, cfg.bound), verify_k_iso(n, cfg.bound)]
        for k in cfg.k_values:
            ctx = IntervalCtx(n, k)
            reports += [verify_monoid_relations(ctx, cfg.bound), verify_phi(ctx)]
    bad = 0
    for rep in reports:
        print(f"{'ok  ' if rep.passed else 'FAIL'} {rep.suite}: {len(rep.checks)} checks")
        if cfg.verbose or not rep.passed:
            for c in rep.failures:
                print(f"     {c.name} {c.detail}")
        bad += not rep.passed
    # expected to fail: the k=2 relations do not hold in the k=1 monoid
    control = verify_transfer(3, 2, 1, cfg.bound, lambda g: g)
    print(f"negative control {'failed as expected' if not control.passed else 'UNEXPECTEDLY PASSED'}"
          f" ({len(control.failures)}/{len(control.checks)} relations rejected)")
    return 1 if bad or control.passed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--k", type=int, nargs="+", default=[1, 2, -1])
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("-v", "--verbose", action="store_true")
    a = p.parse_args()
    raise SystemExit(main(Config(a.n, a.k, a.bound, a.verbose)))
