"""Betti numbers of hexagon rings, cube chains and prism chains by both methods.

    python scripts/ring_families.py --max-k 8
"""

import argparse
from dataclasses import dataclass

from toric_origami.families import box_chain, hexagon_ring, prism_template
from toric_origami.invariants import invariant_report


@dataclass
class Config:
    max_k: int = 6
    max_n: int = 4


def rows(cfg):
    for k in range(2, cfg.max_k + 1, 2):
        yield hexagon_ring(k)
    for n in range(2, cfg.max_n + 1):
        for k in (1, 2, 3):
            yield box_chain(n, k)
    for k in (2, 4):
        yield prism_template(k, False)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=Config.max_k)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    a = ap.parse_args()
    cfg = Config(a.max_k, a.max_n)
    print(f"{'template':<16} {'n':>2} {'b1':>3}  {'f':<22} {'Betti':<30} agree  h'-residual")
    for t in rows(cfg):
        r = invariant_report(t)
        print(f"{t.label:<16} {t.n:>2} {r.b1:>3}  {str(r.f):<22} {str(r.betti_closed):<30} "
              f"{str(r.methods_agree):<6} {r.h_prime_residual}")


if __name__ == "__main__":
    main()
