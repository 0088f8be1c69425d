"""Print how the solution count grows with n for a few ring sizes, split by diagonal composition.

    python scripts/count_growth.py --q 2,3,4,5 --max-n 12
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from triquad.count import closed_form_count


@dataclass
class GrowthConfig:
    q_values: tuple[int, ...] = (2, 3, 4, 5)
    max_n: int = 12


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", default="2,3,4,5")
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()
    cfg = GrowthConfig(tuple(int(x) for x in args.q.split(",")), args.max_n)

    for q in cfg.q_values:
        print(f"q = {q}")
        for n in range(1, cfg.max_n + 1):
            rep = closed_form_count(n, q)
            dominant = max(rep.per_split, key=lambda t: t.value)
            share = dominant.value / rep.total
            print(f"  n={n:3d}  total={rep.total:<40d} digits={len(str(rep.total)):4d}  "
                  f"largest split n1={dominant.n1} ({share:.1%})")


if __name__ == "__main__":
    main()
