"""Sweep (ring, roots, n) and compare the closed-form count with brute force and enumeration.

    python scripts/agreement_sweep.py --max-n 3 --out agreement.csv
"""
from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from triquad.construct import DEFAULT_CEILING, enumerate_all, search_space
from triquad.count import brute_force_count, closed_form_count
from triquad.quad import quad_from_roots, roots_of_coeffs
from triquad.ring import FiniteRing


@dataclass
class SweepConfig:
    rings: list[str] = field(
        default_factory=lambda: ["zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:6", "zmod:7", "gaussian:3"]
    )
    max_n: int = 3
    ceiling: int = DEFAULT_CEILING


def sweep(cfg: SweepConfig):
    for desc in cfg.rings:
        ring = FiniteRing.from_descriptor(desc)
        q = ring.cardinality
        pairs = []
        for r in ring.all_elements():
            for s in ring.all_elements():
                pairs.extend(roots_of_coeffs(ring, r, s))
        for a, b in pairs:
            spec = quad_from_roots(ring, a, b)
            for n in range(1, cfg.max_n + 1):
                if q ** (n * (n + 1) // 2) > cfg.ceiling or search_space(n, q) > cfg.ceiling:
                    break
                t0 = time.perf_counter()
                closed = closed_form_count(n, q).total
                brute = brute_force_count(n, spec, ceiling=cfg.ceiling)
                enum = sum(1 for _ in enumerate_all(n, spec, ceiling=cfg.ceiling))
                yield {
                    "ring": desc,
                    "a": str(a),
                    "b": str(b),
                    "n": n,
                    "closed": closed,
                    "brute": brute,
                    "enum": enum,
                    "agree": closed == brute == enum,
                    "seconds": round(time.perf_counter() - t0, 3),
                }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--rings", help="comma-separated descriptors")
    parser.add_argument("--out", help="CSV path (default stdout)")
    args = parser.parse_args()
    cfg = SweepConfig(max_n=args.max_n)
    if args.rings:
        cfg.rings = args.rings.split(",")
    rows = list(sweep(cfg))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        out.close()
    bad = [r for r in rows if not r["agree"]]
    print(f"{len(rows)} cases, {len(bad)} disagreements", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
