"""Exact solution counts: closed form over diagonal splits, and an exhaustive oracle."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from math import comb

from .construct import DEFAULT_CEILING, GuardExceeded
from .matrix import UpperTriangular, is_solution
from .quad import QuadraticSpec


@dataclass(frozen=True)
class SplitTerm:
    n1: int
    n2: int
    multinomial: int
    weight: int

    @property
    def value(self) -> int:
        return self.multinomial * self.weight


@dataclass(frozen=True)
class CountReport:
    n: int
    q: int
    total: int
    per_split: list[SplitTerm] = field(default_factory=list)


def closed_form_count(n: int, q: int) -> CountReport:
    """Sum over n1 + n2 = n of C(n, n1) * q^(n1 n2)."""
    if n < 1 or q < 2:
        raise ValueError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    terms = [SplitTerm(n1, n - n1, comb(n, n1), q ** (n1 * (n - n1))) for n1 in range(n + 1)]
    return CountReport(n, q, sum(t.value for t in terms), terms)


def brute_force_count(
    n: int,
    spec: QuadraticSpec,
    ceiling: int = DEFAULT_CEILING,
    diagonal_filter: bool = True,
) -> int:
    """Count every n x n upper triangular matrix A with A^2 - rA + sI = 0.

    With ``diagonal_filter`` only matrices whose diagonal lies in {a, b} count;
    without it, solutions using any other root of the quadratic are included.
    """
    ring = spec.ring
    cells = n * (n + 1) // 2
    size = ring.cardinality**cells
    if size > ceiling:
        raise GuardExceeded(f"brute-force space {size} exceeds ceiling {ceiling}")
    roots = {spec.a, spec.b}
    elements = ring.all_elements()
    count = 0
    for flat in itertools.product(elements, repeat=cells):
        rows, k = [], 0
        for width in range(n, 0, -1):
            rows.append(flat[k : k + width])
            k += width
        if diagonal_filter and any(row[0] not in roots for row in rows):
            continue
        if is_solution(UpperTriangular(ring, rows), spec):
            count += 1
    return count


def count_table(n_values, q_values) -> list[CountReport]:
    return [closed_form_count(n, q) for n in n_values for q in q_values]


def table_csv(reports: list[CountReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "q", "total"])
    for rep in reports:
        writer.writerow([rep.n, rep.q, rep.total])
    return buf.getvalue()
