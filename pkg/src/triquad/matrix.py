"""Packed upper triangular matrices over a finite ring.

Row k (1-based) stores the entries (k, k), (k, k+1), ..., (k, n). Indices in
the public API are 1-based; nothing below the diagonal is representable.
"""
from __future__ import annotations

import json
from typing import Callable, Iterator

from .quad import QuadraticSpec
from .ring import FiniteRing, RingElement, RingError


class MatrixError(ValueError):
    pass


class UpperTriangular:
    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: FiniteRing, rows):
        self.ring = ring
        self.rows = tuple(tuple(row) for row in rows)
        self.n = len(self.rows)
        if self.n < 1:
            raise MatrixError("matrix size must be >= 1")
        for k, row in enumerate(self.rows):
            if len(row) != self.n - k:
                raise MatrixError(f"row {k + 1} has {len(row)} entries, expected {self.n - k}")

    @classmethod
    def from_function(cls, ring: FiniteRing, n: int, f: Callable[[int, int], RingElement]):
        """Build from f(i, j) evaluated on 1 <= i <= j <= n."""
        return cls(ring, [[f(i, j) for j in range(i, n + 1)] for i in range(1, n + 1)])

    @classmethod
    def identity(cls, ring: FiniteRing, n: int) -> UpperTriangular:
        one, zero = ring.one, ring.zero
        return cls.from_function(ring, n, lambda i, j: one if i == j else zero)

    @classmethod
    def zeros(cls, ring: FiniteRing, n: int) -> UpperTriangular:
        zero = ring.zero
        return cls.from_function(ring, n, lambda i, j: zero)

    @classmethod
    def diagonal(cls, ring: FiniteRing, values) -> UpperTriangular:
        values = list(values)
        zero = ring.zero
        return cls.from_function(ring, len(values), lambda i, j: values[i - 1] if i == j else zero)

    def entry(self, i: int, j: int) -> RingElement:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"position ({i},{j}) outside {self.n}x{self.n}")
        if i > j:
            return self.ring.zero
        return self.rows[i - 1][j - i]

    def positions(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                yield i, j

    @property
    def diagonal_entries(self) -> list[RingElement]:
        return [row[0] for row in self.rows]

    def _check(self, other: UpperTriangular) -> None:
        if other.ring != self.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
        if other.n != self.n:
            raise MatrixError(f"size mismatch: {self.n} vs {other.n}")

    def __matmul__(self, other: UpperTriangular) -> UpperTriangular:
        return ut_mul(self, other)

    def __add__(self, other: UpperTriangular) -> UpperTriangular:
        self._check(other)
        return UpperTriangular(
            self.ring, [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: UpperTriangular) -> UpperTriangular:
        self._check(other)
        return UpperTriangular(
            self.ring, [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def scale(self, c: RingElement) -> UpperTriangular:
        """Left scalar multiplication c * A."""
        return UpperTriangular(self.ring, [[c * x for x in row] for row in self.rows])

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def key(self) -> tuple:
        """Hashable canonical form; also the sort key for canonical ordering."""
        return tuple(x.coords for row in self.rows for x in row)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UpperTriangular)
            and self.ring == other.ring
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"UpperTriangular({self.ring}, n={self.n}, [{body}])"

    def to_document(self) -> dict:
        return {
            "ring": self.ring.descriptor,
            "n": self.n,
            "rows": [[x.to_list() for x in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), separators=(",", ":"))


def ut_mul(A: UpperTriangular, B: UpperTriangular) -> UpperTriangular:
    A._check(B)
    n = A.n
    zero = A.ring.zero
    rows = []
    for i in range(n):
        row = []
        for j in range(i, n):
            acc = zero
            for p in range(i, j + 1):
                acc = acc + A.rows[i][p - i] * B.rows[p][j - p]
            row.append(acc)
        rows.append(row)
    return UpperTriangular(A.ring, rows)


def quadratic_residual(A: UpperTriangular, spec: QuadraticSpec) -> UpperTriangular:
    """A^2 - r A + s I, with scalars multiplied on the left."""
    if A.ring != spec.ring:
        raise RingError(f"matrix over {A.ring}, spec over {spec.ring}")
    sq = ut_mul(A, A)
    return sq - A.scale(spec.r) + UpperTriangular.identity(A.ring, A.n).scale(spec.s)


def first_nonzero(A: UpperTriangular) -> tuple[int, int] | None:
    """First nonzero position in row-major order, 1-based."""
    for i, j in A.positions():
        if not A.entry(i, j).is_zero():
            return i, j
    return None


def is_solution(A: UpperTriangular, spec: QuadraticSpec) -> bool:
    return quadratic_residual(A, spec).is_zero()


def principal_block(A: UpperTriangular, i: int, m: int) -> UpperTriangular:
    """Contiguous principal block on rows/columns i..i+m (1-based)."""
    if i < 1 or m < 0 or i + m > A.n:
        raise MatrixError(f"block ({i}, {m}) out of range for n={A.n}")
    return UpperTriangular.from_function(A.ring, m + 1, lambda k, l: A.entry(i + k - 1, i + l - 1))


def parse_matrix_document(text: str | dict) -> UpperTriangular:
    if isinstance(text, str):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixError(f"invalid JSON: {exc}") from exc
    else:
        doc = text
    if not isinstance(doc, dict) or set(doc) != {"ring", "n", "rows"}:
        raise MatrixError("document must be an object with exactly the keys ring, n, rows")
    if not isinstance(doc["ring"], str):
        raise MatrixError("ring must be a descriptor string")
    ring = FiniteRing.from_descriptor(doc["ring"])
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixError(f"n must be a positive integer, got {n!r}")
    rows = doc["rows"]
    if not isinstance(rows, list) or len(rows) != n:
        raise MatrixError(f"expected {n} rows")
    parsed = []
    for k, row in enumerate(rows, start=1):
        if not isinstance(row, list) or len(row) != n - k + 1:
            raise MatrixError(f"row {k} must have {n - k + 1} entries")
        out = []
        for offset, coords in enumerate(row):
            try:
                out.append(ring.from_list(coords))
            except RingError as exc:
                raise MatrixError(f"entry ({k},{k + offset}): {exc}") from exc
        parsed.append(out)
    return UpperTriangular(ring, parsed)
