"""Infinite upper triangular solutions, materialized lazily.

A LazyTriangular is given by a diagonal tag per index and a value for every
free position. Forced entries are computed on demand by filling the square
[i..j] x [i..j] one superdiagonal at a time, so no recursion depth grows with
j - i. Not safe for concurrent reads while materializing.
"""
from __future__ import annotations

import random
from typing import Callable

from .construct import DiagonalPattern, free_positions
from .matrix import UpperTriangular
from .quad import QuadraticSpec
from .ring import RingElement

PatternSource = Callable[[int], int]
FreeSource = Callable[[int, int], RingElement]


class LazyTriangular:
    def __init__(self, spec: QuadraticSpec, pattern_source: PatternSource, free_source: FreeSource):
        self.spec = spec
        self.pattern_source = pattern_source
        self.free_source = free_source
        self.memo: dict[tuple[int, int], RingElement] = {}

    def tag(self, i: int) -> int:
        return self.pattern_source(i)

    def entry(self, i: int, j: int) -> RingElement:
        if i < 1 or j < 1:
            raise IndexError(f"indices are 1-based, got ({i},{j})")
        if i > j:
            return self.spec.ring.zero
        hit = self.memo.get((i, j))
        if hit is not None:
            return hit
        for m in range(0, j - i + 1):
            for k in range(i, j - m + 1):
                if (k, k + m) not in self.memo:
                    self.memo[(k, k + m)] = self._compute(k, k + m)
        return self.memo[(i, j)]

    def _compute(self, i: int, j: int) -> RingElement:
        spec = self.spec
        ti = self.tag(i)
        if i == j:
            return spec.root_of(ti)
        if ti != self.tag(j):
            value = self.free_source(i, j)
            if value.ring != spec.ring:
                raise ValueError(f"free_source returned an element of {value.ring}")
            return value
        if j == i + 1:
            return spec.ring.zero
        total = spec.ring.zero
        for p in range(i + 1, j):
            total = total + self.memo[(i, p)] * self.memo[(p, j)]
        return -(total * spec.forced_denominator_inverse(ti))

    def truncate(self, n: int) -> UpperTriangular:
        """Leading n x n block."""
        if n < 1:
            raise ValueError("n must be >= 1")
        self.entry(1, n)
        # entry(1, n) fills only the square [1..n]^2, which is the whole block
        return UpperTriangular.from_function(self.spec.ring, n, self.entry)

    def pattern_prefix(self, n: int) -> DiagonalPattern:
        return DiagonalPattern(tuple(self.tag(i) for i in range(1, n + 1)))

    def free_restriction(self, n: int) -> dict[tuple[int, int], RingElement]:
        return {pos: self.entry(*pos) for pos in free_positions(self.pattern_prefix(n))}


def periodic_pattern(rule: str) -> PatternSource:
    """Repeat a string over {A, B} cyclically; index 1 maps to rule[0]."""
    tags = DiagonalPattern.from_string(rule).tags
    return lambda i: tags[(i - 1) % len(tags)]


def seeded_free_source(spec: QuadraticSpec, seed: int) -> FreeSource:
    """Free values drawn per position from a stream keyed on (seed, i, j)."""
    elements = spec.ring.all_elements()

    def source(i: int, j: int) -> RingElement:
        return random.Random(f"{seed}:{i}:{j}").choice(elements)

    return source


def constant_free_source(value: RingElement) -> FreeSource:
    return lambda i, j: value


def entry(L: LazyTriangular, i: int, j: int) -> RingElement:
    return L.entry(i, j)


def truncate(L: LazyTriangular, n: int) -> UpperTriangular:
    return L.truncate(n)
