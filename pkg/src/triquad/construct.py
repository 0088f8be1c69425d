"""Completion of a diagonal pattern plus free entries into a solution of A^2 - rA + sI = 0.

Positions (i, j), i < j, split into two kinds by the diagonal tags:

* free:   tag_i != tag_j, any ring element is allowed;
* forced: tag_i == tag_j, the entry is 0 on the first superdiagonal and
  otherwise -S * (a_ii - other_root)^-1 with S = sum_{i<p<j} a_ip a_pj.

The inverse is applied on the right because the defining relation reads
a_ij (a_ii + a_jj - r) + S = 0.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .matrix import UpperTriangular
from .quad import QuadraticSpec
from .ring import FiniteRing, RingElement

DEFAULT_CEILING = 2**24

FIRST, SECOND = 0, 1
TAG_LETTERS = "AB"


class GuardExceeded(RuntimeError):
    pass


class AssignmentError(ValueError):
    pass


@dataclass(frozen=True)
class DiagonalPattern:
    tags: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.tags) < 1:
            raise ValueError("pattern must have length >= 1")
        if any(t not in (FIRST, SECOND) for t in self.tags):
            raise ValueError(f"tags must be 0 or 1, got {self.tags}")

    @classmethod
    def from_string(cls, text: str) -> DiagonalPattern:
        text = text.strip().upper()
        if not text or set(text) - set(TAG_LETTERS):
            raise ValueError(f"pattern must be a non-empty string over {{A,B}}, got {text!r}")
        return cls(tuple(TAG_LETTERS.index(c) for c in text))

    def __str__(self) -> str:
        return "".join(TAG_LETTERS[t] for t in self.tags)

    def __len__(self) -> int:
        return len(self.tags)

    @property
    def n(self) -> int:
        return len(self.tags)

    @property
    def n1(self) -> int:
        return self.tags.count(FIRST)

    @property
    def n2(self) -> int:
        return self.tags.count(SECOND)

    def tag(self, i: int) -> int:
        return self.tags[i - 1]

    def prefix(self, n: int) -> DiagonalPattern:
        return DiagonalPattern(self.tags[:n])


def all_patterns(n: int) -> Iterator[DiagonalPattern]:
    """All 2^n patterns, lexicographic with A before B."""
    for tags in itertools.product((FIRST, SECOND), repeat=n):
        yield DiagonalPattern(tags)


def _by_superdiagonal(n: int) -> Iterator[tuple[int, int]]:
    for m in range(1, n):
        for i in range(1, n - m + 1):
            yield i, i + m


def free_positions(pattern: DiagonalPattern) -> list[tuple[int, int]]:
    """Mixed-tag pairs (i, j), i < j, sorted by (j - i, i)."""
    return [(i, j) for i, j in _by_superdiagonal(pattern.n) if pattern.tag(i) != pattern.tag(j)]


def forced_positions(pattern: DiagonalPattern) -> list[tuple[int, int]]:
    return [(i, j) for i, j in _by_superdiagonal(pattern.n) if pattern.tag(i) == pattern.tag(j)]


ForcedRule = Callable[[int, RingElement], RingElement]


def _fill(
    ring: FiniteRing,
    pattern: DiagonalPattern,
    diagonal: list[RingElement],
    free: Mapping[tuple[int, int], RingElement],
    forced_rule: ForcedRule,
) -> UpperTriangular:
    n = pattern.n
    expected = set(free_positions(pattern))
    given = set(free)
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        raise AssignmentError(f"free assignment mismatch: missing {missing}, extra {extra}")

    zero = ring.zero
    # 0-based dense scratch grid
    a = [[zero] * n for _ in range(n)]
    for k in range(n):
        a[k][k] = diagonal[k]
    for i, j in _by_superdiagonal(n):
        if (i, j) in expected:
            value = free[(i, j)]
            if value.ring != ring:
                raise AssignmentError(f"free value at ({i},{j}) is over {value.ring}, not {ring}")
        elif j == i + 1:
            value = zero
        else:
            total = zero
            for p in range(i, j - 1):
                total = total + a[i - 1][p] * a[p][j - 1]
            value = forced_rule(pattern.tag(i), total)
        a[i - 1][j - 1] = value
    return UpperTriangular(ring, [a[k][k:] for k in range(n)])


def complete(
    pattern: DiagonalPattern,
    spec: QuadraticSpec,
    free: Mapping[tuple[int, int], RingElement],
) -> UpperTriangular:
    """The unique solution with the given diagonal pattern and free entries."""
    diagonal = [spec.root_of(t) for t in pattern.tags]

    def rule(tag: int, total: RingElement) -> RingElement:
        return -(total * spec.forced_denominator_inverse(tag))

    return _fill(spec.ring, pattern, diagonal, free, rule)


def complete_idempotent(
    ring: FiniteRing, pattern: DiagonalPattern, free: Mapping[tuple[int, int], RingElement]
) -> UpperTriangular:
    """Idempotent completion using a_ij = (1 - 2 a_ii) * S directly (diagonal A -> 0, B -> 1)."""
    one = ring.one
    diagonal = [ring.zero if t == FIRST else one for t in pattern.tags]

    def rule(tag: int, total: RingElement) -> RingElement:
        d = one if tag == SECOND else ring.zero
        return (one - (d + d)) * total

    return _fill(ring, pattern, diagonal, free, rule)


def complete_involution(
    ring: FiniteRing, pattern: DiagonalPattern, free: Mapping[tuple[int, int], RingElement]
) -> UpperTriangular:
    """Involution completion using a_ij = -(2 a_ii)^-1 * S directly (diagonal A -> 1, B -> -1)."""
    one = ring.one
    roots = (one, -one)
    diagonal = [roots[t] for t in pattern.tags]
    inverses = []
    for root in roots:
        inv = ring.inverse(root + root)
        if inv is None:
            raise ValueError(f"2 is not a unit in {ring}")
        inverses.append(inv)

    def rule(tag: int, total: RingElement) -> RingElement:
        return -(inverses[tag] * total)

    return _fill(ring, pattern, diagonal, free, rule)


def search_space(n: int, q: int) -> int:
    """2^n patterns times q^(largest number of free slots)."""
    return 2**n * q ** ((n // 2) * ((n + 1) // 2))


def enumerate_pattern(pattern: DiagonalPattern, spec: QuadraticSpec) -> Iterator[UpperTriangular]:
    """All q^(n1 n2) solutions with this diagonal, free values in canonical order."""
    slots = free_positions(pattern)
    elements = spec.ring.all_elements()
    for values in itertools.product(elements, repeat=len(slots)):
        yield complete(pattern, spec, dict(zip(slots, values)))


def enumerate_all(
    n: int, spec: QuadraticSpec, ceiling: int = DEFAULT_CEILING
) -> Iterator[UpperTriangular]:
    """Every solution whose diagonal lies in {a, b}, each exactly once, canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = search_space(n, spec.ring.cardinality)
    if size > ceiling:
        raise GuardExceeded(f"enumeration space {size} exceeds ceiling {ceiling}")
    return _enumerate(n, spec)


def _enumerate(n: int, spec: QuadraticSpec) -> Iterator[UpperTriangular]:
    for pattern in all_patterns(n):
        yield from enumerate_pattern(pattern, spec)


def random_free(
    pattern: DiagonalPattern, ring: FiniteRing, rng: random.Random
) -> dict[tuple[int, int], RingElement]:
    elements = ring.all_elements()
    return {pos: rng.choice(elements) for pos in free_positions(pattern)}


def random_pattern(n: int, rng: random.Random) -> DiagonalPattern:
    return DiagonalPattern(tuple(rng.randrange(2) for _ in range(n)))


def random_solution(n: int, spec: QuadraticSpec, seed: int) -> UpperTriangular:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    pattern = random_pattern(n, rng)
    return complete(pattern, spec, random_free(pattern, spec.ring, rng))
