"""Root pairs (a, b) of x^2 - r x + s and the derived coefficients."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .ring import FiniteRing, RingElement, RingError


class QuadraticError(ValueError):
    """Root pair rejected; ``reason`` is a short machine-readable tag."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class QuadraticSpec:
    ring: FiniteRing
    a: RingElement
    b: RingElement
    r: RingElement
    s: RingElement
    diff_inverse: RingElement
    diff_right_zero_divisor: bool

    @property
    def roots(self) -> tuple[RingElement, RingElement]:
        return (self.a, self.b)

    def evaluate(self, x: RingElement) -> RingElement:
        """x^2 - r x + s."""
        return x * x - self.r * x + self.s

    def other_root(self, x: RingElement) -> RingElement:
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        raise QuadraticError("not-a-root", f"{x!r} is neither root of the pair ({self.a}, {self.b})")

    def root_of(self, tag: int) -> RingElement:
        return self.a if tag == 0 else self.b

    def forced_denominator_inverse(self, tag: int) -> RingElement:
        """Inverse of a_ii - other_root(a_ii) for a diagonal carrying ``tag``.

        This is (a - b)^-1 for the first root and its negative for the second.
        """
        return self.diff_inverse if tag == 0 else -self.diff_inverse


def quad_from_roots(ring: FiniteRing, a: RingElement, b: RingElement) -> QuadraticSpec:
    if a.ring != ring or b.ring != ring:
        raise RingError("roots do not belong to the given ring")
    if a == b:
        raise QuadraticError("equal-roots", f"roots must differ, got {a} twice")
    if a * b != b * a:
        raise QuadraticError("non-commuting-roots", f"roots {a} and {b} do not commute")
    # the free-entry rule needs a x + x b = (a + b) x for every x
    if not (ring.is_central(a) and ring.is_central(b)):
        raise QuadraticError("non-central-roots", f"roots {a} and {b} must be central in {ring}")
    diff = a - b
    inv = ring.inverse(diff)
    if inv is None:
        raise QuadraticError("difference-not-unit", f"a - b = {diff} is not a unit in {ring}")
    r = a + b
    s = a * b
    spec = QuadraticSpec(ring, a, b, r, s, inv, ring.is_right_zero_divisor(diff))
    assert spec.evaluate(a).is_zero() and spec.evaluate(b).is_zero()
    return spec


def roots_of_coeffs(
    ring: FiniteRing, r: RingElement, s: RingElement
) -> list[tuple[RingElement, RingElement]]:
    """All unordered admissible pairs {a, b} with a + b = r and a b = s."""
    pairs = []
    elements = ring.all_elements()
    for idx, a in enumerate(elements):
        for b in elements[idx + 1 :]:
            if a + b != r or a * b != s:
                continue
            try:
                quad_from_roots(ring, a, b)
            except QuadraticError:
                continue
            pairs.append((a, b))
    return pairs


def idempotent_spec(ring: FiniteRing) -> QuadraticSpec:
    """Roots {0, 1}: the matrix equation becomes A^2 = A."""
    return quad_from_roots(ring, ring.zero, ring.one)


def involution_spec(ring: FiniteRing) -> QuadraticSpec:
    """Roots {1, -1}: the matrix equation becomes A^2 = I."""
    try:
        return quad_from_roots(ring, ring.one, -ring.one)
    except QuadraticError as exc:
        raise QuadraticError("characteristic-two", f"2 is not a unit in {ring}: {exc}") from exc


def other_root(spec: QuadraticSpec, x: RingElement) -> RingElement:
    return spec.other_root(x)


def parse_roots(ring: FiniteRing, text: str) -> tuple[RingElement, RingElement]:
    """Parse ``a,b`` where each root is a bare residue or a JSON-style array like [0,1,0,2]."""
    try:
        values = json.loads(f"[{text}]")
    except json.JSONDecodeError as exc:
        raise RingError(f"malformed roots {text!r}") from exc
    if ring.arity == 1 and len(values) == 2 and all(isinstance(v, int) for v in values):
        values = [[v] for v in values]
    if len(values) != 2:
        raise RingError(f"expected two roots, got {text!r}")
    return ring.from_list(values[0]), ring.from_list(values[1])
