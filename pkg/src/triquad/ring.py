"""Finite associative unital rings: Z/mZ, Gaussian integers mod p, quaternions mod p.

Elements are immutable coordinate tuples bound to their ring. Inverses and
zero-divisor tests are done by exhaustive scan, which is cheap at the
cardinalities used here and keeps a single code path for all backends.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

KINDS = ("zmod", "gaussian", "quaternion")
ARITY = {"zmod": 1, "gaussian": 2, "quaternion": 4}

_DESCRIPTOR_RE = re.compile(r"^(zmod|gaussian|quaternion):(\d+)$")


class RingError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RingElement:
    __slots__ = ("ring", "coords")

    def __init__(self, ring: FiniteRing, coords: Sequence[int]):
        self.ring = ring
        self.coords = tuple(coords)

    def _check(self, other: RingElement) -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"cannot combine ring element with {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingError(f"mixed-ring operands: {self.ring} and {other.ring}")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        m = self.ring.modulus
        return RingElement(self.ring, [(x + y) % m for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        m = self.ring.modulus
        return RingElement(self.ring, [(x - y) % m for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> RingElement:
        m = self.ring.modulus
        return RingElement(self.ring, [(-x) % m for x in self.coords])

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, self.ring._mul(self.coords, other.coords))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self.coords == other.coords
            and self.ring == other.ring
        )

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: RingElement) -> bool:
        return self.coords < other.coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_list(self) -> list[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        return f"{self.ring.descriptor}{list(self.coords)}"

    def __str__(self) -> str:
        return self.ring.format(self)


@dataclass(frozen=True)
class FiniteRing:
    kind: str
    modulus: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.modulus < 2:
            raise RingError(f"modulus must be >= 2, got {self.modulus}")
        if self.kind != "zmod" and not is_prime(self.modulus):
            raise RingError(f"{self.kind} modulus not prime: {self.modulus}")

    @classmethod
    def from_descriptor(cls, desc: str) -> FiniteRing:
        match = _DESCRIPTOR_RE.match(desc.strip())
        if match is None:
            raise RingError(f"malformed ring descriptor {desc!r}")
        return cls(match.group(1), int(match.group(2)))

    @property
    def descriptor(self) -> str:
        return f"{self.kind}:{self.modulus}"

    def __str__(self) -> str:
        return self.descriptor

    @property
    def arity(self) -> int:
        return ARITY[self.kind]

    @property
    def cardinality(self) -> int:
        return self.modulus**self.arity

    @property
    def zero(self) -> RingElement:
        return RingElement(self, (0,) * self.arity)

    @property
    def one(self) -> RingElement:
        return RingElement(self, (1,) + (0,) * (self.arity - 1))

    def element(self, coords: int | Sequence[int]) -> RingElement:
        """Build an element, reducing each coordinate mod the modulus."""
        if isinstance(coords, int):
            coords = (coords,) + (0,) * (self.arity - 1)
        if len(coords) != self.arity:
            raise RingError(f"{self.descriptor} expects {self.arity} coordinates, got {len(coords)}")
        return RingElement(self, [c % self.modulus for c in coords])

    def from_list(self, coords: Sequence[int]) -> RingElement:
        """Strict decoding: coordinates must already lie in [0, modulus)."""
        if not isinstance(coords, (list, tuple)) or len(coords) != self.arity:
            raise RingError(f"{self.descriptor} element must be an array of {self.arity} residues")
        for c in coords:
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < self.modulus:
                raise RingError(f"coordinate {c!r} out of range [0, {self.modulus})")
        return RingElement(self, coords)

    def _mul(self, x: tuple, y: tuple) -> list[int]:
        m = self.modulus
        if self.kind == "zmod":
            return [x[0] * y[0] % m]
        if self.kind == "gaussian":
            a, b = x
            c, d = y
            return [(a * c - b * d) % m, (a * d + b * c) % m]
        # Hamilton product, i^2 = j^2 = k^2 = ijk = -1
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return [
            (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2) % m,
            (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2) % m,
            (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2) % m,
            (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2) % m,
        ]

    def all_elements(self) -> tuple[RingElement, ...]:
        """Every element once, lexicographic on coordinates."""
        return self._all

    @cached_property
    def _all(self) -> tuple[RingElement, ...]:
        coords = itertools.product(range(self.modulus), repeat=self.arity)
        return tuple(RingElement(self, c) for c in coords)

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self._all)

    def __len__(self) -> int:
        return self.cardinality

    def inverse(self, x: RingElement) -> RingElement | None:
        one = self.one
        for y in self._all:
            if x * y == one and y * x == one:
                return y
        return None

    def is_unit(self, x: RingElement) -> bool:
        return self.inverse(x) is not None

    def is_right_zero_divisor(self, d: RingElement) -> bool:
        return any(not x.is_zero() and (x * d).is_zero() for x in self._all)

    def is_left_zero_divisor(self, d: RingElement) -> bool:
        return any(not x.is_zero() and (d * x).is_zero() for x in self._all)

    def is_central(self, x: RingElement) -> bool:
        if self.kind != "quaternion":
            return True
        return all(x * y == y * x for y in self._all)

    def format(self, x: RingElement) -> str:
        if self.kind == "zmod":
            return str(x.coords[0])
        units = ("", "i", "j", "k")
        terms = [f"{c}{u}" for c, u in zip(x.coords, units) if c]
        return "+".join(terms) or "0"


def ring_from_descriptor(desc: str) -> FiniteRing:
    return FiniteRing.from_descriptor(desc)
