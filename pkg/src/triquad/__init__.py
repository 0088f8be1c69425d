"""Upper triangular matrices satisfying A^2 - rA + sI = 0 over finite rings."""
from .construct import (
    DiagonalPattern,
    GuardExceeded,
    complete,
    enumerate_all,
    free_positions,
    random_solution,
)
from .count import CountReport, brute_force_count, closed_form_count, count_table
from .infinite import LazyTriangular
from .matrix import (
    UpperTriangular,
    is_solution,
    parse_matrix_document,
    principal_block,
    quadratic_residual,
    ut_mul,
)
from .quad import (
    QuadraticError,
    QuadraticSpec,
    idempotent_spec,
    involution_spec,
    quad_from_roots,
    roots_of_coeffs,
)
from .ring import FiniteRing, RingElement, RingError, ring_from_descriptor

__all__ = [
    "CountReport",
    "DiagonalPattern",
    "FiniteRing",
    "GuardExceeded",
    "LazyTriangular",
    "QuadraticError",
    "QuadraticSpec",
    "RingElement",
    "RingError",
    "UpperTriangular",
    "brute_force_count",
    "closed_form_count",
    "complete",
    "count_table",
    "enumerate_all",
    "free_positions",
    "idempotent_spec",
    "involution_spec",
    "is_solution",
    "parse_matrix_document",
    "principal_block",
    "quad_from_roots",
    "quadratic_residual",
    "random_solution",
    "ring_from_descriptor",
    "roots_of_coeffs",
    "ut_mul",
]
