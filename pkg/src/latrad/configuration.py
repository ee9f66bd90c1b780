"""The vector configuration attached to a positive lattice.

The quotient Z^m / Sat(L) is free of rank n = m - rank(L); fixing a basis of
the saturated orthogonal-complement lattice realizes it inside Z^n, and the
images of the unit vectors are the columns of the configuration matrix.  The
matrix entries depend on that basis choice, but every downstream output
(face supports, verdicts) is invariant under it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exact_linalg import RatVector, dot, integer_kernel, rational_feasible
from .lattice import Lattice, VectorLike, as_vector, is_positive


@dataclass(frozen=True)
class Configuration:
    """Vectors a_1..a_m in Z^n, stored as the columns of an n x m matrix,
    together with a strictly positive rational grading."""

    matrix: tuple[tuple[int, ...], ...]
    grading: RatVector

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def m(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def column(self, i: int) -> tuple[int, ...]:
        """The vector a_i (1-based)."""
        return tuple(row[i - 1] for row in self.matrix)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(i) for i in range(1, self.m + 1)]


def strict_grading(columns: Sequence[Sequence[int]], dim: int) -> Optional[RatVector]:
    """A rational d with d.a >= 1 for every column, or None."""
    return rational_feasible([], list(columns), dim=dim)


def configuration_from_matrix(rows: Sequence[Sequence[int]]) -> Configuration:
    """Build a configuration from an explicit matrix whose columns are the
    a_i; rejects matrices without a strictly positive grading."""
    matrix = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(matrix)
    m = len(matrix[0]) if matrix else 0
    cols = [tuple(r[j] for r in matrix) for j in range(m)]
    grading = strict_grading(cols, n)
    if grading is None:
        raise ValueError("configuration admits no strictly positive grading")
    return Configuration(matrix, grading)


def configuration_of(L: Lattice) -> Configuration:
    """The configuration of the positive lattice L.

    The matrix rows are the canonical basis of the saturated lattice
    orthogonal to L, so its integer kernel is exactly Sat(L).
    """
    if not is_positive(L):
        raise ValueError("lattice is not positive; no configuration is attached")
    kernel = integer_kernel(L.basis_matrix())
    n = L.ambient - L.rank
    if kernel.rows != n:
        raise RuntimeError("orthogonal lattice has unexpected rank")
    cfg = configuration_from_matrix(kernel.entries)
    for i in range(1, cfg.m + 1):
        if not any(cfg.column(i)):
            raise RuntimeError("zero column in the configuration of a positive lattice")
    return cfg


def degree(A: Configuration, v: VectorLike) -> tuple[int, ...]:
    """The grading-by-columns degree sum(v_i * a_i) of a nonnegative vector."""
    vec = as_vector(v)
    if vec.dim != A.m:
        raise ValueError("vector/configuration dimension mismatch")
    if any(x < 0 for x in vec.entries):
        raise ValueError("degree is defined for nonnegative vectors only")
    return tuple(dot(row, vec.entries) for row in A.matrix)


def grading_witness(A: Configuration) -> RatVector:
    """The stored strictly positive grading (d.a_i >= 1 for every column)."""
    return A.grading
