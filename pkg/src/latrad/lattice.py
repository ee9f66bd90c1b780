"""Sublattices of Z^m and the lattice-level operations the certificates need.

A `Lattice` is stored through its canonical Hermite-form basis, so structural
equality of two values is the same thing as equality of the underlying sets.
All index sets handed in and out of this module are 1-based, matching the
convention used for face supports and verdict witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .exact_linalg import (
    IntMatrix,
    hnf_basis,
    integer_kernel,
    rational_feasible,
    snf,
    unimodular_inverse,
)


@dataclass(frozen=True)
class LatticeVector:
    """An element of Z^m with its positive/negative parts and support."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def plus(self) -> tuple[int, ...]:
        return tuple(x if x > 0 else 0 for x in self.entries)

    @property
    def minus(self) -> tuple[int, ...]:
        return tuple(-x if x < 0 else 0 for x in self.entries)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self.entries) if x)

    @property
    def support_plus(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self.entries) if x > 0)

    @property
    def support_minus(self) -> frozenset[int]:
        return frozenset(i + 1 for i, x in enumerate(self.entries) if x < 0)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-x for x in self.entries))

    def __iter__(self):
        return iter(self.entries)


VectorLike = Union[LatticeVector, Sequence[int]]


def as_vector(v: VectorLike) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return v
    return LatticeVector(tuple(int(x) for x in v))


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^ambient, basis rows in canonical Hermite form."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.basis, self.ambient)

    def basis_vectors(self) -> list[LatticeVector]:
        return [LatticeVector(row) for row in self.basis]

    def is_zero(self) -> bool:
        return not self.basis


@lru_cache(maxsize=None)
def _pivot_columns(basis: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    return tuple(next(j for j, x in enumerate(row) if x) for row in basis)


def from_generators(ambient: int, gens: Iterable[VectorLike]) -> Lattice:
    """The lattice generated by `gens` (may be dependent), canonicalized."""
    if ambient <= 0:
        raise ValueError("ambient dimension must be positive")
    rows = []
    for g in gens:
        v = as_vector(g)
        if v.dim != ambient:
            raise ValueError(f"generator of length {v.dim} in ambient dimension {ambient}")
        rows.append(v.entries)
    return Lattice(ambient, hnf_basis(rows, ambient))


def coordinates_in(L: Lattice, v: VectorLike) -> Optional[tuple[int, ...]]:
    """Integer coordinates of v in the canonical basis of L, or None."""
    vec = as_vector(v)
    if vec.dim != L.ambient:
        raise ValueError("vector/lattice dimension mismatch")
    residual = list(vec.entries)
    coords = []
    for row, j in zip(L.basis, _pivot_columns(L.basis)):
        q, r = divmod(residual[j], row[j])
        if r:
            return None
        if q:
            residual = [a - q * b for a, b in zip(residual, row)]
        coords.append(q)
    if any(residual):
        return None
    return tuple(coords)


def contains(L: Lattice, v: VectorLike) -> bool:
    return coordinates_in(L, v) is not None


def equal(L1: Lattice, L2: Lattice) -> bool:
    if L1.ambient != L2.ambient:
        raise ValueError("lattices live in different ambient dimensions")
    return L1 == L2


def saturation(L: Lattice) -> Lattice:
    """Sat(L): all vectors some nonzero multiple of which lies in L."""
    if L.rank == 0:
        return L
    _, _, V = snf(L.basis_matrix())
    Vinv = unimodular_inverse(V)
    return from_generators(L.ambient, [Vinv.row(i) for i in range(L.rank)])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_saturation(L: Lattice, p: int) -> Lattice:
    """(L : p^infty): all vectors some p-power multiple of which lies in L.

    Computed from the Smith form by stripping the p-part of each invariant
    factor.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if L.rank == 0:
        return L
    D, _, V = snf(L.basis_matrix())
    Vinv = unimodular_inverse(V)
    rows = []
    for i in range(L.rank):
        d = D.entries[i][i]
        while d % p == 0:
            d //= p
        rows.append(tuple(d * x for x in Vinv.row(i)))
    return from_generators(L.ambient, rows)


def _check_index_set(L: Lattice, E: Iterable[int]) -> frozenset[int]:
    E = frozenset(E)
    for i in E:
        if not 1 <= i <= L.ambient:
            raise ValueError(f"index {i} out of range 1..{L.ambient}")
    return E


def restrict(L: Lattice, E: Iterable[int]) -> Lattice:
    """The sublattice of vectors of L supported inside E."""
    E = _check_index_set(L, E)
    outside = [j for j in range(L.ambient) if j + 1 not in E]
    if not outside or L.rank == 0:
        return L
    # x.B is supported in E iff x kills every column outside E.
    proj = IntMatrix.from_rows([[row[j] for row in L.basis] for j in outside], L.rank)
    coeffs = integer_kernel(proj)
    rows = [
        tuple(sum(x[i] * L.basis[i][j] for i in range(L.rank)) for j in range(L.ambient))
        for x in coeffs.entries
    ]
    return from_generators(L.ambient, rows)


def is_positive(L: Lattice) -> bool:
    """Whether L meets the nonnegative orthant only in 0.

    L is not positive exactly when the rational row space of its basis
    contains a nonzero nonnegative vector: such a vector scales to an integer
    point of Sat(L), and a further multiple lands in L itself.
    """
    if L.rank == 0:
        return True
    nonneg = [tuple(row[j] for row in L.basis) for j in range(L.ambient)]
    strict = [tuple(sum(row) for row in L.basis)]
    return rational_feasible([], strict, nonneg, dim=L.rank) is None


def spans(C: Sequence[VectorLike], L: Lattice) -> bool:
    """Whether the vectors C generate L (each must already lie in L)."""
    vecs = [as_vector(c) for c in C]
    for v in vecs:
        if not contains(L, v):
            raise ValueError("spanning candidate does not lie in the lattice")
    return from_generators(L.ambient, vecs) == L


def _pivot_vector_for_index(R: Lattice, i: int) -> Optional[LatticeVector]:
    """The HNF pivot row for coordinate i under a column order making i lead.

    Returns the element of R with least positive i-coordinate (None when the
    i-coordinate vanishes on all of R), with the other coordinates reduced
    canonically.
    """
    if R.rank == 0:
        return None
    order = [i - 1] + [j for j in range(R.ambient) if j != i - 1]
    permuted = [[row[j] for j in order] for row in R.basis]
    H = hnf_basis(permuted, R.ambient)
    lead = H[0]
    if lead[0] == 0:
        return None
    restored = [0] * R.ambient
    for pos, j in enumerate(order):
        restored[j] = lead[pos]
    return LatticeVector(tuple(restored))


def extend_basis(
    L: Lattice,
    E1: Iterable[int],
    E2: Iterable[int],
    basis1: Sequence[VectorLike],
) -> list[LatticeVector]:
    """Extend a basis of L n Z^E1 to a basis of L n Z^E2.

    Indices of E2 - E1 are adjoined one at a time; each step either leaves
    the restricted lattice unchanged or appends the element whose new
    coordinate is positive and least possible.
    """
    E1 = _check_index_set(L, E1)
    E2 = _check_index_set(L, E2)
    if not E1 <= E2:
        raise ValueError("E1 must be contained in E2")
    given = [as_vector(b) for b in basis1]
    R1 = restrict(L, E1)
    for b in given:
        if not b.support <= E1:
            raise ValueError("basis1 vector not supported inside E1")
    if len(given) != R1.rank or from_generators(L.ambient, given) != R1:
        raise ValueError("basis1 is not a basis of the restriction to E1")
    out = list(given)
    cur = set(E1)
    for i in sorted(E2 - E1):
        cur.add(i)
        R = restrict(L, cur)
        u = _pivot_vector_for_index(R, i)
        if u is not None:
            out.append(u)
    if from_generators(L.ambient, out) != restrict(L, E2):
        raise RuntimeError("basis extension failed to span the restriction")
    return out


def rank_one_relation(L: Lattice, i: int, D: Iterable[int]) -> LatticeVector:
    """Generator of the rank-one lattice L n Z^(D u {i}), normalized so the
    i-coordinate is positive; its positive part is the single index i and its
    negative part sits inside D."""
    D = _check_index_set(L, D)
    if i in D:
        raise ValueError("index i must not belong to D")
    if not 1 <= i <= L.ambient:
        raise ValueError(f"index {i} out of range")
    R = restrict(L, D | {i})
    if R.rank != 1:
        raise ValueError(f"restriction has rank {R.rank}, expected rank 1")
    w = list(R.basis[0])
    if w[i - 1] == 0:
        raise ValueError("generator has zero coordinate at i; cannot normalize")
    if w[i - 1] < 0:
        w = [-x for x in w]
    v = LatticeVector(tuple(w))
    if v.support_plus != frozenset({i}) or not v.support_minus <= D:
        raise ValueError("relation does not split as i against D")
    return v
