"""Face lattice of the rational cone spanned by a configuration.

A face support is the index set of configuration vectors lying on a face of
the cone.  Faces are enumerated exactly: candidate facet normals come from
kernels of small column subsets and are sign-checked against every column,
then the collection is closed under intersection.  Closures and membership
tests go through exact rational feasibility instead, so the two routes
cross-validate each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

from .configuration import Configuration
from .exact_linalg import (
    RatVector,
    dot,
    primitive,
    rank_rational,
    rational_feasible,
    rational_kernel_basis,
)


@dataclass(frozen=True)
class FaceSupport:
    """A face support E with a certifying functional: the witness vanishes on
    the columns indexed by E and is strictly positive on all others (it is
    the zero functional exactly for the full support)."""

    indices: frozenset[int]
    witness: RatVector

    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))


def _support_key(E: frozenset[int]) -> tuple:
    return (len(E), tuple(sorted(E)))


def _scale_down(v: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else v


@lru_cache(maxsize=None)
def _face_support_table(A: Configuration) -> dict[frozenset[int], RatVector]:
    """All face supports of the cone of A, with witness functionals."""
    m, n = A.m, A.n
    cols = A.columns()
    full = frozenset(range(1, m + 1))
    table: dict[frozenset[int], RatVector] = {full: tuple(Fraction(0) for _ in range(n))}
    d = rank_rational(A.matrix) if A.matrix else 0
    found: dict[frozenset[int], tuple[int, ...]] = {}
    for S in itertools.combinations(range(m), d - 1) if d >= 1 else ():
        for c in rational_kernel_basis([cols[i] for i in S], n):
            evals = [dot(c, col) for col in cols]
            if all(e >= 0 for e in evals) and any(evals):
                pass
            elif all(e <= 0 for e in evals) and any(evals):
                c = tuple(-x for x in c)
                evals = [-e for e in evals]
            else:
                continue
            E = frozenset(i + 1 for i, e in enumerate(evals) if e == 0)
            if E not in found:
                found[E] = _scale_down(tuple(c))
    for E, c in found.items():
        nonzero = [dot(c, cols[i - 1]) for i in sorted(full - E)]
        scale = min(nonzero) if nonzero else 1
        table[E] = tuple(Fraction(x, scale) for x in c)
    # Close under intersection: the sum of two witnesses certifies it.
    frontier = list(table.keys())
    while frontier:
        new: dict[frozenset[int], RatVector] = {}
        for E1 in frontier:
            for E2 in table:
                E = E1 & E2
                if E not in table and E not in new:
                    w = tuple(a + b for a, b in zip(table[E1], table[E2]))
                    new[E] = w
        table.update(new)
        frontier = list(new.keys())
    return table


def enumerate_face_supports(A: Configuration) -> list[FaceSupport]:
    """Every face support of the cone of A, in canonical order."""
    table = _face_support_table(A)
    return [FaceSupport(E, table[E]) for E in sorted(table, key=_support_key)]


def _check_subset(A: Configuration, E: Iterable[int]) -> frozenset[int]:
    E = frozenset(E)
    for i in E:
        if not 1 <= i <= A.m:
            raise ValueError(f"index {i} out of range 1..{A.m}")
    return E


@lru_cache(maxsize=None)
def _closure(A: Configuration, E: frozenset[int]) -> frozenset[int]:
    cur = set(E)
    cols = A.columns()
    changed = True
    while changed:
        changed = False
        for j in sorted(set(range(1, A.m + 1)) - cur):
            eqs = [cols[i - 1] for i in sorted(cur)]
            strict = [cols[j - 1]]
            rest = [cols[k - 1] for k in range(1, A.m + 1) if k != j and k not in cur]
            if rational_feasible(eqs, strict, rest, dim=A.n) is None:
                cur.add(j)
                changed = True
    return frozenset(cur)


def support_closure(A: Configuration, E: Iterable[int]) -> frozenset[int]:
    """The support of the smallest face whose support contains E.

    Computed as a fixpoint: an index j is forced into the closure when no
    supporting functional vanishes on E while staying strictly positive at j.
    """
    return _closure(A, _check_subset(A, E))


def is_face_support(A: Configuration, E: Iterable[int]) -> Optional[FaceSupport]:
    """A certified FaceSupport when E is exactly the support of a face."""
    E = _check_subset(A, E)
    if support_closure(A, E) != E:
        return None
    if len(E) == A.m:
        return FaceSupport(E, tuple(Fraction(0) for _ in range(A.n)))
    cols = A.columns()
    eqs = [cols[i - 1] for i in sorted(E)]
    strict = [cols[j - 1] for j in range(1, A.m + 1) if j not in E]
    witness = rational_feasible(eqs, strict, dim=A.n)
    if witness is None:
        raise RuntimeError("closed support without a separating functional")
    return FaceSupport(E, witness)


def minimal_face_support(A: Configuration, i: int) -> frozenset[int]:
    """Support of the smallest face containing the i-th configuration vector."""
    if not 1 <= i <= A.m:
        raise ValueError(f"index {i} out of range 1..{A.m}")
    return support_closure(A, frozenset({i}))


def cone_dimension(A: Configuration) -> int:
    return rank_rational(A.matrix) if A.matrix else 0


@lru_cache(maxsize=None)
def _parallel_classes(A: Configuration) -> tuple[frozenset[int], ...]:
    by_direction: dict[tuple[int, ...], set[int]] = {}
    for i in range(1, A.m + 1):
        by_direction.setdefault(primitive(A.column(i)), set()).add(i)
    return tuple(sorted((frozenset(v) for v in by_direction.values()), key=_support_key))


def extreme_ray_classes(A: Configuration) -> list[frozenset[int]]:
    """Index classes of columns spanning the extreme rays of the cone."""
    table = _face_support_table(A)
    return [C for C in _parallel_classes(A) if C in table]


def is_simplex(A: Configuration) -> Optional[tuple[int, ...]]:
    """When the extreme rays are linearly independent, one representative
    column index per ray (the lowest); otherwise None."""
    classes = extreme_ray_classes(A)
    reps = sorted(min(C) for C in classes)
    if rank_rational([A.column(i) for i in reps]) != len(reps):
        return None
    return tuple(reps)


def is_full(A: Configuration) -> bool:
    """Whether the cone is a simplex of dimension n spanned by its rays with
    every remaining column in the relative interior."""
    reps = is_simplex(A)
    if reps is None or len(reps) != A.n or cone_dimension(A) != A.n:
        return False
    rep_set = set(reps)
    proper = [E for E in _face_support_table(A) if len(E) < A.m]
    for j in range(1, A.m + 1):
        if j in rep_set:
            continue
        if any(j in E for E in proper):
            return False
    return True


def full_ray_reindexing(A: Configuration) -> Optional[tuple[int, ...]]:
    """For a full configuration, the permutation (as original 1-based indices)
    placing the ray representatives first; None when not full."""
    if not is_full(A):
        return None
    reps = is_simplex(A)
    rest = [i for i in range(1, A.m + 1) if i not in reps]
    return tuple(list(reps) + rest)
