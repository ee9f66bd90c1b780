"""Cover checking and the radical-generation criterion.

A set of lattice vectors covers the configuration when every index subset
that is not a face support is split by some vector: one of its two parts is
supported inside the subset and the other is not.  Radical generation holds
exactly when the set is a cover and, on every face support, the vectors
supported there generate the restricted lattice (in characteristic p, up to
p-saturation on both sides).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .configuration import Configuration, configuration_of
from .cone import enumerate_face_supports, is_simplex, minimal_face_support, cone_dimension
from .lattice import (
    Lattice,
    LatticeVector,
    VectorLike,
    as_vector,
    contains,
    from_generators,
    is_positive,
    is_prime,
    p_saturation,
    rank_one_relation,
    restrict,
)


@dataclass(frozen=True)
class CoverVerdict:
    passed: bool
    witness: Optional[frozenset[int]] = None
    per_subset_map: Optional[dict[frozenset[int], int]] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass(frozen=True)
class FaceReport:
    support: frozenset[int]
    required: Lattice
    generated: Lattice
    equal: bool


@dataclass(frozen=True)
class RadicalVerdict:
    passed: bool
    characteristic: int
    cover: CoverVerdict
    face_reports: tuple[FaceReport, ...]

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


def covers_subset(u: VectorLike, E: Iterable[int]) -> bool:
    """Whether the vector splits E: one part supported inside, the other not."""
    v = as_vector(u)
    E = frozenset(E)
    plus_in = v.support_plus <= E
    minus_in = v.support_minus <= E
    return plus_in != minus_in


def _mask(E: Iterable[int]) -> int:
    m = 0
    for i in E:
        m |= 1 << (i - 1)
    return m


def _unmask(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _subsets_shortlex(m: int):
    """All subsets of {1..m} as bitmasks, by cardinality then lexicographic
    order of the sorted index tuple."""
    for size in range(m + 1):
        for combo in itertools.combinations(range(1, m + 1), size):
            yield _mask(combo)


def is_cover(
    A: Configuration,
    U: Sequence[VectorLike],
    with_map: bool = False,
) -> CoverVerdict:
    """Sweep every subset of {1..m}; non-face subsets must be split by some
    vector.  On failure the witness is the least uncovered subset, smallest
    cardinality first and lexicographic within a cardinality, so failure
    messages name a minimal counterexample."""
    vecs = [as_vector(u) for u in U]
    for v in vecs:
        if v.dim != A.m:
            raise ValueError("vector/configuration dimension mismatch")
    m = A.m
    face_masks = {_mask(f.indices) for f in enumerate_face_supports(A)}
    sides = [(_mask(v.support_plus), _mask(v.support_minus)) for v in vecs]
    cover_map: dict[frozenset[int], int] = {}
    for emask in _subsets_shortlex(m):
        if emask in face_masks:
            continue
        hit = None
        for idx, (p, q) in enumerate(sides):
            if (p & ~emask == 0) != (q & ~emask == 0):
                hit = idx
                break
        if hit is None:
            return CoverVerdict(False, witness=_unmask(emask))
        if with_map:
            cover_map[_unmask(emask)] = hit
    return CoverVerdict(True, per_subset_map=cover_map if with_map else None)


def check_radical_generation(
    L: Lattice,
    U: Sequence[VectorLike],
    char: int,
) -> RadicalVerdict:
    """Decide whether U generates the radical of the lattice ideal of L, in
    the given characteristic (0 or a prime).

    The verdict records the cover check and one report per face support with
    the restricted lattice against the sublattice generated by the vectors
    supported there; in characteristic p the two sides are compared after
    p-saturation.
    """
    if char != 0 and not is_prime(char):
        raise ValueError("characteristic must be 0 or a prime")
    if not is_positive(L):
        raise ValueError("lattice is not positive")
    vecs = [as_vector(u) for u in U]
    for v in vecs:
        if not contains(L, v):
            raise ValueError(f"vector {v.entries} does not lie in the lattice")
    A = configuration_of(L)
    cover = is_cover(A, vecs)
    reports = []
    all_equal = True
    for face in enumerate_face_supports(A):
        required = restrict(L, face.indices)
        inside = [v for v in vecs if v.support <= face.indices]
        generated = from_generators(L.ambient, inside)
        if char == 0:
            eq = required == generated
        else:
            eq = p_saturation(required, char) == p_saturation(generated, char)
        all_equal = all_equal and eq
        reports.append(FaceReport(face.indices, required, generated, eq))
    return RadicalVerdict(cover.passed and all_equal, char, cover, tuple(reports))


def construct_simplex_cover(L: Lattice, A: Configuration) -> list[LatticeVector]:
    """For a simplex cone, a cover by one vector per non-ray index.

    Each vector is the rank-one relation tying a column to the rays of its
    minimal face: a pure power of the column's variable against a monomial on
    those rays.  The construction validates itself against the cover check.
    """
    reps = is_simplex(A)
    if reps is None:
        raise ValueError("cone is not a simplex; no cover of size m - n exists here")
    if len(reps) != cone_dimension(A):
        raise RuntimeError("ray representatives do not span the cone dimension")
    rep_set = frozenset(reps)
    out = []
    for i in range(1, A.m + 1):
        if i in rep_set:
            continue
        D = minimal_face_support(A, i) & rep_set
        out.append(rank_one_relation(L, i, D))
    verdict = is_cover(A, out)
    if not verdict.passed:
        raise RuntimeError("constructed vectors fail the cover check; this is a bug")
    return out


@dataclass(frozen=True)
class MinCoverResult:
    exact: Optional[int]
    witness: Optional[tuple[int, ...]]
    at_least: Optional[int]


def min_cover_size(
    A: Configuration,
    pool: Sequence[VectorLike],
    limit: int,
) -> MinCoverResult:
    """Exhaustive search for the smallest cover among subsets of the pool of
    size at most `limit`; reports `at_least = limit + 1` when none exists."""
    vecs = _validated_vectors(pool, A)
    m = A.m
    face_masks = {_mask(f.indices) for f in enumerate_face_supports(A)}
    nonface = [e for e in range(1 << m) if e not in face_masks]
    position = {e: k for k, e in enumerate(nonface)}
    universe = (1 << len(nonface)) - 1
    coverage = []
    for v in vecs:
        p, q = _mask(v.support_plus), _mask(v.support_minus)
        bits = 0
        for e in nonface:
            if (p & ~e == 0) != (q & ~e == 0):
                bits |= 1 << position[e]
        coverage.append(bits)
    for size in range(0, limit + 1):
        for combo in itertools.combinations(range(len(vecs)), size):
            agg = 0
            for idx in combo:
                agg |= coverage[idx]
            if agg == universe:
                return MinCoverResult(size, tuple(combo), None)
    return MinCoverResult(None, None, limit + 1)


def _validated_vectors(pool: Sequence[VectorLike], A: Configuration) -> list[LatticeVector]:
    vecs = [as_vector(u) for u in pool]
    for v in vecs:
        if v.dim != A.m:
            raise ValueError("vector/configuration dimension mismatch")
    return vecs
