"""Built-in lattice instances and random generators.

`veronese33` is the kernel lattice of the degree-3 monomial configuration in
three variables (ten columns, rank seven), with the named relation vectors
used throughout its certificates.  `ojeda` is a one-parameter family of
non-saturated rank-3 sublattices of Z^4 whose ideals are minimally generated
by m binomials; its named vectors are the exponent vectors of that
generating set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exact_linalg import IntMatrix, integer_kernel
from .lattice import Lattice, LatticeVector, contains, from_generators, is_positive

VERONESE33_MATRIX = (
    (3, 0, 0, 2, 1, 0, 0, 2, 1, 1),
    (0, 3, 0, 1, 2, 2, 1, 0, 0, 1),
    (0, 0, 3, 0, 0, 1, 2, 1, 2, 1),
)


@dataclass(frozen=True)
class Instance:
    lattice: Lattice
    named: dict[str, LatticeVector]


def instance_veronese33() -> Instance:
    """The rank-7 kernel lattice in Z^10 with its eleven u-vectors and v."""
    L_matrix = integer_kernel(IntMatrix.from_rows(VERONESE33_MATRIX))
    L = Lattice(10, L_matrix.entries)
    named = {
        "u1": (2, 1, 0, -3, 0, 0, 0, 0, 0, 0),
        "u2": (1, 0, 0, -2, 1, 0, 0, 0, 0, 0),
        "u3": (1, 2, 0, 0, -3, 0, 0, 0, 0, 0),
        "u4": (0, 2, 1, 0, 0, -3, 0, 0, 0, 0),
        "u5": (0, 1, 0, 0, 0, -2, 1, 0, 0, 0),
        "u6": (0, 1, 2, 0, 0, 0, -3, 0, 0, 0),
        "u7": (2, 0, 1, 0, 0, 0, 0, -3, 0, 0),
        "u8": (1, 0, 0, 0, 0, 0, 0, -2, 1, 0),
        "u9": (1, 0, 2, 0, 0, 0, 0, 0, -3, 0),
        "u10": (1, 0, 0, -1, 0, 0, 0, -1, 0, 1),
        "u11": (0, 0, 0, 1, 0, 0, 1, 0, 0, -2),
        "v": (1, 1, 1, 0, 0, 0, 0, 0, 0, -3),
    }
    vectors = {name: LatticeVector(entries) for name, entries in named.items()}
    for name, vec in vectors.items():
        if not contains(L, vec):
            raise RuntimeError(f"named vector {name} does not lie in the lattice")
    return Instance(L, vectors)


def ojeda_generators(m: int) -> list[tuple[int, ...]]:
    q = 0 if m % 2 == 0 else 1
    return [
        (m + 2 * q - 3, -m + 2 * q + 5, -1, -1),
        (-m - 2 * q + 5, m - 2 * q - 3, -1, -1),
        (-m - 2 * q + 5, -1, m - 3, -1),
    ]


def ojeda_grading(m: int) -> tuple[int, ...]:
    if m % 2 == 0:
        return (1, 1, 1, 1)
    return (m - 6, m - 2, m - 4, m - 4)


def instance_ojeda(m: int) -> Instance:
    """The rank-3 family lattice in Z^4 with its named generator exponents."""
    if m < 8:
        raise ValueError("family parameter must be at least 8")
    q = 0 if m % 2 == 0 else 1
    gens = ojeda_generators(m)
    L = from_generators(4, gens)
    named: dict[str, tuple[int, ...]] = {
        "e1": tuple(gens[0]),
        "e2": tuple(gens[1]),
        "e3": tuple(gens[2]),
        "f1": tuple(gens[0]),
        "f2": tuple(gens[1]),
        "f3": tuple(gens[2]),
        "f12": (2, 2, -2, -2),
    }
    for i in range(1, (m + q) // 2 - 3 + 1):
        named[f"f23_{i}"] = (-(m + 2 * q - 2 * i - 5), 2 * i - 1, m - 2 * i - 3, -(2 * i + 1))
    for j in range(1, (m - q) // 2 - 2 + 1):
        named[f"f13_{j}"] = (2 * j, -(m - 2 * q - 2 * j - 2), m - 2 * j - 2, -2 * j)
    if m % 2 == 0:
        named["f123"] = (-1, -(m - 5), -1, m - 3)
    else:
        named["f123"] = (-(m - 3), -1, -1, m - 3)
    vectors = {name: LatticeVector(entries) for name, entries in named.items()}
    for name, vec in vectors.items():
        if not contains(L, vec):
            raise RuntimeError(f"named vector {name} does not lie in the family lattice")
    return Instance(L, vectors)


def random_positive_lattice(m: int, r: int, seed: int, bound: int) -> Lattice:
    """A reproducible positive lattice of rank exactly r in Z^m, rejection
    sampled with entries in [-bound, bound]."""
    if r >= m:
        raise ValueError("positive lattices have rank below the ambient dimension")
    rng = random.Random(seed)
    for _ in range(10_000):
        gens = [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(r)]
        L = from_generators(m, gens)
        if L.rank == r and is_positive(L):
            return L
    raise RuntimeError("sampling budget exhausted without a positive lattice")


def random_full_lattice(n: int, m: int, seed: int, bound: int = 3, index_bound: int = 3) -> Lattice:
    """A reproducible positive lattice whose configuration is full: rays on
    the standard basis of Z^n, interior columns strictly positive, and a
    random finite-index distortion of the kernel."""
    if m < n:
        raise ValueError("need at least as many columns as rays")
    rng = random.Random(seed)
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    cols += [[rng.randint(1, bound) for _ in range(n)] for _ in range(m - n)]
    matrix = IntMatrix.from_rows([[col[i] for col in cols] for i in range(n)], m)
    kernel = integer_kernel(matrix)
    rows = list(kernel.entries)
    rank = len(rows)
    mixed = []
    for i in range(rank):
        combo = [0] * m
        for j in range(i, rank):
            c = rng.randint(1, index_bound) if j == i else rng.randint(-2, 2)
            combo = [x + c * y for x, y in zip(combo, rows[j])]
        mixed.append(combo)
    return from_generators(m, mixed)
