"""Exact integer and rational linear algebra.

Everything in this module works with arbitrary-precision integers or
`fractions.Fraction`; floating point is never used.  The routines here
underpin all lattice and cone computations: Hermite and Smith normal forms
together with their unimodular transforms, saturated integer kernels, and an
exact rational feasibility solver based on Fourier-Motzkin elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

# A rational vector is a tuple of Fractions (always in lowest terms with
# positive denominators, by construction of Fraction).
RatVector = tuple[Fraction, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, x, y) with g = a*x + b*y and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def vector_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd and normalize the first nonzero entry positive."""
    g = vector_gcd(v)
    if g == 0:
        return tuple(v)
    w = [x // g for x in v]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored as a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows:
            cols = len(rows[0])
        elif cols is None:
            raise ValueError("column count required for an empty matrix")
        return IntMatrix(len(rows), cols, rows)

    @staticmethod
    def identity(k: int) -> "IntMatrix":
        return IntMatrix(k, k, tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().entries
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(dot(r, c) for c in cols) for r in self.entries))

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in r) for r in self.entries)


def _identity_rows(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def _hnf_core(rows_in: Sequence[Sequence[int]], m: int):
    """Row-style HNF with transform.  Returns (H rows, U rows, pivot cols)."""
    k = len(rows_in)
    H = [list(r) for r in rows_in]
    U = _identity_rows(k)
    piv = 0
    pivots: list[int] = []
    for col in range(m):
        if piv >= k:
            break
        nz = next((i for i in range(piv, k) if H[i][col]), None)
        if nz is None:
            continue
        if nz != piv:
            H[piv], H[nz] = H[nz], H[piv]
            U[piv], U[nz] = U[nz], U[piv]
        for i in range(piv + 1, k):
            if not H[i][col]:
                continue
            a, b = H[piv][col], H[i][col]
            if b % a == 0:
                q = b // a
                H[i] = [x - q * y for x, y in zip(H[i], H[piv])]
                U[i] = [x - q * y for x, y in zip(U[i], U[piv])]
            else:
                g, x, y = xgcd(a, b)
                p_, q_ = a // g, b // g
                H[piv], H[i] = (
                    [x * u + y * v for u, v in zip(H[piv], H[i])],
                    [-q_ * u + p_ * v for u, v in zip(H[piv], H[i])],
                )
                U[piv], U[i] = (
                    [x * u + y * v for u, v in zip(U[piv], U[i])],
                    [-q_ * u + p_ * v for u, v in zip(U[piv], U[i])],
                )
        if H[piv][col] < 0:
            H[piv] = [-x for x in H[piv]]
            U[piv] = [-x for x in U[piv]]
        a = H[piv][col]
        for i in range(piv):
            q = H[i][col] // a
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[piv])]
                U[i] = [x - q * y for x, y in zip(U[i], U[piv])]
        pivots.append(col)
        piv += 1
    return H, U, pivots


def hnf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Hermite normal form of the rows of M.

    Returns (H, U) with H = U * M, U unimodular, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows last.  H is the
    canonical representative of the integer row lattice of M.
    """
    H, U, _ = _hnf_core(M.entries, M.cols)
    return IntMatrix.from_rows(H, M.cols), IntMatrix.from_rows(U, M.rows)


def hnf_basis(rows: Sequence[Sequence[int]], m: int) -> tuple[tuple[int, ...], ...]:
    """Canonical HNF basis (zero rows dropped) of the lattice spanned by rows."""
    H, _, pivots = _hnf_core(rows, m)
    return tuple(tuple(r) for r in H[: len(pivots)])


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: (D, U, V) with D = U*M*V diagonal, d1 | d2 | ...

    U and V are unimodular; the nonzero diagonal entries are positive and
    each divides the next.
    """
    k, m = M.rows, M.cols
    A = [list(r) for r in M.entries]
    U = _identity_rows(k)
    # Track V transposed: column ops on A become row ops on Vt.
    Vt = _identity_rows(m)

    def row_combine(i1, i2, x, y, p_, q_):
        A[i1], A[i2] = (
            [x * u + y * v for u, v in zip(A[i1], A[i2])],
            [-q_ * u + p_ * v for u, v in zip(A[i1], A[i2])],
        )
        U[i1], U[i2] = (
            [x * u + y * v for u, v in zip(U[i1], U[i2])],
            [-q_ * u + p_ * v for u, v in zip(U[i1], U[i2])],
        )

    def col_combine(j1, j2, x, y, p_, q_):
        for row in A:
            a, b = row[j1], row[j2]
            row[j1], row[j2] = x * a + y * b, -q_ * a + p_ * b
        Vt[j1], Vt[j2] = (
            [x * u + y * v for u, v in zip(Vt[j1], Vt[j2])],
            [-q_ * u + p_ * v for u, v in zip(Vt[j1], Vt[j2])],
        )

    t = 0
    while t < min(k, m):
        pivot = None
        best = None
        for i in range(t, k):
            for j in range(t, m):
                v = A[i][j]
                if v and (best is None or abs(v) < best):
                    pivot, best = (i, j), abs(v)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            Vt[t], Vt[pj] = Vt[pj], Vt[t]
        while True:
            for i in range(k):
                if i != t and A[i][t]:
                    a, b = A[t][t], A[i][t]
                    if b % a == 0:
                        q = b // a
                        A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                        U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                    else:
                        g, x, y = xgcd(a, b)
                        row_combine(t, i, x, y, a // g, b // g)
            for j in range(m):
                if j != t and A[t][j]:
                    a, b = A[t][t], A[t][j]
                    if b % a == 0:
                        q = b // a
                        for row in A:
                            row[j] -= q * row[t]
                        Vt[j] = [x - q * y for x, y in zip(Vt[j], Vt[t])]
                    else:
                        g, x, y = xgcd(a, b)
                        col_combine(t, j, x, y, a // g, b // g)
            col_clean = all(A[i][t] == 0 for i in range(k) if i != t)
            row_clean = all(A[t][j] == 0 for j in range(m) if j != t)
            if not (col_clean and row_clean):
                continue
            d = A[t][t]
            offender = None
            for i in range(t + 1, k):
                for j in range(t + 1, m):
                    if A[i][j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[offender])]
            U[t] = [x + y for x, y in zip(U[t], U[offender])]
        t += 1
    for i in range(min(k, m)):
        if A[i][i] < 0:
            A[i] = [-x for x in A[i]]
            U[i] = [-x for x in U[i]]
    V = IntMatrix.from_rows(Vt, m).transpose()
    return IntMatrix.from_rows(A, m), IntMatrix.from_rows(U, k), V


def invariant_factors(M: IntMatrix) -> tuple[int, ...]:
    D, _, _ = snf(M)
    out = []
    for i in range(min(D.rows, D.cols)):
        if D.entries[i][i]:
            out.append(D.entries[i][i])
    return tuple(out)


def integer_kernel(M: IntMatrix) -> IntMatrix:
    """Basis of the saturated lattice {v in Z^cols : M v = 0}, rows in HNF."""
    if M.rows == 0:
        return IntMatrix.identity(M.cols)
    D, _, V = snf(M)
    r = sum(1 for i in range(min(D.rows, D.cols)) if D.entries[i][i])
    cols = [V.column(j) for j in range(r, M.cols)]
    return IntMatrix.from_rows(hnf_basis(cols, M.cols), M.cols) if cols else IntMatrix.from_rows([], M.cols)


def det(M: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if a[i][t]), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


def unimodular_inverse(M: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix (H = U*M = I gives U = M^-1)."""
    H, U = hnf(M)
    if H != IntMatrix.identity(M.rows):
        raise ValueError("matrix is not unimodular")
    return U


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q, by fraction Gauss elimination."""
    work = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pr = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col] / pr[col]
                work[i] = [x - f * y for x, y in zip(work[i], pr)]
        rank += 1
        col += 1
    return rank


def rational_kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer vectors spanning {x in Q^ncols : r . x = 0 for all r}."""
    work = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pr = work[rank]
        inv = 1 / pr[col]
        work[rank] = pr = [x * inv for x in pr]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], pr)]
        pivots.append(col)
        rank += 1
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -work[r][f]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        basis.append(primitive([int(x * denom) for x in vec]))
    return basis


# ---------------------------------------------------------------------------
# Exact rational feasibility via Fourier-Motzkin elimination.
#
# All the systems solved here come from homogeneous cones, so strict
# positivity is encoded as ">= 1" and the remaining inequalities as ">= 0".
# Constraints are normalized to primitive integer form and deduplicated after
# every elimination step, which keeps the instance sizes seen here (at most
# about a dozen variables) small.
# ---------------------------------------------------------------------------


def _normalize_constraint(coeffs, const) -> Optional[tuple[tuple[int, ...], int]]:
    """Scale (a, b) meaning a.x >= b to primitive integers; None if tautology."""
    denom = const.denominator if isinstance(const, Fraction) else 1
    for c in coeffs:
        if isinstance(c, Fraction):
            denom = denom * c.denominator // gcd(denom, c.denominator)
    a = [int(c * denom) for c in coeffs]
    b = int(const * denom)
    g = vector_gcd(a)
    g = gcd(g, abs(b))
    if g > 1:
        a = [x // g for x in a]
        b = b // g
    if not any(a) and b <= 0:
        return None
    return tuple(a), b


class _Infeasible(Exception):
    pass


def _fm_eliminate(ineqs: list[tuple[tuple[int, ...], int]], nvars: int):
    """Eliminate all variables; returns per-variable bound sets for witness
    extraction.  Raises _Infeasible when the system has no solution."""
    cur = set(ineqs)
    levels = []
    for j in reversed(range(nvars)):
        pos, neg, rest = [], [], set()
        for a, b in cur:
            if a[j] > 0:
                pos.append((a, b))
            elif a[j] < 0:
                neg.append((a, b))
            else:
                rest.add((a, b))
        levels.append((j, pos, neg))
        for (ap, bp), (an, bn) in itertools.product(pos, neg):
            x, y = -an[j], ap[j]
            coeffs = [x * u + y * v for u, v in zip(ap, an)]
            norm = _normalize_constraint(coeffs, x * bp + y * bn)
            if norm is not None:
                rest.add(norm)
        cur = rest
    for a, b in cur:
        if not any(a) and b > 0:
            raise _Infeasible
    witness = [Fraction(0)] * nvars
    for j, pos, neg in reversed(levels):
        lower = None
        for a, b in pos:
            val = (Fraction(b) - sum(Fraction(a[i]) * witness[i] for i in range(j))) / a[j]
            if lower is None or val > lower:
                lower = val
        upper = None
        for a, b in neg:
            val = (Fraction(b) - sum(Fraction(a[i]) * witness[i] for i in range(j))) / a[j]
            if upper is None or val < upper:
                upper = val
        if lower is not None:
            witness[j] = lower
        elif upper is not None:
            witness[j] = min(upper, Fraction(0))
        else:
            witness[j] = Fraction(0)
    return witness


def _equality_nullspace(equalities, dim) -> list[tuple[int, ...]]:
    if not equalities:
        return [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    return rational_kernel_basis(equalities, dim)


def rational_feasible(
    equalities: Sequence[Sequence],
    strict: Sequence[Sequence],
    nonneg: Sequence[Sequence] = (),
    dim: Optional[int] = None,
) -> Optional[RatVector]:
    """Find c with eq.c = 0, s.c >= 1 and t.c >= 0, or None when infeasible.

    The two mandatory constraint groups match the homogeneous-cone systems
    used throughout: equalities pin a face, strict constraints encode strict
    positivity (>= 1 up to scaling).  The optional `nonneg` group is needed by
    the face-closure computation, whose queries leave some evaluations free
    in sign only downward.
    """
    groups = [list(map(tuple, equalities)), list(map(tuple, strict)), list(map(tuple, nonneg))]
    seen_dims = {len(v) for g in groups for v in g}
    if len(seen_dims) > 1:
        raise ValueError("constraint vectors of mixed dimension")
    if seen_dims:
        d = seen_dims.pop()
        if dim is not None and dim != d:
            raise ValueError("constraint vectors of mixed dimension")
        dim = d
    elif dim is None:
        raise ValueError("dimension required when no constraints are given")

    null = _equality_nullspace(groups[0], dim)
    f = len(null)
    ineqs = []
    for s in groups[1]:
        norm = _normalize_constraint([dot(s, n) for n in null] if f else [], Fraction(1))
        if norm is None:
            continue
        if f == 0 or not any(norm[0]):
            if norm[1] > 0:
                return None
            continue
        ineqs.append(norm)
    for s in groups[2]:
        norm = _normalize_constraint([dot(s, n) for n in null] if f else [], Fraction(0))
        if norm is None:
            continue
        if not any(norm[0]) and norm[1] > 0:
            return None
        if any(norm[0]):
            ineqs.append(norm)
    try:
        t = _fm_eliminate(ineqs, f)
    except _Infeasible:
        return None
    c = tuple(sum(Fraction(null[i][j]) * t[i] for i in range(f)) for j in range(dim))
    for e in groups[0]:
        if dot(e, c) != 0:
            raise RuntimeError("feasibility witness fails an equality")
    for s in groups[1]:
        if dot(s, c) < 1:
            raise RuntimeError("feasibility witness fails a strict constraint")
    for s in groups[2]:
        if dot(s, c) < 0:
            raise RuntimeError("feasibility witness fails a sign constraint")
    return c
