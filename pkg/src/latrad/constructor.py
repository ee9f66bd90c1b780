"""Constructions of radical-generating sets for full configurations.

For a full configuration (simplex cone with every non-ray column interior)
the lattice has a triangular basis u_{n+1},..,u_m supported along the nested
index sets E_i, plus rank-one relations v_i splitting each interior column
against the rays.  Combining the two yields m-n+1 generating vectors in
characteristic zero and m-n in characteristic p.  Both constructions are
self-validating: the returned set must pass the radical-generation checker,
otherwise a RuntimeError signals a bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from .configuration import Configuration, configuration_of
from .cone import full_ray_reindexing
from .lattice import (
    Lattice,
    LatticeVector,
    extend_basis,
    from_generators,
    is_prime,
    p_saturation,
    rank_one_relation,
    restrict,
    spans,
)
from .radical_cert import check_radical_generation


@dataclass(frozen=True)
class FullInstance:
    """A positive lattice with full configuration, prepared for construction.

    `perm` lists original 1-based indices with the n ray representatives
    first; position i (1-based) refers to original index perm[i-1].  The
    u-basis and v-relations are stored by position n+1..m, in original
    coordinates.
    """

    lattice: Lattice
    configuration: Configuration
    perm: tuple[int, ...]
    ray_indices: tuple[int, ...]
    u_basis: tuple[LatticeVector, ...]
    v_relations: tuple[LatticeVector, ...]

    @property
    def n(self) -> int:
        return len(self.ray_indices)

    @property
    def m(self) -> int:
        return self.lattice.ambient

    def original_index(self, position: int) -> int:
        return self.perm[position - 1]

    def positions(self, upto: int) -> frozenset[int]:
        """E_i as original indices: the first `upto` positions."""
        return frozenset(self.perm[:upto])

    def u(self, position: int) -> LatticeVector:
        return self.u_basis[position - self.n - 1]

    def v(self, position: int) -> LatticeVector:
        return self.v_relations[position - self.n - 1]


def _coord(vec: LatticeVector, inst: FullInstance, position: int) -> int:
    return vec.entries[inst.original_index(position) - 1]


def _add(a: LatticeVector, b: LatticeVector, scale: int = 1) -> LatticeVector:
    return LatticeVector(tuple(x + scale * y for x, y in zip(a.entries, b.entries)))


def _scale(a: LatticeVector, s: int) -> LatticeVector:
    return LatticeVector(tuple(s * x for x in a.entries))


def prepare_full(L: Lattice) -> FullInstance:
    """Build the u-basis and v-relations of a full instance.

    The u-basis comes from extending bases along the nested supports
    E_{n+1} c ... c E_m, each step contributing the vector with least
    positive new coordinate; v_i is the rank-one relation of column i
    against the rays, oriented with the ray part positive.
    """
    A = configuration_of(L)
    perm = full_ray_reindexing(A)
    if perm is None:
        raise ValueError("configuration is not full")
    n = A.n
    m = A.m
    rays = frozenset(perm[:n])
    inst_perm = perm
    u_list: list[LatticeVector] = []
    basis: list[LatticeVector] = []
    for i in range(n + 1, m + 1):
        e_prev = frozenset(inst_perm[: i - 1])
        e_cur = frozenset(inst_perm[:i])
        extended = extend_basis(L, e_prev, e_cur, basis)
        if len(extended) != len(basis) + 1:
            raise RuntimeError("full instance extension did not add exactly one vector")
        basis = extended
        u_list.append(basis[-1])
    v_list: list[LatticeVector] = []
    for i in range(n + 1, m + 1):
        orig = inst_perm[i - 1]
        w = rank_one_relation(L, orig, rays)
        v = -w
        if v.support_plus != rays or v.support_minus != frozenset({orig}):
            raise RuntimeError("interior relation does not split rays against the column")
        v_list.append(v)
    if u_list:
        u0, v0 = u_list[0], v_list[0]
        if u0 != v0 and u0 != -v0:
            raise RuntimeError("first extension vector is not the first relation up to sign")
    return FullInstance(L, A, inst_perm, tuple(perm[:n]), tuple(u_list), tuple(v_list))


def _dedup_signed(vectors: list[LatticeVector]) -> list[LatticeVector]:
    out: list[LatticeVector] = []
    for v in vectors:
        if any(v == w or v == -w for w in out):
            continue
        out.append(v)
    return out


def construct_char0(F: FullInstance) -> list[LatticeVector]:
    """Characteristic-zero construction: m - n + 1 vectors whose binomials
    generate the radical, validated through the checker before returning."""
    n, m = F.n, F.m
    if m == n:
        return []
    z: dict[int, LatticeVector] = {n + 1: F.u(n + 1)}
    if m >= n + 2:
        z[n + 2] = F.u(n + 2)
    for i in range(n + 3, m + 1):
        w = F.u(i)
        for j in range(n + 1, i - 1):
            vj = F.v(j)
            drop = _coord(vj, F, j)
            cur = _coord(w, F, j)
            # Subtracting r*v_j raises coordinate j by r*|drop|; take the
            # least positive r that makes it positive.
            r = max(1, cur // drop + 1) if cur <= 0 else 1
            while cur - r * drop <= 0:
                r += 1
            w = _add(w, vj, -r)
        v_prev = F.v(i - 1)
        r = 1
        for pos in range(1, n + 1):
            wc = _coord(w, F, pos)
            vc = _coord(v_prev, F, pos)
            while wc + r * vc <= 0:
                r += 1
        zi = _add(w, v_prev, r)
        if _coord(zi, F, i - 1) >= 0:
            raise RuntimeError("carry coordinate failed to turn negative")
        if _coord(zi, F, i) != _coord(F.u(i), F, i):
            raise RuntimeError("leading coordinate was disturbed")
        if zi.support != F.positions(i):
            raise RuntimeError("constructed vector has unexpected support")
        z[i] = zi
    z[m + 1] = F.v(m)
    out = [z[i] for i in sorted(z)]
    for i in sorted(z):
        if i == n + 2 and m >= n + 2:
            continue
        vec = z[i]
        if i == n + 1:
            if vec.support_plus != frozenset({F.original_index(n + 1)}):
                raise RuntimeError("first vector is not a pure power of its column")
        else:
            if vec.support_minus != frozenset({F.original_index(i - 1)}):
                raise RuntimeError("vector is not a pure power against index i-1")
    if m > n and not spans([z[i] for i in range(n + 1, m + 1)], F.lattice):
        raise RuntimeError("triangular vectors do not span the lattice")
    out = _dedup_signed(out)
    verdict = check_radical_generation(F.lattice, out, 0)
    if not verdict.passed:
        raise RuntimeError("characteristic-zero construction failed its checker")
    return out


def construct_charp(F: FullInstance, p: int) -> list[LatticeVector]:
    """Characteristic-p construction: m - n vectors whose binomials generate
    the radical in characteristic p, validated through the checker."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n, m = F.n, F.m
    if m == n:
        return []
    ys: dict[int, LatticeVector] = {n + 1: F.u(n + 1)}
    for i in range(n + 2, m + 1):
        w = F.u(i)
        for j in range(n + 1, i):
            vj = F.v(j)
            drop = _coord(vj, F, j)
            cur = _coord(w, F, j)
            # Adding r*v_j lowers coordinate j by r*|drop|; least positive r
            # making it negative.
            r = 1
            while cur + r * drop >= 0:
                r += 1
            w = _add(w, vj, r)
        gi = _coord(F.u(i), F, i)
        vii = _coord(F.v(i), F, i)
        if vii % gi != 0:
            raise RuntimeError("relation coordinate is not a multiple of the minimal one")
        t = -vii // gi
        if t <= 0:
            raise RuntimeError("relation coordinate has the wrong sign")
        bits = max(abs(x).bit_length() for vec in (w, F.v(i)) for x in vec.entries)
        cap = 64 * max(bits, 1)
        yi = None
        power = 1
        for k in range(1, cap + 1):
            power *= p
            r, s = divmod(power, t)
            candidate = _add(_scale(w, s), F.v(i), -r)
            if all(_coord(candidate, F, pos) < 0 for pos in range(1, n + 1)):
                yi = candidate
                break
        if yi is None:
            raise RuntimeError("no power of p satisfied the sign conditions")
        if _coord(yi, F, i) != power * gi:
            raise RuntimeError("leading coordinate is not the expected p-power multiple")
        if yi.support_plus != frozenset({F.original_index(i)}):
            raise RuntimeError("vector is not a pure power of its column")
        if s > 0 and yi.support != F.positions(i):
            raise RuntimeError("constructed vector has unexpected support")
        if not yi.support <= F.positions(i):
            raise RuntimeError("constructed vector leaks outside its support window")
        ys[i] = yi
        got = p_saturation(from_generators(F.m, [ys[j] for j in sorted(ys)]), p)
        want = p_saturation(restrict(F.lattice, F.positions(i)), p)
        if got != want:
            raise RuntimeError("p-saturation induction failed at an intermediate step")
    out = [ys[i] for i in sorted(ys)]
    verdict = check_radical_generation(F.lattice, out, p)
    if not verdict.passed:
        raise RuntimeError("characteristic-p construction failed its checker")
    return out
