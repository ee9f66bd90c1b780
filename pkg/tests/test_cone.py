import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latrad.configuration import configuration_from_matrix, configuration_of, degree
from latrad.cone import (
    cone_dimension,
    enumerate_face_supports,
    full_ray_reindexing,
    is_face_support,
    is_full,
    is_simplex,
    minimal_face_support,
    support_closure,
)
from latrad.exact_linalg import dot, rank_rational
from latrad.instances import VERONESE33_MATRIX
from latrad.lattice import LatticeVector

VERONESE_SUPPORTS = [
    frozenset(),
    frozenset({1}),
    frozenset({2}),
    frozenset({3}),
    frozenset({1, 2, 4, 5}),
    frozenset({2, 3, 6, 7}),
    frozenset({1, 3, 8, 9}),
    frozenset(range(1, 11)),
]


@pytest.fixture(scope="module")
def vercfg(veronese):
    return configuration_of(veronese.lattice)


def test_veronese_face_supports(vercfg):
    found = {f.indices for f in enumerate_face_supports(vercfg)}
    assert found == set(VERONESE_SUPPORTS)


def test_face_witnesses_certify(vercfg):
    for f in enumerate_face_supports(vercfg):
        for i in range(1, vercfg.m + 1):
            e = dot(f.witness, vercfg.column(i))
            if i in f.indices:
                assert e == 0
            else:
                assert e >= 1


def test_family_face_supports(ojeda8):
    A = configuration_of(ojeda8.lattice)
    assert {f.indices for f in enumerate_face_supports(A)} == {
        frozenset(),
        frozenset({1, 2, 3, 4}),
    }


def test_quadrant_face_supports():
    A = configuration_from_matrix(((1, 0), (0, 1)))
    assert {f.indices for f in enumerate_face_supports(A)} == {
        frozenset(),
        frozenset({1}),
        frozenset({2}),
        frozenset({1, 2}),
    }


def test_support_closure_examples(vercfg):
    assert support_closure(vercfg, {10}) == frozenset(range(1, 11))
    assert support_closure(vercfg, {1, 4}) == frozenset({1, 2, 4, 5})
    assert support_closure(vercfg, frozenset()) == frozenset()


def test_is_face_support(vercfg):
    f = is_face_support(vercfg, {1, 2, 4, 5})
    assert f is not None
    for i in range(1, 11):
        e = dot(f.witness, vercfg.column(i))
        assert (e == 0) == (i in f.indices)
    assert is_face_support(vercfg, {10}) is None
    full = is_face_support(vercfg, frozenset(range(1, 11)))
    assert full is not None
    assert full.witness == tuple(Fraction(0) for _ in range(3))


def test_monomial_matrix_witness():
    # on the explicit degree-3 monomial matrix, the third coordinate
    # functional certifies the first facet
    A = configuration_from_matrix(VERONESE33_MATRIX)
    f = is_face_support(A, {1, 2, 4, 5})
    assert f is not None
    scaled = tuple(x / f.witness[2] for x in f.witness)
    assert scaled == (Fraction(0), Fraction(0), Fraction(1))


def test_closure_versus_enumeration_exhaustive(vercfg):
    supports = {f.indices for f in enumerate_face_supports(vercfg)}
    for size in range(0, 11):
        for combo in itertools.combinations(range(1, 11), size):
            E = frozenset(combo)
            assert (is_face_support(vercfg, E) is not None) == (E in supports)


def test_minimal_face_support(vercfg):
    assert minimal_face_support(vercfg, 4) == frozenset({1, 2, 4, 5})
    assert minimal_face_support(vercfg, 1) == frozenset({1})
    assert minimal_face_support(vercfg, 10) == frozenset(range(1, 11))


def test_is_simplex(vercfg, ojeda8):
    assert is_simplex(vercfg) == (1, 2, 3)
    assert is_simplex(configuration_of(ojeda8.lattice)) == (1,)
    A = configuration_from_matrix(((1, 0, 1, 2), (0, 1, 2, 1)))
    assert is_simplex(A) == (1, 2)


def test_is_simplex_negative():
    # square cone over the four axis directions: four extreme rays in
    # dimension three are never independent
    A = configuration_from_matrix(((1, 0, -1, 0), (0, 1, 0, -1), (1, 1, 1, 1)))
    assert is_simplex(A) is None


def test_is_full(vercfg, ojeda8):
    assert not is_full(vercfg)
    assert is_full(configuration_of(ojeda8.lattice))
    assert is_full(configuration_from_matrix(((1, 0), (0, 1))))
    # duplicated ray direction is not interior when the dimension exceeds one
    A = configuration_from_matrix(((1, 0, 2), (0, 1, 0)))
    assert not is_full(A)


def test_full_ray_reindexing(ojeda8):
    A = configuration_of(ojeda8.lattice)
    assert full_ray_reindexing(A) == (1, 2, 3, 4)


def test_cone_dimension(vercfg):
    assert cone_dimension(vercfg) == 3


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 10_000),
    st.sets(st.integers(1, 6), max_size=6),
    st.sets(st.integers(1, 6), max_size=6),
)
def test_closure_operator_laws(seed, E, extra):
    rng = random.Random(seed)
    n = 1 + seed % 3
    m = n + 1 + seed % 3
    A = _random_graded_configuration(rng, n, m)
    E = frozenset(i for i in E if i <= m)
    F = E | frozenset(i for i in extra if i <= m)
    closed = support_closure(A, E)
    assert E <= closed
    assert support_closure(A, closed) == closed
    assert closed <= support_closure(A, F)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_supports_intersection_closed(seed):
    rng = random.Random(seed)
    n = 1 + seed % 3
    m = n + 1 + seed % 3
    A = _random_graded_configuration(rng, n, m)
    supports = {f.indices for f in enumerate_face_supports(A)}
    assert frozenset() in supports
    assert frozenset(range(1, m + 1)) in supports
    for a in supports:
        for b in supports:
            assert a & b in supports


def _random_graded_configuration(rng, n, m):
    while True:
        mat = [[rng.randint(0, 4) for _ in range(m)] for _ in range(n)]
        cols = [tuple(r[j] for r in mat) for j in range(m)]
        if all(any(c) for c in cols) and rank_rational(mat) == n:
            return configuration_from_matrix(mat)


def test_support_trichotomy(veronese, vercfg):
    # a lattice vector sits inside a face support exactly when either of its
    # parts does
    rng = random.Random(5)
    L = veronese.lattice
    supports = [f.indices for f in enumerate_face_supports(vercfg)]
    for _ in range(25):
        coeffs = [rng.randint(-3, 3) for _ in range(L.rank)]
        u = LatticeVector(
            tuple(sum(c * row[j] for c, row in zip(coeffs, L.basis)) for j in range(10))
        )
        for E in supports:
            a = u.support <= E
            b = u.support_plus <= E
            c = u.support_minus <= E
            assert a == b == c


def test_membership_degree_equivalence(vercfg):
    # nonnegative vectors supported in a face have degree on that face:
    # checked through the witness functional
    rng = random.Random(11)
    for f in enumerate_face_supports(vercfg):
        for _ in range(10):
            v = tuple(rng.randint(0, 3) for _ in range(10))
            supported = LatticeVector(v).support <= f.indices
            pairing = dot(f.witness, degree(vercfg, v))
            assert (pairing == 0) == supported
