import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latrad.instances import instance_ojeda, random_positive_lattice
from latrad.lattice import (
    LatticeVector,
    contains,
    equal,
    extend_basis,
    from_generators,
    is_positive,
    p_saturation,
    rank_one_relation,
    restrict,
    saturation,
    spans,
)

entries = st.integers(min_value=-5, max_value=5)


def lattices(max_dim=4):
    def build(m):
        return st.lists(
            st.lists(entries, min_size=m, max_size=m), min_size=0, max_size=m
        ).map(lambda gens: from_generators(m, gens))

    return st.integers(2, max_dim).flatmap(build)


def test_vector_parts():
    v = LatticeVector((2, -3, 0, 1))
    assert v.plus == (2, 0, 0, 1)
    assert v.minus == (0, 3, 0, 0)
    assert v.support == frozenset({1, 2, 4})
    assert tuple(a - b for a, b in zip(v.plus, v.minus)) == v.entries


def test_from_generators():
    L = from_generators(2, [(2, -2), (4, -4)])
    assert L.rank == 1
    assert L.basis == ((2, -2),)
    assert from_generators(3, []).rank == 0
    assert instance_ojeda(8).lattice.rank == 3
    with pytest.raises(ValueError):
        from_generators(3, [(1, 2)])


def test_contains_family(ojeda8):
    L = ojeda8.lattice
    assert contains(L, (2, 2, -2, -2))
    assert not contains(L, (1, 1, -1, -1))
    assert contains(L, (0, 0, 0, 0))


def test_equal():
    assert equal(from_generators(2, [(1, 1)]), from_generators(2, [(-1, -1)]))
    assert not equal(from_generators(2, [(2, 0), (0, 2)]), from_generators(2, [(2, 0), (1, 1)]))
    L = from_generators(2, [(1, -3)])
    assert equal(L, L)
    with pytest.raises(ValueError):
        equal(L, from_generators(3, []))


def test_saturation():
    assert saturation(from_generators(2, [(2, -2)])).basis == ((1, -1),)
    L = from_generators(3, [(1, -1, 0), (0, 1, -1)])
    assert saturation(L) == L


def test_saturation_family(ojeda8):
    from latrad.exact_linalg import IntMatrix, integer_kernel

    sat = saturation(ojeda8.lattice)
    ker = from_generators(4, integer_kernel(IntMatrix.from_rows([[1, 1, 1, 1]])).entries)
    assert sat == ker


def test_p_saturation():
    L = from_generators(2, [(3, -3)])
    assert p_saturation(L, 3).basis == ((1, -1),)
    assert p_saturation(L, 2).basis == ((3, -3),)
    sat = from_generators(2, [(1, -1)])
    assert p_saturation(sat, 5) == sat
    with pytest.raises(ValueError):
        p_saturation(L, 4)


@settings(max_examples=40, deadline=None)
@given(lattices(), st.sampled_from([2, 3, 5]))
def test_saturation_chain(L, p):
    sat = saturation(L)
    psat = p_saturation(L, p)
    assert saturation(sat) == sat
    assert p_saturation(psat, p) == psat
    for row in L.basis:
        assert contains(psat, row)
    for row in psat.basis:
        assert contains(sat, row)


def test_restrict(veronese):
    L = veronese.lattice
    R = restrict(L, {1, 2, 4, 5})
    expected = from_generators(10, [veronese.named["u1"], veronese.named["u2"], veronese.named["u3"]])
    assert R == expected
    assert restrict(L, frozenset(range(1, 11))) == L
    assert restrict(L, frozenset()).rank == 0
    with pytest.raises(ValueError):
        restrict(L, {0})


@settings(max_examples=40, deadline=None)
@given(lattices(), st.sets(st.integers(1, 4), max_size=4))
def test_restrict_properties(L, E):
    E = frozenset(i for i in E if i <= L.ambient)
    R = restrict(L, E)
    for row in R.basis:
        assert contains(L, row)
        assert LatticeVector(row).support <= E


def test_is_positive():
    assert is_positive(instance_ojeda(8).lattice)
    assert not is_positive(from_generators(2, [(1, 1)]))
    assert is_positive(from_generators(3, []))
    assert not is_positive(from_generators(2, [(1, 0), (0, 1)]))


def test_spans(veronese):
    L = veronese.lattice
    assert spans([LatticeVector(r) for r in L.basis], L)
    doubled = [LatticeVector(tuple(2 * x for x in r)) for r in L.basis]
    assert not spans(doubled, L)
    with pytest.raises(ValueError):
        spans([(1, 0, 0, 0, 0, 0, 0, 0, 0, 0)], L)


def test_spans_unique_seven_subset(veronese):
    # of the eleven named vectors, exactly one 7-subset generates the lattice
    names = ("u2", "u4", "u5", "u7", "u8", "u10", "u11")
    assert spans([veronese.named[k] for k in names], veronese.lattice)


def test_extend_basis_degenerate(veronese):
    L = veronese.lattice
    full = frozenset(range(1, 11))
    basis = extend_basis(L, frozenset(), full, [])
    assert len(basis) == 7
    assert spans(basis, L)


def test_extend_basis_from_facet(veronese):
    L = veronese.lattice
    E1 = frozenset({1, 2, 4, 5})
    base = restrict(L, E1).basis_vectors()
    out = extend_basis(L, E1, frozenset(range(1, 11)), base)
    assert out[: len(base)] == base
    assert spans(out, L)
    assert len(out) == 7


def test_extend_basis_non_canonical_start(veronese):
    # u1, u2 form a (non-canonical) basis of the facet restriction
    L = veronese.lattice
    base = [veronese.named["u1"], veronese.named["u2"]]
    out = extend_basis(L, frozenset({1, 2, 4, 5}), frozenset(range(1, 11)), base)
    assert out[:2] == base
    assert spans(out, L)


def test_extend_basis_identity(ojeda8):
    L = ojeda8.lattice
    E = frozenset({1, 2, 3, 4})
    base = restrict(L, E).basis_vectors()
    assert extend_basis(L, E, E, base) == base


def test_extend_basis_rejects_bad_start(ojeda8):
    L = ojeda8.lattice
    with pytest.raises(ValueError):
        extend_basis(L, frozenset({1}), frozenset({1, 2}), [LatticeVector((1, 0, 0, 0))])


def test_rank_one_relation(veronese):
    L = veronese.lattice
    w = rank_one_relation(L, 4, {1, 2})
    assert w.entries == (-2, -1, 0, 3, 0, 0, 0, 0, 0, 0)
    w = rank_one_relation(L, 10, {1, 2, 3})
    assert w.entries[9] == 3
    assert w.entries[:3] == (-1, -1, -1)
    with pytest.raises(ValueError):
        rank_one_relation(L, 10, {1, 2})  # rank 2 restriction


def test_rank_one_relation_two_columns():
    # columns 1 and 2 of the configuration are parallel: 2*(1) and 1*(2)
    L = from_generators(2, [(1, -2)])
    w = rank_one_relation(L, 2, {1})
    assert w.entries == (-1, 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_p_saturation_box_oracle(seed):
    import itertools

    m = 2 + seed % 2
    L = random_positive_lattice(m, 1, seed, 4)
    p = (2, 3, 5)[seed % 3]
    Lp = p_saturation(L, p)
    for v in itertools.product(range(-4, 5), repeat=m):
        lhs = contains(Lp, v)
        rhs = False
        w = v
        for _ in range(9):
            if contains(L, w):
                rhs = True
                break
            w = tuple(x * p for x in w)
        assert lhs == rhs
