import itertools
import math

import pytest
from hypothesis import given, strategies as st

from fincard.errors import ArityError, BoundsError, ShapeError
from fincard.ground import (
    Family,
    cell_size,
    enumerate_cell,
    format_tuple,
    make_tuple,
    rank,
    subset_rank,
    subset_unrank,
    tuple_join,
    tuple_leq,
    tuple_meet,
    unrank,
)

import oracles


def test_enumerate_examples():
    assert list(enumerate_cell(3, (1,))) == [make_tuple({0}), make_tuple({1}), make_tuple({2})]
    assert list(enumerate_cell(3, (0,))) == [make_tuple(set())]
    assert len(list(enumerate_cell(4, (1, 2)))) == 24


@pytest.mark.parametrize("ground,shape", [(4, (1, 2)), (5, (2,)), (3, (0, 3)), (6, (3,)), (4, (1, 1, 2))])
def test_enumerate_matches_oracle(ground, shape):
    got = list(enumerate_cell(ground, shape))
    assert len(got) == len(set(got)) == cell_size(ground, shape) == math.prod(math.comb(ground, k) for k in shape)
    assert set(got) == set(oracles.cell(ground, shape))


def test_rank_examples():
    assert unrank(0, 3, (1,)) == make_tuple({0})
    for r in range(6):
        assert rank(unrank(r, 4, (2,)), 4, (2,)) == r
    assert rank(make_tuple({1, 2}), 4, (2,)) == oracles.colex(4, 2).index(frozenset({1, 2}))


@pytest.mark.parametrize("ground,shape", [(4, (2,)), (5, (1, 2)), (4, (0, 2, 1))])
def test_rank_is_enumeration_order(ground, shape):
    for r, t in enumerate(enumerate_cell(ground, shape)):
        assert rank(t, ground, shape) == r
        assert unrank(r, ground, shape) == t


def test_subset_rank_colex():
    for k in range(5):
        for r, s in enumerate(oracles.colex(6, k)):
            assert subset_rank(s) == r
            assert subset_unrank(r, 6, k) == s


def test_rank_errors():
    with pytest.raises(BoundsError):
        unrank(3, 3, (1,))
    with pytest.raises(BoundsError):
        rank(make_tuple({0}), 3, (2,))
    with pytest.raises(ShapeError):
        list(enumerate_cell(3, (-1,)))


def test_order_examples():
    y = make_tuple({1, 3}, {2})
    assert tuple_leq(make_tuple(set(), set()), y)
    assert tuple_leq(make_tuple({1}, {2}), y)
    assert tuple_meet(make_tuple({1}), make_tuple({2})) == make_tuple(set())
    with pytest.raises(ArityError):
        tuple_leq(make_tuple({1}), y)


def test_lattice_laws_exhaustive():
    for n in (1, 2):
        tuples = list(itertools.product(oracles.subsets(3), repeat=n))
        for x, y in itertools.product(tuples, repeat=2):
            j, m = tuple_join(x, y), tuple_meet(x, y)
            assert tuple_leq(x, j) and tuple_leq(y, j)
            assert tuple_leq(m, x) and tuple_leq(m, y)
            assert tuple_leq(x, y) == (j == y) == (m == x)
            if tuple_leq(x, y) and tuple_leq(y, x):
                assert x == y


@given(st.integers(0, 2**12 - 1))
def test_family_bits_roundtrip(bits):
    fam = Family.from_bits(4, (1, 2), bits & (2**24 - 1))
    assert Family.from_bits(4, (1, 2), fam.bits) == fam
    assert Family.from_ranks(4, (1, 2), fam.ranks()) == fam
    assert [rank(t, 4, (1, 2)) for t in fam] == sorted(fam.ranks())


def test_family_validation():
    with pytest.raises(ShapeError):
        Family.of(3, (1,), [[{0, 1}]])
    assert format_tuple(make_tuple({0}, {1, 2})) == "⟨{0},{1,2}⟩"
