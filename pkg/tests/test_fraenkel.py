import itertools

import pytest

from fincard.errors import DomainError, NoPairError, StructuralError, ValidationError
from fincard.fraenkel import (
    Parity,
    PermutationOfAtoms as Perm,
    act,
    chain_length_bound,
    class_count,
    counting_bound,
    longest_chains,
    parity,
    parity_orbits,
    pigeonhole_pair,
    preorder_leq,
    same_partition_count,
    support_check,
)

fs = frozenset


def test_parity_examples():
    C = range(4)
    assert parity(Perm.identity(), C) is Parity.EVEN
    assert parity(Perm.transposition(0, 3), C) is Parity.ODD
    assert parity(Perm.from_cycles((0, 1, 2)), C) is Parity.EVEN
    with pytest.raises(DomainError):
        parity(Perm.transposition(0, 9), C)


def test_permutation_algebra():
    p = Perm.from_cycles((0, 1, 2), (3, 4))
    assert p.compose(p.inverse()) == Perm.identity()
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert p(0) == 1 and p(7) == 7
    with pytest.raises(ValidationError):
        Perm.from_mapping({0: 1, 1: 1})


def test_action_is_structural():
    p = Perm.transposition(0, 1)
    assert act(p, (fs({0, 2}), 1)) == (fs({1, 2}), 0)
    with pytest.raises(StructuralError):
        act(p, True)
    with pytest.raises(StructuralError):
        act(p, "a")


def test_orbit_examples():
    pair = parity_orbits((0, 1), range(3))
    assert len(pair.E) == len(pair.O) == 3 and pair.is_partition
    pair = parity_orbits((0,), range(2))
    assert pair.E == {(0,)} and pair.O == {(1,)}
    with pytest.raises(ValidationError):
        parity_orbits((), range(3))
    with pytest.raises(ValidationError):
        parity_orbits((1, 1), range(3))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_orbit_partition_only_for_long_tuples(m):
    for length in range(1, m + 1):
        pair = parity_orbits(tuple(range(length)), range(m))
        assert pair.E | pair.O == set(itertools.permutations(range(m), length))
        assert pair.is_partition == (length >= m - 1)


def test_pigeonhole_examples():
    assert pigeonhole_pair((fs({0}),), {1, 2, 3}) == (1, 2)
    assert pigeonhole_pair((fs({1}),), {1, 2, 3}) == (2, 3)
    with pytest.raises(NoPairError):
        pigeonhole_pair((fs({0}),), {0, 1})


def test_pigeonhole_total_n2():
    subsets = [fs(c) for r in range(7) for c in itertools.combinations(range(6), r)]
    for t in itertools.product(subsets, repeat=2):
        a, b = pigeonhole_pair(t, range(5))
        assert a < b
        assert act(Perm.transposition(a, b), t) == t


def test_preorder_examples():
    t, u = (fs({0}),), (fs({0, 1}),)
    pool = [0, 1, 2]
    assert preorder_leq(t, t, pool)
    assert not preorder_leq(t, u, pool)
    bottom = (fs(),)
    assert preorder_leq(bottom, u, pool) and class_count(bottom, pool) == 1


def test_bounds():
    assert chain_length_bound(0, 1) == 9
    assert chain_length_bound(1, 2) == 2**12 + 1
    assert counting_bound(0, 1) == 4


def test_chains_below_bound():
    free, strict = longest_chains(4, 1)
    assert (free, strict) == (4, 2)
    assert free < chain_length_bound(0, 1)


def test_counting_exhaustive():
    for g in range(1, 5):
        for B in ((), (0,)):
            for bits in range(2**g):
                u = (fs(a for a in range(g) if bits >> a & 1),)
                assert same_partition_count(u, g, B) <= counting_bound(len(B), 1)


def test_support_examples():
    sets = [fs(c) for r in range(6) for c in itertools.combinations(range(5), r)]
    identity = {s: s for s in sets}
    assert support_check(identity, (), 5)
    insert3 = {s: s | {3} for s in sets}
    assert support_check(insert3, {3}, 5)
    assert not support_check(insert3, (), 5)
    const = {s: fs({1, 2}) for s in sets}
    assert support_check(const, {1, 2}, 5)
    with pytest.raises(StructuralError):
        support_check({fs({0}): fs()}, (), 3)
