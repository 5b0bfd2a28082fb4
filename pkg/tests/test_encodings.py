import itertools
import random

import pytest

from fincard.encodings import (
    pair,
    pow_inject,
    pow_inject_inverse,
    powerset,
    seqi_split,
    seqi_split_preimage,
    seqi_to_finfin,
    unpair,
)
from fincard.errors import NotInImageError, ValidationError

import oracles

fs = frozenset


def test_seqi_examples():
    assert seqi_to_finfin(()) == {fs()}
    assert seqi_to_finfin((5,)) == {fs(), fs({5})}
    assert seqi_to_finfin((2, 0)) == {fs(), fs({2}), fs({0, 2})}
    assert seqi_to_finfin((0, 2)) == {fs(), fs({0}), fs({0, 2})}
    with pytest.raises(ValidationError):
        seqi_to_finfin((1, 1))


def test_seqi_injective_exhaustive():
    seen = {}
    for length in range(5):
        for t in itertools.permutations(range(5), length):
            assert seen.setdefault(seqi_to_finfin(t), t) == t


def test_pair_examples_and_bijection():
    assert pair(0, 0) == 0
    assert unpair(pair(7, 3)) == (7, 3)
    values = {}
    for m in range(201):
        for n in range(201):
            d = pair(m, n)
            assert d == oracles.pair(m, n)
            assert n <= d
            assert values.setdefault(d, (m, n)) == (m, n)
    assert all(pair(*unpair(d)) == d for d in range(5000))


def test_seqi_split():
    assert seqi_split(()) == (0, ())
    for length in range(7):
        t = tuple(range(length))
        m, prefix = seqi_split(t)
        assert len(prefix) <= len(t)
        assert pair(m, len(prefix)) == len(t)


def test_seqi_split_surjective_small():
    for d in range(9):
        m, n = unpair(d)
        for s in itertools.permutations(range(10), n):
            pre = seqi_split_preimage(m, s, 10)
            assert seqi_split(pre) == (m, s)


def test_pow_inject_examples():
    assert pow_inject({fs(): 4}, 0) == (fs({4}),)
    t1 = {fs(): 1, fs({0}): 2}
    assert pow_inject(t1, 1) == (fs({2}), fs({1}))
    a = dict(zip(powerset(2), (10, 11, 12, 13)))
    assert pow_inject(a, 2) == (fs({11, 13}), fs({12, 13}), fs({10}))
    assert pow_inject_inverse((fs({2}), fs({1})), 1) == t1
    with pytest.raises(NotInImageError):
        pow_inject_inverse((fs({1, 2}), fs({1})), 1)


def test_pow_roundtrip_exhaustive_n2():
    dom = powerset(2)
    cases = list(itertools.permutations(range(6), len(dom)))
    assert len(cases) == 360
    images = set()
    for values in cases:
        t = dict(zip(dom, values))
        F = pow_inject(t, 2)
        images.add(F)
        assert pow_inject_inverse(F, 2) == t
    assert len(images) == 360


def test_pow_roundtrip_random_n3():
    rng = random.Random(5)
    dom = powerset(3)
    for _ in range(2000):
        t = dict(zip(dom, rng.sample(range(20), 8)))
        assert pow_inject_inverse(pow_inject(t, 3), 3) == t


def test_pow_rejects_non_injection():
    with pytest.raises(ValidationError):
        pow_inject({fs(): 1, fs({0}): 1}, 1)
