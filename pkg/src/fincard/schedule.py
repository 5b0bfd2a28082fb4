"""Size schedules: target set sizes indexed by (cell shape, stage, coordinate).

A schedule assigns a size to every admissible triple ``(k, m, i)`` with
``k_j <= K``, ``m <= sum(k)`` and ``1 <= i <= n``.  The codec relies on four
properties only: sizes strictly increase in ``i``, do not decrease in ``m``,
are at least ``k_i``, and decode back to their triple.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import ValidationError


def primes(count: int) -> list:
    out = []
    candidate = 2
    while len(out) < count:
        if all(candidate % p for p in out if p * p <= candidate):
            out.append(candidate)
        candidate += 1
    return out


def admissible_shapes(n: int, K: int) -> list:
    """All cell shapes with every part at most K, in lexicographic order."""
    return list(itertools.product(range(K + 1), repeat=n))


def admissible_triples(n: int, K: int) -> Iterator[tuple]:
    """Triples ``(k, m, i)`` in lexicographic order, i fastest."""
    for k in admissible_shapes(n, K):
        for m in range(sum(k) + 1):
            for i in range(1, n + 1):
                yield k, m, i


@dataclass(frozen=True)
class SizeSchedule:
    name: str
    n: int
    K: int
    formula: Callable = field(repr=False, compare=False)
    _table: dict = field(init=False, repr=False, compare=False)
    _inverse: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1 or self.K < 0:
            raise ValidationError(f"need n >= 1 and K >= 0, got n={self.n}, K={self.K}")
        table = {(k, m, i): self.formula(k, m, i) for k, m, i in admissible_triples(self.n, self.K)}
        inverse = {}
        for triple, size in table.items():
            if size in inverse:
                raise ValidationError(f"schedule {self.name} assigns size {size} twice")
            inverse[size] = triple
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_inverse", inverse)

    def size(self, k, m: int, i: int) -> int:
        key = (tuple(k), m, i)
        if key not in self._table:
            raise ValidationError(f"triple {key} is not admissible for n={self.n}, K={self.K}")
        return self._table[key]

    def decode(self, size: int):
        return self._inverse.get(size)

    def s(self, k, m: int) -> tuple:
        return tuple(self.size(k, m, i) for i in range(1, self.n + 1))

    def t(self, k) -> tuple:
        return self.s(k, sum(k))

    def triples(self) -> list:
        return list(self._table)

    def required_ground(self) -> int:
        """Least ground size meeting ``sum(s(k, m))`` for every admissible (k, m)."""
        return max(sum(self.s(k, m)) for k in admissible_shapes(self.n, self.K) for m in range(sum(k) + 1))

    def contract_violations(self) -> list:
        """Messages for every violated schedule property (empty when sound)."""
        bad = []
        for (k, m, i), size in self._table.items():
            if size < k[i - 1]:
                bad.append(f"size{(k, m, i)}={size} < k_{i}")
            if i > 1 and size <= self._table[(k, m, i - 1)]:
                bad.append(f"not increasing in i at {(k, m, i)}")
            if m > 0 and size < self._table[(k, m - 1, i)]:
                bad.append(f"decreasing in m at {(k, m, i)}")
            if self.decode(size) != (k, m, i):
                bad.append(f"decode fails at {(k, m, i)}")
        return bad


def schedule_paper(n: int, K: int) -> SizeSchedule:
    """Prime-power sizes ``p_1^k_1 ... p_n^k_n * p_{n+1}^m * p_{n+2}^i``."""
    ps = primes(n + 2)

    def formula(k, m, i):
        return math.prod(p**e for p, e in zip(ps, k)) * ps[n] ** m * ps[n + 1] ** i

    return SizeSchedule("paper", n, K, formula)


def schedule_compact(n: int, K: int) -> SizeSchedule:
    """Sizes ``K + 1 + rank`` with rank the position of the triple in admissible order."""
    ranks = {triple: r for r, triple in enumerate(admissible_triples(n, K))}

    def formula(k, m, i):
        return K + 1 + ranks[(k, m, i)]

    return SizeSchedule("compact", n, K, formula)


SCHEDULES = {"paper": schedule_paper, "compact": schedule_compact}


def make_schedule(name: str, n: int, K: int) -> SizeSchedule:
    try:
        return SCHEDULES[name](n, K)
    except KeyError:
        raise ValidationError(f"unknown schedule {name!r}; choose from {sorted(SCHEDULES)}") from None
