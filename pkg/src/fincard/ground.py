"""Atoms, k-subsets, grid cells and families over a finite ground set.

A ground set of size ``g`` has atoms ``0 .. g-1``.  A subset tuple is a tuple
of ``frozenset`` objects; a cell is described by its shape, the tuple of part
sizes ``(k_1, ..., k_n)``.  Canonical order is colex on each component and
lexicographic across components (first component most significant).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ArityError, BoundsError, ShapeError, ValidationError

SubsetTuple = tuple  # tuple[frozenset[int], ...]
CellShape = tuple  # tuple[int, ...]


def check_ground(ground: int) -> int:
    if not isinstance(ground, int) or ground < 1:
        raise ValidationError(f"ground set size must be a positive integer, got {ground!r}")
    return ground


def check_shape(shape: Sequence[int]) -> CellShape:
    shape = tuple(shape)
    if not shape or any((not isinstance(k, int)) or k < 0 for k in shape):
        raise ShapeError(f"cell shape must be a non-empty tuple of naturals, got {shape!r}")
    return shape


# -- k-subsets -------------------------------------------------------------

def subset_rank(s: Iterable[int]) -> int:
    """Colex rank of a finite set of atoms."""
    return sum(math.comb(c, j + 1) for j, c in enumerate(sorted(s)))


def subset_unrank(r: int, ground: int, k: int) -> frozenset:
    if not 0 <= r < math.comb(ground, k):
        raise BoundsError(f"rank {r} out of range for [{ground}]^{k}")
    out = []
    n = ground
    while k > 0:
        n -= 1
        c = math.comb(n, k)
        if r >= c:
            r -= c
            out.append(n)
            k -= 1
    return frozenset(out)


@lru_cache(maxsize=None)
def ksubsets(ground: int, k: int) -> tuple:
    """All k-subsets of ``range(ground)`` in colex order."""
    combos = itertools.combinations(range(ground), k)
    return tuple(frozenset(c) for c in sorted(combos, key=lambda c: c[::-1]))


# -- cells -----------------------------------------------------------------

def cell_size(ground: int, shape: Sequence[int]) -> int:
    return math.prod(math.comb(ground, k) for k in shape)


@lru_cache(maxsize=256)
def _cell(ground: int, shape: CellShape) -> tuple:
    return tuple(itertools.product(*(ksubsets(ground, k) for k in shape)))


def enumerate_cell(ground: int, shape: Sequence[int]) -> Iterator[SubsetTuple]:
    """Yield every tuple of ``[A]^{k_1} x ... x [A]^{k_n}`` in canonical order."""
    check_ground(ground)
    shape = check_shape(shape)
    return iter(_cell(ground, shape))


def cell_tuples(ground: int, shape: Sequence[int]) -> tuple:
    """Materialised canonical listing of a cell (cached)."""
    return _cell(ground, check_shape(shape))


def in_cell(t: SubsetTuple, ground: int, shape: Sequence[int]) -> bool:
    return len(t) == len(shape) and all(
        len(part) == k and all(0 <= a < ground for a in part) for part, k in zip(t, shape)
    )


def rank(t: SubsetTuple, ground: int, shape: Sequence[int]) -> int:
    if not in_cell(t, ground, shape):
        raise BoundsError(f"{format_tuple(t)} is not in the cell {tuple(shape)} over {ground} atoms")
    r = 0
    for part, k in zip(t, shape):
        r = r * math.comb(ground, k) + subset_rank(part)
    return r


def unrank(r: int, ground: int, shape: Sequence[int]) -> SubsetTuple:
    shape = check_shape(shape)
    total = cell_size(ground, shape)
    if not 0 <= r < total:
        raise BoundsError(f"rank {r} out of range 0..{total - 1}")
    parts = []
    for k in reversed(shape):
        base = math.comb(ground, k)
        r, sub = divmod(r, base)
        parts.append(subset_unrank(sub, ground, k))
    return tuple(reversed(parts))


# -- the order on subset tuples ---------------------------------------------

def _same_arity(x: SubsetTuple, y: SubsetTuple) -> None:
    if len(x) != len(y):
        raise ArityError(f"arity mismatch: {len(x)} vs {len(y)}")


def tuple_leq(x: SubsetTuple, y: SubsetTuple) -> bool:
    """Componentwise inclusion."""
    _same_arity(x, y)
    return all(a <= b for a, b in zip(x, y))


def tuple_join(x: SubsetTuple, y: SubsetTuple) -> SubsetTuple:
    _same_arity(x, y)
    return tuple(a | b for a, b in zip(x, y))


def tuple_meet(x: SubsetTuple, y: SubsetTuple) -> SubsetTuple:
    _same_arity(x, y)
    return tuple(a & b for a, b in zip(x, y))


def empty_tuple(n: int) -> SubsetTuple:
    return (frozenset(),) * n


def make_tuple(*parts: Iterable[int]) -> SubsetTuple:
    return tuple(frozenset(p) for p in parts)


def format_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(a) for a in sorted(s)) + "}"


def format_tuple(t: SubsetTuple) -> str:
    return "⟨" + ",".join(format_set(p) for p in t) + "⟩"


# -- families ----------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """A finite set of subset tuples lying in one cell.

    Members are held as a frozenset; iteration follows canonical rank order.
    ``bits`` gives the dense bit-indexed form (bit r set iff the tuple of rank
    r is a member).
    """

    ground: int
    shape: CellShape
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        check_ground(self.ground)
        object.__setattr__(self, "shape", check_shape(self.shape))
        members = frozenset(self.members)
        for t in members:
            if not in_cell(t, self.ground, self.shape):
                raise ShapeError(
                    f"{format_tuple(t)} is not in the cell {self.shape} over {self.ground} atoms"
                )
        object.__setattr__(self, "members", members)

    @classmethod
    def empty(cls, ground: int, shape: Sequence[int]) -> "Family":
        return cls(ground, tuple(shape))

    @classmethod
    def full(cls, ground: int, shape: Sequence[int]) -> "Family":
        return cls(ground, tuple(shape), frozenset(cell_tuples(ground, shape)))

    @classmethod
    def of(cls, ground: int, shape: Sequence[int], tuples: Iterable[Sequence[Iterable[int]]]) -> "Family":
        return cls(ground, tuple(shape), frozenset(make_tuple(*t) for t in tuples))

    @classmethod
    def from_ranks(cls, ground: int, shape: Sequence[int], ranks: Iterable[int]) -> "Family":
        return cls(ground, tuple(shape), frozenset(unrank(r, ground, shape) for r in ranks))

    @classmethod
    def from_bits(cls, ground: int, shape: Sequence[int], bits: int) -> "Family":
        cell = cell_tuples(ground, shape)
        if bits < 0 or bits >> len(cell):
            raise BoundsError(f"bit pattern exceeds cell of size {len(cell)}")
        return cls(ground, tuple(shape), frozenset(t for i, t in enumerate(cell) if bits >> i & 1))

    def ranks(self) -> list:
        return sorted(rank(t, self.ground, self.shape) for t in self.members)

    @property
    def bits(self) -> int:
        out = 0
        for r in self.ranks():
            out |= 1 << r
        return out

    def __iter__(self):
        return iter(sorted(self.members, key=lambda t: rank(t, self.ground, self.shape)))

    def __len__(self):
        return len(self.members)

    def __contains__(self, t):
        return t in self.members

    def __bool__(self):
        return bool(self.members)

    def _like(self, members) -> "Family":
        return Family(self.ground, self.shape, frozenset(members))

    def _compatible(self, other: "Family") -> None:
        if (self.ground, self.shape) != (other.ground, other.shape):
            raise ShapeError(f"families live in different cells: {self.shape} vs {other.shape}")

    def __or__(self, other: "Family") -> "Family":
        self._compatible(other)
        return self._like(self.members | other.members)

    def __and__(self, other: "Family") -> "Family":
        self._compatible(other)
        return self._like(self.members & other.members)

    def __sub__(self, other: "Family") -> "Family":
        self._compatible(other)
        return self._like(self.members - other.members)

    def __le__(self, other: "Family") -> bool:
        self._compatible(other)
        return self.members <= other.members

    def __repr__(self):
        body = ", ".join(format_tuple(t) for t in self)
        return f"Family(ground={self.ground}, shape={self.shape}, {{{body}}})"
