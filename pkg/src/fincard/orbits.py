"""Grid operators on pool-supported families over large ground sets.

Fix a pool ``P = {0..p-1}`` inside a ground set of ``g`` atoms.  A family is
*profile-determined* when membership of a tuple ``x`` depends only on its
profile ``(x_1 & P, ..., x_n & P)``.  Every family whose atoms all lie in P
is profile-determined, and F, G, H and image recovery preserve the property,
because a tuple's extensions are chosen independently per coordinate and the
atoms outside P are interchangeable.  The operators therefore act exactly on
sets of profiles, whose number depends only on ``p`` and ``n``, never on
``g``.

A profile stands for the whole class of tuples sharing it; ``expand`` lists
that class explicitly when it is small enough to do so.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotAnFImageError, ShapeError, ValidationError
from .ground import Family, check_ground, check_shape, format_tuple

Profile = tuple  # tuple[frozenset[int], ...], parts inside the pool


@dataclass(frozen=True)
class OrbitSpace:
    ground: int
    pool: int

    def __post_init__(self):
        check_ground(self.ground)
        if not 0 <= self.pool <= self.ground:
            raise ValidationError(f"pool of {self.pool} atoms does not fit in {self.ground}")

    @property
    def outside(self) -> int:
        return self.ground - self.pool

    def part_profiles(self, k: int) -> tuple:
        return _part_profiles(self.pool, self.outside, k)

    def cell(self, shape: Sequence[int]) -> tuple:
        """Canonical listing of the profiles realised in a cell."""
        shape = check_shape(shape)
        return tuple(itertools.product(*(self.part_profiles(k) for k in shape)))

    def class_size(self, p: Profile, shape: Sequence[int]) -> int:
        return math.prod(math.comb(self.outside, k - len(q)) for q, k in zip(p, shape))

    def extensions(self, p: Profile, k: Sequence[int], l: Sequence[int]) -> list:
        """Profiles of the l-extensions of any tuple with profile p in cell k."""
        parts = [
            _part_extensions(self.pool, self.outside, q, ki, li) for q, ki, li in zip(p, k, l)
        ]
        return list(itertools.product(*parts))

    def profile_of(self, t: Sequence[frozenset]) -> Profile:
        return tuple(frozenset(a for a in part if a < self.pool) for part in t)


@lru_cache(maxsize=None)
def _part_profiles(pool: int, outside: int, k: int) -> tuple:
    out = []
    for size in range(min(k, pool) + 1):
        if k - size <= outside:
            out.extend(frozenset(c) for c in itertools.combinations(range(pool), size))
    return tuple(sorted(out, key=lambda s: (len(s), sorted(s))))


@lru_cache(maxsize=None)
def _part_extensions(pool: int, outside: int, q: frozenset, k: int, l: int) -> tuple:
    # q is a k-level part profile with k - |q| outside atoms; the l-level
    # extension adds pool atoms and keeps at least those outside atoms
    extra_outside = k - len(q)
    rest = [a for a in range(pool) if a not in q]
    out = []
    for add in range(0, min(l - len(q), len(rest)) + 1):
        out_count = l - len(q) - add
        if extra_outside <= out_count <= outside:
            out.extend(q | frozenset(c) for c in itertools.combinations(rest, add))
    return tuple(out)


@dataclass(frozen=True)
class OrbitFamily:
    space: OrbitSpace
    shape: tuple
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "shape", check_shape(self.shape))
        members = frozenset(self.members)
        allowed = [set(self.space.part_profiles(k)) for k in self.shape]
        for p in members:
            if len(p) != len(self.shape) or any(q not in a for q, a in zip(p, allowed)):
                raise ShapeError(f"profile {format_tuple(p)} is not realised in cell {self.shape}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, space: OrbitSpace, shape, profiles: Iterable[Sequence[Iterable[int]]]) -> "OrbitFamily":
        return cls(space, tuple(shape), frozenset(tuple(frozenset(q) for q in p) for p in profiles))

    @classmethod
    def from_family(cls, X: Family, pool: int) -> "OrbitFamily":
        """Profile form of an explicit family; raises unless X is profile-determined."""
        space = OrbitSpace(X.ground, pool)
        counts = {}
        for t in X.members:
            p = space.profile_of(t)
            counts[p] = counts.get(p, 0) + 1
        for p, c in counts.items():
            if c != space.class_size(p, X.shape):
                raise ValidationError(
                    f"family is not determined by profiles on a pool of {pool} atoms "
                    f"(profile {format_tuple(p)} is only partly present)"
                )
        return cls(space, X.shape, frozenset(counts))

    def expand(self) -> Family:
        g, pool = self.space.ground, self.space.pool
        outside = range(pool, g)
        members = set()
        for p in self.members:
            choices = [
                [q | frozenset(c) for c in itertools.combinations(outside, k - len(q))]
                for q, k in zip(p, self.shape)
            ]
            members.update(itertools.product(*choices))
        return Family(g, self.shape, frozenset(members))

    def __iter__(self):
        order = {p: i for i, p in enumerate(self.space.cell(self.shape))}
        return iter(sorted(self.members, key=order.__getitem__))

    def __len__(self):
        return len(self.members)

    def __bool__(self):
        return bool(self.members)

    def __sub__(self, other: "OrbitFamily") -> "OrbitFamily":
        return OrbitFamily(self.space, self.shape, self.members - other.members)

    def __or__(self, other: "OrbitFamily") -> "OrbitFamily":
        return OrbitFamily(self.space, self.shape, self.members | other.members)

    def __le__(self, other: "OrbitFamily") -> bool:
        return self.members <= other.members

    def __repr__(self):
        body = ", ".join(format_tuple(p) for p in self)
        return f"OrbitFamily(ground={self.space.ground}, pool={self.space.pool}, shape={self.shape}, {{{body}}})"


def _check(X: OrbitFamily, shape) -> None:
    if X.shape != tuple(shape):
        raise ShapeError(f"family of shape {X.shape}; expected {tuple(shape)}")


def orbit_F(X: OrbitFamily, l: Sequence[int]) -> OrbitFamily:
    out = set()
    for p in X.members:
        out.update(X.space.extensions(p, X.shape, l))
    return OrbitFamily(X.space, tuple(l), frozenset(out))


def orbit_G(X: OrbitFamily, l: Sequence[int]) -> OrbitFamily:
    image = orbit_F(X, l).members
    out = frozenset(
        p
        for p in X.space.cell(X.shape)
        if p in X.members or all(q in image for q in X.space.extensions(p, X.shape, l))
    )
    return OrbitFamily(X.space, X.shape, out)


def orbit_H(X: OrbitFamily, l: Sequence[int]) -> OrbitFamily:
    return orbit_G(X, l) - X


def orbit_recover(Z: OrbitFamily, k: Sequence[int]) -> OrbitFamily:
    k = check_shape(k)
    Y = OrbitFamily(
        Z.space,
        k,
        frozenset(
            p for p in Z.space.cell(k) if all(q in Z.members for q in Z.space.extensions(p, k, Z.shape))
        ),
    )
    if orbit_F(Y, Z.shape) != Z:
        raise NotAnFImageError(f"{len(Z)} profiles of shape {Z.shape} are not an F-image")
    return Y
