"""Injective coding of families of n-tuples of finite sets by sets of n-sets.

``phi_encode`` maps a mixed family X (a subset of ``fin(A)^n`` with every
part of size at most K) to a set of n-element sets of finite sets.  Per cell
``k`` and stage ``m <= sum(k)`` it takes

    Y[k, m] = G_{k, t(k)}(H_{k, t(k)}^m(X_k))
    Z[k, m] = F_{k, s(k, m)}(Y[k, m])

and emits the range of every tuple of ``Z[k, m]``.  The schedule's distinct
sizes make each range an n-set whose sizes name ``(k, m)`` and the position
of each part.  ``phi_decode`` reads the Z's back off the sizes, recovers the
G-fixed Y's from their images, and rebuilds ``X_k`` as the alternating
difference ``Y0 - (Y1 - (... - Y_M))``.

Two computation spaces are supported: explicit families over a small ground
set, and pool-profile families (see :mod:`fincard.orbits`) for ground sets
far too large to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotAnFImageError, NotAPhiImageError, PreconditionError, ShapeError, ValidationError
from .grid import OperatorContext, big_F, big_G, recover_from_image
from .ground import Family, check_ground, format_tuple, make_tuple
from .orbits import OrbitFamily, OrbitSpace, orbit_F, orbit_G, orbit_recover
from .schedule import SizeSchedule, admissible_shapes


@dataclass(frozen=True)
class MixedFamily:
    """A family of n-tuples spread over several cells, stored cell by cell.

    ``cells`` is a tuple of ``(shape, family)`` pairs sorted by shape; empty
    cells are dropped so equal families compare equal.
    """

    n: int
    cells: tuple = ()

    def __post_init__(self):
        items = dict(self.cells)
        for shape, fam in items.items():
            if len(shape) != self.n or fam.shape != tuple(shape):
                raise ShapeError(f"cell {shape} does not match arity {self.n}")
        object.__setattr__(self, "cells", tuple(sorted((s, f) for s, f in items.items() if f)))

    @classmethod
    def from_tuples(cls, n: int, ground: int, tuples: Iterable[Sequence[Iterable[int]]]) -> "MixedFamily":
        by_shape = {}
        for t in tuples:
            t = make_tuple(*t)
            if len(t) != n:
                raise ShapeError(f"{format_tuple(t)} does not have arity {n}")
            by_shape.setdefault(tuple(len(p) for p in t), set()).add(t)
        return cls(n, tuple((s, Family(ground, s, frozenset(ts))) for s, ts in by_shape.items()))

    def to_orbits(self, pool: int) -> "MixedFamily":
        return MixedFamily(self.n, tuple((s, OrbitFamily.from_family(f, pool)) for s, f in self.cells))

    def expand(self) -> "MixedFamily":
        return MixedFamily(self.n, tuple((s, f.expand()) for s, f in self.cells))

    def cell(self, shape):
        return dict(self.cells).get(tuple(shape))

    def shapes(self) -> list:
        return [s for s, _ in self.cells]

    def tuples(self) -> list:
        return [t for _, f in self.cells for t in f]

    def __len__(self):
        return sum(len(f) for _, f in self.cells)

    def __bool__(self):
        return bool(self.cells)


@dataclass(frozen=True)
class CodedSet:
    """A set of n-element sets of finite atom sets.

    In the pool-profile space a member is a frozenset of ``(profile, size)``
    pairs and stands for every n-set of sets with those profiles and sizes.
    """

    n: int
    members: frozenset = field(default_factory=frozenset)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members, key=_member_key))


def _member_key(member):
    parts = []
    for el in member:
        if isinstance(el, tuple):  # (profile, size)
            prof, size = el
            parts.append((size, sorted(prof)))
        else:
            parts.append((len(el), sorted(el)))
    return sorted(parts)


# -- computation spaces ------------------------------------------------------

class ExplicitSpace:
    def __init__(self, ground: int):
        self.ground = check_ground(ground)

    def empty(self, shape):
        return Family.empty(self.ground, shape)

    def family(self, shape, points):
        return Family(self.ground, tuple(shape), frozenset(points))

    def _ctx(self, k, l):
        return OperatorContext(self.ground, tuple(k), tuple(l))

    def F(self, X, l):
        return big_F(X, self._ctx(X.shape, l))

    def G(self, X, l):
        return big_G(X, self._ctx(X.shape, l))

    def recover(self, Z, k):
        return recover_from_image(Z, self._ctx(k, Z.shape))

    def code(self, y, l):
        return frozenset(y)

    def parts(self, member):
        return [(len(s), s) for s in member]

    def check_family(self, X):
        if not isinstance(X, Family) or X.ground != self.ground:
            raise ValidationError(f"expected explicit families over {self.ground} atoms")


class ProfileSpace:
    def __init__(self, ground: int, pool: int):
        self.ground = ground
        self.space = OrbitSpace(ground, pool)

    def empty(self, shape):
        return OrbitFamily(self.space, tuple(shape))

    def family(self, shape, points):
        return OrbitFamily(self.space, tuple(shape), frozenset(points))

    def F(self, X, l):
        return orbit_F(X, l)

    def G(self, X, l):
        return orbit_G(X, l)

    def recover(self, Z, k):
        return orbit_recover(Z, k)

    def code(self, y, l):
        return frozenset(zip(y, l))

    def parts(self, member):
        if not all(isinstance(el, tuple) and len(el) == 2 for el in member):
            raise NotAPhiImageError("member is not a set of (profile, size) pairs")
        return [(size, prof) for prof, size in member]

    def check_family(self, X):
        if not isinstance(X, OrbitFamily) or X.space != self.space:
            raise ValidationError(f"expected profile families in {self.space}")


def make_space(ground: int, pool: int | None = None):
    return ExplicitSpace(ground) if pool is None else ProfileSpace(ground, pool)


# -- codec -------------------------------------------------------------------

def check_ground_for(schedule: SizeSchedule, ground: int) -> None:
    required = schedule.required_ground()
    if ground < required:
        raise PreconditionError(
            f"ground set of {ground} atoms is too small for the {schedule.name} schedule "
            f"(n={schedule.n}, K={schedule.K}); at least {required} atoms are required",
            required=required,
        )


def phi_encode(X: MixedFamily, ground: int, schedule: SizeSchedule, pool: int | None = None) -> CodedSet:
    check_ground_for(schedule, ground)
    space = make_space(ground, pool)
    if X.n != schedule.n:
        raise ShapeError(f"family has arity {X.n}, schedule has arity {schedule.n}")
    for shape, fam in X.cells:
        if max(shape) > schedule.K:
            raise ValidationError(f"cell {shape} exceeds the maximum part size K={schedule.K}")
        space.check_family(fam)

    members = set()
    for k, X_k in X.cells:
        t = schedule.t(k)
        current = X_k
        for m in range(sum(k) + 1):
            Y = space.G(current, t)
            s = schedule.s(k, m)
            for y in space.F(Y, s).members:
                members.add(space.code(y, s))
            current = Y - current
    return CodedSet(schedule.n, frozenset(members))


def _split_by_cell(C: CodedSet, schedule: SizeSchedule, space) -> dict:
    Z = {}
    for member in C.members:
        parts = sorted(space.parts(member), key=lambda p: p[0])
        if len(parts) != schedule.n:
            raise NotAPhiImageError(f"member with {len(parts)} elements, expected {schedule.n}")
        decoded = [schedule.decode(size) for size, _ in parts]
        if any(d is None for d in decoded):
            raise NotAPhiImageError(f"member sizes {[p[0] for p in parts]} are not all in the schedule")
        k, m, _ = decoded[0]
        if [d[:2] for d in decoded] != [(k, m)] * schedule.n or [d[2] for d in decoded] != list(
            range(1, schedule.n + 1)
        ):
            raise NotAPhiImageError(f"member sizes {[p[0] for p in parts]} do not name a single cell")
        Z.setdefault((k, m), set()).add(tuple(p[1] for p in parts))
    return Z


def phi_decode(
    C: CodedSet, ground: int, schedule: SizeSchedule, n: int, K: int, pool: int | None = None
) -> MixedFamily:
    if (n, K) != (schedule.n, schedule.K):
        raise ValidationError(f"schedule is for n={schedule.n}, K={schedule.K}; asked for n={n}, K={K}")
    check_ground_for(schedule, ground)
    space = make_space(ground, pool)
    Z = _split_by_cell(C, schedule, space)

    cells = []
    for k in admissible_shapes(n, K):
        if not any((k, m) in Z for m in range(sum(k) + 1)):
            continue
        t = schedule.t(k)
        Ys = []
        for m in range(sum(k) + 1):
            s = schedule.s(k, m)
            Z_km = space.family(s, Z.get((k, m), ()))
            try:
                Y = space.recover(Z_km, k)
            except NotAnFImageError as exc:
                raise NotAPhiImageError(f"cell {k}, stage {m}: {exc}", cell=k) from None
            if space.G(Y, t) != Y:
                raise NotAPhiImageError(f"cell {k}, stage {m}: recovered family is not closed", cell=k)
            Ys.append(Y)
        X_k = Ys[-1]
        for Y in reversed(Ys[:-1]):
            X_k = Y - X_k
        cells.append((k, X_k))

    X = MixedFamily(n, tuple(cells))
    if phi_encode(X, ground, schedule, pool) != C:
        bad = next((k for k, _ in X.cells), None)
        raise NotAPhiImageError("decoded family does not re-encode to the input", cell=bad)
    return X


def range_surjection(y: Sequence) -> frozenset | None:
    """Map a tuple with pairwise distinct parts to its range; None off the domain.

    Restricted to such tuples this is a surjection from (a subset of)
    ``fin(A)^n`` onto ``[fin(A)]^n``.
    """
    r = frozenset(frozenset(p) for p in y)
    return r if len(r) == len(y) else None
