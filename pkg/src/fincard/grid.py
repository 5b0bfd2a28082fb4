"""Extension, closure and difference operators on families of subset tuples.

For a context ``(A, k, l)`` with ``k_i <= l_i``:

* ``big_F(X)`` is every ``l``-shaped tuple lying above some member of X;
* ``big_G(X)`` is every ``k``-shaped tuple all of whose ``l``-extensions lie
  in ``big_F(X)``;
* ``big_H(X) = big_G(X) - X``.

Iterating ``big_H`` empties any family after at most ``sum(k) + 1`` steps
provided the ground set has at least ``sum(l)`` atoms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import ArityError, NotAnFImageError, ShapeError, ValidationError
from .ground import (
    Family,
    SubsetTuple,
    cell_size,
    cell_tuples,
    check_ground,
    check_shape,
    tuple_join,
    tuple_leq,
    tuple_meet,
)

# above this many l-shaped tuples, big_G tests membership in F(X) per
# extension instead of materialising F(X)
G_MATERIALISE_LIMIT = 200_000


@dataclass(frozen=True)
class OperatorContext:
    ground: int
    k: tuple
    l: tuple
    enforce_bound: bool = True

    def __post_init__(self):
        check_ground(self.ground)
        k, l = check_shape(self.k), check_shape(self.l)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        if len(k) != len(l):
            raise ArityError(f"k has arity {len(k)} but l has arity {len(l)}")
        if any(a > b for a, b in zip(k, l)):
            raise ValidationError(f"need k_i <= l_i, got k={k}, l={l}")
        if self.enforce_bound and self.ground < sum(l):
            raise ValidationError(
                f"ground set of {self.ground} atoms is below the faithfulness bound sum(l) = {sum(l)}"
            )

    @property
    def n(self) -> int:
        return len(self.k)

    def with_l(self, l: Sequence[int]) -> "OperatorContext":
        return OperatorContext(self.ground, self.k, tuple(l), self.enforce_bound)


@lru_cache(maxsize=100_000)
def _part_extensions(ground: int, part: frozenset, size: int) -> tuple:
    rest = [a for a in range(ground) if a not in part]
    return tuple(part | frozenset(c) for c in itertools.combinations(rest, size - len(part)))


def extensions(x: SubsetTuple, ground: int, l: Sequence[int]) -> list:
    """All ``l``-shaped tuples ``y`` with ``x`` below ``y``."""
    return list(itertools.product(*(_part_extensions(ground, p, s) for p, s in zip(x, l))))


def _check_family(X: Family, ctx: OperatorContext, shape=None) -> None:
    shape = ctx.k if shape is None else shape
    if X.shape != shape or X.ground != ctx.ground:
        raise ShapeError(f"family of shape {X.shape} over {X.ground} atoms; expected {shape} over {ctx.ground}")


def big_F(X: Family, ctx: OperatorContext) -> Family:
    _check_family(X, ctx)
    out = set()
    for x in X.members:
        out.update(extensions(x, ctx.ground, ctx.l))
    return Family(ctx.ground, ctx.l, frozenset(out))


def _above_some(y: SubsetTuple, X: Family) -> bool:
    return any(all(a <= b for a, b in zip(x, y)) for x in X.members)


def big_G(X: Family, ctx: OperatorContext) -> Family:
    _check_family(X, ctx)
    if cell_size(ctx.ground, ctx.l) <= G_MATERIALISE_LIMIT:
        image = big_F(X, ctx).members

        def covered(y):
            return y in image
    else:
        def covered(y):
            return _above_some(y, X)

    out = [
        x
        for x in cell_tuples(ctx.ground, ctx.k)
        if x in X.members or all(covered(y) for y in extensions(x, ctx.ground, ctx.l))
    ]
    return Family(ctx.ground, ctx.k, frozenset(out))


def big_H(X: Family, ctx: OperatorContext) -> Family:
    return big_G(X, ctx) - X


def iterate_H(X: Family, ctx: OperatorContext, m: int) -> Family:
    for _ in range(m):
        if not X:
            break
        X = big_H(X, ctx)
    return X


@dataclass(frozen=True)
class DescentTrace:
    families: tuple
    empty_at: int | None
    bound: int

    @property
    def counterexample(self) -> bool:
        return self.empty_at is None or self.empty_at > self.bound


def nilpotency_check(X: Family, ctx: OperatorContext) -> DescentTrace:
    """Iterate H from X until the family is empty, at most ``sum(k) + 2`` times.

    The trace lists ``H^0(X), H^1(X), ...`` up to and including the first
    empty family; ``empty_at`` is None when the iteration did not empty
    within the cap, which flags a counterexample.
    """
    _check_family(X, ctx)
    bound = sum(ctx.k) + 1
    fams = [X]
    while fams[-1] and len(fams) <= bound + 1:
        fams.append(big_H(fams[-1], ctx))
    empty_at = len(fams) - 1 if not fams[-1] else None
    return DescentTrace(tuple(fams), empty_at, bound)


def recover_from_image(Z: Family, ctx: OperatorContext) -> Family:
    """Return the G-fixed family whose F-image is Z; raise if Z is not an F-image."""
    _check_family(Z, ctx, ctx.l)
    Y = Family(
        ctx.ground,
        ctx.k,
        frozenset(
            x
            for x in cell_tuples(ctx.ground, ctx.k)
            if all(y in Z.members for y in extensions(x, ctx.ground, ctx.l))
        ),
    )
    if big_F(Y, ctx) != Z:
        raise NotAnFImageError(f"{len(Z)} tuples of shape {ctx.l} are not the F-image of any family")
    return Y


def phi_formula_holds(X: Family, x: SubsetTuple, y: SubsetTuple, ctx: OperatorContext) -> bool:
    """Does ``x`` join every suitably sized choice from ``y`` into a member of X?"""
    _check_family(X, ctx)
    if len(x) != ctx.n or len(y) != ctx.n:
        raise ArityError(f"expected {ctx.n}-tuples")
    x = tuple(frozenset(p) for p in x)
    y = tuple(frozenset(p) for p in y)
    if any(len(p) > k for p, k in zip(x, ctx.k)):
        return False
    if any(tuple_meet(x, y)):
        return False
    choices = [itertools.combinations(sorted(yi), k - len(xi)) for xi, yi, k in zip(x, y, ctx.k)]
    return all(
        tuple_join(x, tuple(frozenset(c) for c in z)) in X.members for z in itertools.product(*choices)
    )


__all__ = [
    "OperatorContext",
    "DescentTrace",
    "big_F",
    "big_G",
    "big_H",
    "iterate_H",
    "nilpotency_check",
    "recover_from_image",
    "phi_formula_holds",
    "extensions",
    "tuple_leq",
]
