"""Monochromatic sub-grids of coloured products of subset grids.

A grid is ``[S_1]^{j_1} x ... x [S_n]^{j_n}``; a witness for ``r`` is a choice
of ``T_i`` in ``[S_i]^r`` whose sub-grid ``[T_1]^{j_1} x ... x [T_n]^{j_n}``
is monochromatic.  ``ramsey_exact`` finds the least common size of the
``S_i`` forcing a witness for every colouring, by exhaustive search at tiny
parameters.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ParameterError, SearchSpaceError, ValidationError

DEFAULT_MAX_COLORINGS = 10**8


def grid_points(S: Sequence[Sequence[int]], j: Sequence[int]) -> list:
    """Grid points in lexicographic order; each point is a tuple of sorted tuples."""
    return list(itertools.product(*(itertools.combinations(sorted(s), ji) for s, ji in zip(S, j))))


@dataclass(frozen=True)
class GridColoring:
    S: tuple
    j: tuple
    c: int
    color: Mapping

    def __post_init__(self):
        S = tuple(tuple(sorted(s)) for s in self.S)
        j = tuple(self.j)
        if len(S) != len(j) or not S:
            raise ValidationError("S and j must have the same positive length")
        if self.c < 1:
            raise ValidationError("need at least one colour")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "j", j)
        color = dict(self.color)
        points = grid_points(S, j)
        if set(color) != set(points):
            raise ValidationError("colouring must assign exactly the grid points")
        if any(not 1 <= v <= self.c for v in color.values()):
            raise ValidationError(f"colours must lie in 1..{self.c}")
        object.__setattr__(self, "color", color)

    @property
    def n(self) -> int:
        return len(self.S)

    @classmethod
    def from_sequence(cls, S, j, c, colors: Sequence[int]) -> "GridColoring":
        points = grid_points(S, j)
        if len(colors) != len(points):
            raise ValidationError(f"expected {len(points)} colours, got {len(colors)}")
        return cls(S, j, c, dict(zip(points, colors)))

    @classmethod
    def from_cover(cls, S, j, cover: Sequence[Iterable]) -> "GridColoring":
        """Normalise a cover ``Y_1, ..., Y_c`` to the colouring by least containing index."""
        cover = [set(Y) for Y in cover]
        color = {}
        for p in grid_points(S, j):
            idx = next((d for d, Y in enumerate(cover, 1) if p in Y), None)
            if idx is None:
                raise ValidationError(f"grid point {p} is not covered")
            color[p] = idx
        return cls(S, j, len(cover), color)


def _check_r(j: Sequence[int], r: int) -> None:
    if any(r < ji for ji in j):
        raise ParameterError(f"r={r} is smaller than some j_i in {tuple(j)}; the sub-grid would be empty")


def subgrid_color(col: GridColoring, T: Sequence[Sequence[int]]) -> int | None:
    """The common colour of the sub-grid over T, or None when it is not monochromatic."""
    colors = {col.color[p] for p in grid_points(T, col.j)}
    return colors.pop() if len(colors) == 1 else None


def find_monochromatic_grid(col: GridColoring, r: int):
    """Lexicographically least ``(T, d)`` with a monochromatic sub-grid, or None."""
    _check_r(col.j, r)
    for T in itertools.product(*(itertools.combinations(s, r) for s in col.S)):
        d = subgrid_color(col, T)
        if d is not None:
            return T, d
    return None


# -- exact values ------------------------------------------------------------

@dataclass(frozen=True)
class Unknown:
    """Search exhausted its limit; ``largest_insufficient`` sizes still admit escapes."""

    largest_insufficient: int

    @property
    def lower_bound(self) -> int:
        return self.largest_insufficient + 1


def _blocks(N: int, j: Sequence[int], r: int):
    points = grid_points([range(N)] * len(j), j)
    index = {p: i for i, p in enumerate(points)}
    blocks = [
        tuple(index[p] for p in grid_points(T, j))
        for T in itertools.product(*(itertools.combinations(range(N), r) for _ in j))
    ]
    return points, blocks


def coloring_cost(N: int, j: Sequence[int], c: int) -> int:
    points = math.prod(math.comb(N, ji) for ji in j)
    return c**points


def find_escape(N: int, j: Sequence[int], c: int, r: int):
    """A colouring of the grid over ``range(N)`` with no monochromatic r-witness, or None.

    Backtracking assigns colours in grid order and rejects a partial
    colouring as soon as some sub-grid is completed in one colour.  Colours
    are interchangeable, so a new colour is only opened after all smaller
    ones are in use.
    """
    _check_r(j, r)
    points, blocks = _blocks(N, j, r)
    if not blocks:
        return [1] * len(points)
    closing = [[] for _ in points]
    for b in blocks:
        closing[max(b)].append(b)
    colors = [0] * len(points)

    def extend(pos: int, used: int):
        if pos == len(points):
            return True
        for v in range(1, min(used + 1, c) + 1):
            colors[pos] = v
            if all(any(colors[q] != v for q in b) for b in closing[pos]):
                if extend(pos + 1, max(used, v)):
                    return True
        colors[pos] = 0
        return False

    return list(colors) if extend(0, 0) else None


def count_escapes_bruteforce(N: int, j: Sequence[int], c: int, r: int) -> int:
    """Number of colourings with no witness, by plain enumeration of all ``c^points``."""
    _check_r(j, r)
    points, blocks = _blocks(N, j, r)
    count = 0
    for colors in itertools.product(range(1, c + 1), repeat=len(points)):
        if all(len({colors[q] for q in b}) > 1 for b in blocks):
            count += 1
    return count


def ramsey_exact(j: Sequence[int], c: int, r: int, search_limit: int, max_colorings: int = DEFAULT_MAX_COLORINGS):
    """Least N such that every c-colouring of the j-grid over N-sets has an r-witness.

    Returns an int, or :class:`Unknown` when no N up to ``search_limit`` works.
    Raises :class:`SearchSpaceError` before attempting a size whose colouring
    space (modulo colour relabelling) exceeds ``max_colorings``.
    """
    j = tuple(j)
    if c < 1:
        raise ParameterError("need at least one colour")
    _check_r(j, r)
    for N in range(0, search_limit + 1):
        if N < r:
            continue
        cost = coloring_cost(N, j, c) // math.factorial(c)
        if cost > max_colorings:
            raise SearchSpaceError(
                f"refusing N={N}: about {cost} colourings exceed the limit {max_colorings}", attempted=N
            )
        if find_escape(N, j, c, r) is None:
            return N
    return Unknown(search_limit)
