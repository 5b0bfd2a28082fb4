"""Explicit injections and surjections between sequence and subset spaces.

* ``seqi_to_finfin``: an injective sequence goes to the chain of images of its
  initial segments.
* ``pair``/``unpair``/``seqi_split``: a diagonal pairing with ``n <= pair(m, n)``
  and the induced surjection from injective sequences onto naturals x
  injective sequences.
* ``pow_inject``/``pow_inject_inverse``: injections from the powerset of
  ``{0..n-1}`` into atoms, coded as ``n+1`` finite sets of atoms.
"""

from __future__ import annotations

import itertools
import math
from typing import Mapping, Sequence

from .errors import NotInImageError, ValidationError

InjectiveSequence = tuple  # tuple[int, ...], pairwise distinct
PowersetInjection = dict  # dict[frozenset[int], int]
FinTuple = tuple  # tuple[frozenset[int], ...] of length n+1


def check_injective(t: Sequence[int]) -> InjectiveSequence:
    t = tuple(t)
    if len(set(t)) != len(t):
        raise ValidationError(f"sequence {t} repeats an entry")
    return t


def seqi_to_finfin(t: Sequence[int]) -> frozenset:
    t = check_injective(t)
    return frozenset(frozenset(t[:i]) for i in range(len(t) + 1))


def pair(m: int, n: int) -> int:
    s = m + n
    return s * (s + 1) // 2 + n


def unpair(d: int) -> tuple:
    if d < 0:
        raise ValidationError("unpair needs a natural number")
    s = (math.isqrt(8 * d + 1) - 1) // 2
    n = d - s * (s + 1) // 2
    return s - n, n


def seqi_split(t: Sequence[int]) -> tuple:
    """Split by the pairing of the length: ``(m, t[:n])`` where ``(m, n) = unpair(len(t))``."""
    t = check_injective(t)
    m, n = unpair(len(t))
    return m, t[:n]


def seqi_split_preimage(m: int, s: Sequence[int], ground: int) -> InjectiveSequence | None:
    """Least extension of ``s`` of length ``pair(m, len(s))`` using unused atoms, or None."""
    s = check_injective(s)
    length = pair(m, len(s))
    if length > ground:
        return None
    unused = [a for a in range(ground) if a not in s]
    return s + tuple(unused[: length - len(s)])


# -- powerset injections -----------------------------------------------------

def powerset(n: int) -> list:
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]


def check_powerset_injection(t: Mapping, n: int) -> None:
    if set(t) != set(powerset(n)):
        raise ValidationError(f"assignment must be defined on all {2 ** n} subsets of {{0..{n - 1}}}")
    if len(set(t.values())) != len(t):
        raise ValidationError("assignment is not injective")


def pow_inject(t: Mapping, n: int) -> FinTuple:
    check_powerset_injection(t, n)
    coords = [frozenset(t[a] for a in t if k in a) for k in range(n)]
    coords.append(frozenset({t[frozenset()]}))
    return tuple(coords)


def pow_inject_inverse(F: Sequence, n: int) -> PowersetInjection:
    F = tuple(frozenset(c) for c in F)
    if len(F) != n + 1:
        raise NotInImageError(f"expected {n + 1} coordinates, got {len(F)}")
    t = {}
    for a in powerset(n):
        if not a:
            cand = F[n]
        else:
            cand = frozenset.intersection(*(F[k] for k in a))
            for k in range(n):
                if k not in a:
                    cand = cand - F[k]
        if len(cand) != 1:
            raise NotInImageError(f"value at {sorted(a)} is not determined by a singleton")
        (t[a],) = cand
    # the decode rules accept some tuples outside the image; re-encode to reject them
    try:
        back = pow_inject(t, n)
    except ValidationError as exc:
        raise NotInImageError(str(exc)) from None
    if back != F:
        raise NotInImageError("decoded assignment does not re-encode to the input")
    return t
