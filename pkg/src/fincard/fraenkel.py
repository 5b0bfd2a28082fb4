"""Finite kernels of the permutation-model arguments.

Permutations of atoms act structurally on hereditarily finite values: ints
are atoms, frozensets/sets map elementwise, tuples componentwise.  On top of
that action this module provides parity orbits of injective tuples, the
equivalence ``a ~_t b`` (same membership pattern across the parts of t), the
induced preorder on tuples, the chain/counting bounds, and a support check for
explicitly tabulated functions.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import DomainError, NoPairError, StructuralError, ValidationError


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    def __mul__(self, other: "Parity") -> "Parity":
        return Parity(self.value ^ other.value)


@dataclass(frozen=True)
class PermutationOfAtoms:
    """A permutation moving finitely many atoms; ``pairs`` lists ``a -> π(a)`` for moved atoms."""

    pairs: frozenset

    def __post_init__(self):
        mapping = dict(self.pairs)
        if len(mapping) != len(self.pairs):
            raise ValidationError("an atom is mapped twice")
        if set(mapping) != set(mapping.values()):
            raise ValidationError("mapping is not a permutation of its support")
        object.__setattr__(self, "pairs", frozenset((a, b) for a, b in mapping.items() if a != b))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "PermutationOfAtoms":
        return cls(frozenset(mapping.items()))

    @classmethod
    def identity(cls) -> "PermutationOfAtoms":
        return cls(frozenset())

    @classmethod
    def transposition(cls, a: int, b: int) -> "PermutationOfAtoms":
        return cls(frozenset({(a, b), (b, a)}))

    @classmethod
    def from_cycles(cls, *cycles: Sequence[int]) -> "PermutationOfAtoms":
        mapping = {}
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in mapping:
                    raise ValidationError("cycles are not disjoint")
                mapping[a] = b
        return cls.from_mapping(mapping)

    @property
    def support(self) -> frozenset:
        return frozenset(a for a, _ in self.pairs)

    def __call__(self, a: int) -> int:
        return dict(self.pairs).get(a, a)

    def compose(self, other: "PermutationOfAtoms") -> "PermutationOfAtoms":
        """``self ∘ other``: apply other first."""
        atoms = self.support | other.support
        return PermutationOfAtoms.from_mapping({a: self(other(a)) for a in atoms})

    def inverse(self) -> "PermutationOfAtoms":
        return PermutationOfAtoms(frozenset((b, a) for a, b in self.pairs))

    def cycles(self) -> list:
        mapping = dict(self.pairs)
        seen, out = set(), []
        for start in sorted(mapping):
            if start in seen:
                continue
            cyc, a = [], start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = mapping[a]
            out.append(tuple(cyc))
        return out

    def act(self, value):
        return act(self, value)


def act(pi: PermutationOfAtoms, value):
    """Structural action of a permutation on atoms, sets and tuples."""
    if isinstance(value, bool) or not isinstance(value, (int, frozenset, set, tuple)):
        raise StructuralError(f"no permutation action defined on {type(value).__name__} value {value!r}")
    if isinstance(value, int):
        return pi(value)
    if isinstance(value, tuple):
        return tuple(act(pi, v) for v in value)
    return frozenset(act(pi, v) for v in value)


def parity(pi: PermutationOfAtoms, C: Iterable[int]) -> Parity:
    """Parity of a permutation that moves only atoms of C."""
    C = frozenset(C)
    if not pi.support <= C:
        raise DomainError(f"permutation moves {sorted(pi.support - C)} outside C")
    transpositions = sum(len(c) - 1 for c in pi.cycles())
    return Parity(transpositions % 2)


def permutations_of(C: Iterable[int]) -> Iterable[PermutationOfAtoms]:
    C = sorted(C)
    for image in itertools.permutations(C):
        yield PermutationOfAtoms.from_mapping(dict(zip(C, image)))


@dataclass(frozen=True)
class ParityOrbitPair:
    E: frozenset
    O: frozenset

    @property
    def is_partition(self) -> bool:
        return not (self.E & self.O)


def parity_orbits(u: Sequence[int], C: Iterable[int]) -> ParityOrbitPair:
    """Images of u under even and under odd permutations of C.

    E and O partition the injective |u|-tuples over C exactly when
    ``|u| >= |C| - 1``; for shorter tuples some transposition fixes u and the
    two orbits coincide.
    """
    C = frozenset(C)
    u = tuple(u)
    if not u:
        raise ValidationError("parity orbits need a tuple of length at least 1")
    if len(set(u)) != len(u):
        raise ValidationError(f"tuple {u} is not injective")
    if not set(u) <= C:
        raise ValidationError(f"tuple {u} has entries outside C")
    E, O = set(), set()
    for pi in permutations_of(C):
        (E if parity(pi, C) is Parity.EVEN else O).add(act(pi, u))
    return ParityOrbitPair(frozenset(E), frozenset(O))


# -- the equivalence ~_t and its preorder ------------------------------------

def signature(a: int, t: Sequence[Iterable[int]]) -> tuple:
    return tuple(a in part for part in t)


def classes(t: Sequence[Iterable[int]], pool: Iterable[int]) -> list:
    """The ~_t classes on the pool, each a sorted tuple, in order of least element."""
    t = [frozenset(p) for p in t]
    groups = {}
    for a in sorted(pool):
        groups.setdefault(signature(a, t), []).append(a)
    return sorted(tuple(g) for g in groups.values())


def partition_key(t: Sequence[Iterable[int]], pool: Iterable[int]) -> frozenset:
    return frozenset(frozenset(c) for c in classes(t, pool))


def equivalent(a: int, b: int, t: Sequence[Iterable[int]]) -> bool:
    t = [frozenset(p) for p in t]
    return signature(a, t) == signature(b, t)


def pigeonhole_pair(t: Sequence[Iterable[int]], C: Iterable[int]) -> tuple:
    """Least pair ``a < b`` in C with ``a ~_t b``."""
    C = sorted(C)
    pairs = [(c[0], c[1]) for c in classes(t, C) if len(c) >= 2]
    if not pairs:
        raise NoPairError(f"all ~_t classes on {C} are singletons")
    return min(pairs)


def fixes(pi: PermutationOfAtoms, value) -> bool:
    return act(pi, value) == value


def class_count(t: Sequence[Iterable[int]], pool: Iterable[int]) -> int:
    return len(classes(t, pool))


def preorder_leq(t: Sequence[Iterable[int]], u: Sequence[Iterable[int]], pool: Iterable[int]) -> bool:
    """``t ⊑ u``: every pair of pool atoms related by ~_u is related by ~_t."""
    t = [frozenset(p) for p in t]
    u = [frozenset(p) for p in u]
    seen = {}
    for a in pool:
        key = signature(a, u)
        sig_t = signature(a, t)
        if seen.setdefault(key, sig_t) != sig_t:
            return False
    return True


def chain_length_bound(B_size: int, n: int) -> int:
    return 2 ** ((B_size + 2**n + 1) * n) + 1


def counting_bound(B_size: int, n: int) -> int:
    return 2 ** ((B_size + 2**n) * n)


def all_tuples(ground: int, n: int) -> list:
    """Every n-tuple of subsets of ``range(ground)``."""
    subsets = [frozenset(c) for r in range(ground + 1) for c in itertools.combinations(range(ground), r)]
    return list(itertools.product(subsets, repeat=n))


def same_partition_count(u, ground: int, B: Iterable[int]) -> int:
    """``|{t : ~_t = ~_u}|`` over all tuples of subsets of the ground set."""
    B = frozenset(B)
    pool = [a for a in range(ground) if a not in B]
    key = partition_key(u, pool)
    return sum(1 for t in all_tuples(ground, len(u)) if partition_key(t, pool) == key)


def longest_chains(ground: int, n: int, B: Iterable[int] = ()) -> tuple:
    """Longest chains in the preorder over all n-tuples of subsets of the ground set.

    Returns ``(without_repetition, strict)``: the longest sequence of distinct
    tuples each below the next, and the longest sequence each strictly below
    the next.  Tuples with the same partition are mutually below each other,
    so the first counts whole partition classes along a refinement chain.
    """
    B = frozenset(B)
    pool = [a for a in range(ground) if a not in B]
    sizes = {}
    for t in all_tuples(ground, n):
        key = partition_key(t, pool)
        sizes[key] = sizes.get(key, 0) + 1
    parts = sorted(sizes, key=len)  # coarser partitions (fewer classes) first

    def refines(fine, coarse):
        # every block of the finer partition sits inside a block of the coarser one
        return all(any(b <= c for c in coarse) for b in fine)

    best_weight, best_len = {}, {}
    for p in parts:
        below = [q for q in parts if len(q) < len(p) and refines(p, q)]
        best_weight[p] = sizes[p] + max((best_weight[q] for q in below), default=0)
        best_len[p] = 1 + max((best_len[q] for q in below), default=0)
    return max(best_weight.values()), max(best_len.values())


# -- support -----------------------------------------------------------------

def support_check(f: Mapping[Hashable, Hashable], B: Iterable[int], ground: int) -> bool:
    """Is f fixed by every permutation of the ground set fixing B pointwise?

    Checks the transpositions of atoms outside B, which generate that group.
    """
    B = frozenset(B)
    free = [a for a in range(ground) if a not in B]
    for a, b in itertools.combinations(free, 2):
        tau = PermutationOfAtoms.transposition(a, b)
        for x, y in f.items():
            tx = act(tau, x)
            if tx not in f:
                raise StructuralError(f"domain is not closed under ({a} {b}): {tx!r} missing")
            if f[tx] != act(tau, y):
                return False
    return True
