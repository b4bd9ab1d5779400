"""Admissible transpositions of markings and the groups they generate.

A transposition i <-> j is admissible for a weight datum when, for every
set H of at least two other markings, adding a_i to the weights of H stays
within the coincidence bound 1 exactly when adding a_j does.  Admissible
transpositions generate a product of symmetric groups on the connected
components of the admissibility graph; an exhaustive oracle provides an
independent check against the size->=3 coincidence signature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

from .errors import MarkIndexError, OracleTooLargeError, ShapeMismatchError
from .weights import ONE, WeightData, signature

ORACLE_MAX_N = 8


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} in one-line notation: image[k-1] = sigma(k)."""

    image: tuple[int, ...]

    def __post_init__(self):
        img = tuple(self.image)
        object.__setattr__(self, "image", img)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise MarkIndexError(f"{img!r} is not a permutation of 1..{len(img)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        if i == j or not 1 <= i <= n or not 1 <= j <= n:
            raise MarkIndexError(f"({i}, {j}) is not a transposition of 1..{n}")
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        img = list(range(1, n + 1))
        for cycle in cycles:
            cyc = list(cycle)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 1 <= a <= n:
                    raise MarkIndexError(f"cycle entry {a} is not in 1..{n}")
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise MarkIndexError(f"index {i} is not in 1..{self.n}")
        return self.image[i - 1]

    def apply(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.image[i - 1] for i in subset)

    def after(self, other: "Permutation") -> "Permutation":
        """Composition self o other: apply ``other`` first."""
        if self.n != other.n:
            raise ShapeMismatchError("cannot compose permutations of different degree")
        return Permutation(tuple(self.image[other.image[k] - 1] for k in range(self.n)))

    def inverse(self) -> "Permutation":
        img = [0] * self.n
        for k, v in enumerate(self.image, 1):
            img[v - 1] = k
        return Permutation(tuple(img))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self.image[start - 1]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self.image[k - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def is_admissible(data: WeightData, i: int, j: int) -> bool:
    """Is the transposition of markings i and j admissible?

    True iff for every H with |H| >= 2 disjoint from {i, j}:
    a_i + sum(H) <= 1  <=>  a_j + sum(H) <= 1.  Vacuously true when fewer
    than two other markings exist.
    """
    data.check_index(i)
    data.check_index(j)
    if i == j:
        raise MarkIndexError("a transposition needs two distinct indices")
    ai, aj = data.weights[i - 1], data.weights[j - 1]
    if ai == aj:
        return True
    lo, hi = min(ai, aj), max(ai, aj)
    others = [data.weights[k - 1] for k in range(1, data.n + 1) if k not in (i, j)]
    for size in range(2, len(others) + 1):
        reachable = False
        for sub in combinations(others, size):
            total = sum(sub)
            if lo + total <= ONE:
                reachable = True
                if hi + total > ONE:
                    return False
        if not reachable:
            # every larger subset has a strictly larger sum
            break
    return True


def admissible_transpositions(data: WeightData) -> tuple[tuple[int, int], ...]:
    """All admissible pairs (i, j) with i < j."""
    return tuple(
        (i, j)
        for i, j in combinations(range(1, data.n + 1), 2)
        if is_admissible(data, i, j)
    )


def _components(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    blocks: dict[int, list[int]] = {}
    for k in range(1, n + 1):
        blocks.setdefault(find(k), []).append(k)
    return tuple(tuple(b) for _, b in sorted(blocks.items()))


def admissibility_partition(data: WeightData) -> tuple[tuple[int, ...], ...]:
    """Connected components of the graph with an edge for each admissible
    transposition."""
    return _components(data.n, admissible_transpositions(data))


@dataclass(frozen=True)
class PermGroup:
    """The group generated by a set of transpositions.

    Such a group is the product of full symmetric groups on the connected
    components of its transposition graph, so the order is the product of
    the factorials of the component sizes and membership amounts to
    preserving every component setwise.
    """

    n: int
    generators: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    order: int

    @classmethod
    def from_transpositions(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PermGroup":
        gens = tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))
        for i, j in gens:
            if i == j or not 1 <= i <= n or not 1 <= j <= n:
                raise MarkIndexError(f"({i}, {j}) is not a transposition of 1..{n}")
        comps = _components(n, gens)
        order = math.prod(math.factorial(len(c)) for c in comps)
        return cls(n, gens, comps, order)

    def contains(self, sigma: Permutation) -> bool:
        if sigma.n != self.n:
            raise ShapeMismatchError(
                f"permutation degree {sigma.n} does not match group degree {self.n}"
            )
        return all(sigma.apply(c) == frozenset(c) for c in self.components)


def admissible_group(data: WeightData) -> PermGroup:
    """The group generated by all admissible transpositions of ``data``."""
    return PermGroup.from_transpositions(data.n, admissible_transpositions(data))


def membership(group: PermGroup, sigma: Permutation) -> bool:
    """Does sigma preserve every component of the group setwise?"""
    return group.contains(sigma)


@dataclass(frozen=True)
class ExplicitPermSet:
    """An exhaustively enumerated set of permutations."""

    n: int
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, sigma: Permutation) -> bool:
        if sigma.n != self.n:
            raise ShapeMismatchError(
                f"permutation degree {sigma.n} does not match set degree {self.n}"
            )
        return sigma in self.elements


def _mask(subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def _apply_mask(image: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << (image[low.bit_length() - 1] - 1)
        mask ^= low
    return out


def signature_preserving_group(data: WeightData) -> ExplicitPermSet:
    """Brute-force oracle: all permutations preserving the size->=3 signature.

    Exhaustive over n! permutations; refuses n > 8 rather than sampling.
    Contains the admissible group by construction of the signature, and any
    strict excess is a finding worth logging, not an error.
    """
    n = data.n
    if n > ORACLE_MAX_N:
        raise OracleTooLargeError(
            f"exhaustive search over {n}! permutations refused (max n = {ORACLE_MAX_N})"
        )
    sig_masks = frozenset(_mask(s) for s in signature(data, 3).subsets)
    elements = []
    for img in permutations(range(1, n + 1)):
        if all(_apply_mask(img, m) in sig_masks for m in sig_masks):
            elements.append(Permutation(img))
    return ExplicitPermSet(n, tuple(elements))


def generated_elements(n: int, pairs: Iterable[tuple[int, int]]) -> frozenset[Permutation]:
    """Close the identity under the given transpositions, breadth first.

    Independent of the component bookkeeping in PermGroup; used to
    cross-check the factorial order law by explicit enumeration.
    """
    gens = [Permutation.transposition(n, i, j) for i, j in pairs]
    seen = {Permutation.identity(n)}
    frontier = list(seen)
    while frontier:
        new = []
        for p in frontier:
            for t in gens:
                q = t.after(p)
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        frontier = new
    return frozenset(seen)
