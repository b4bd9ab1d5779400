"""Morphism existence, boundary strata, and automorphism descriptors.

Covers the moduli spaces of weighted pointed stable curves of positive
genus (and the weight bookkeeping shared with genus zero): which forgetful
and reduction morphisms are defined, which boundary and collision strata a
weight datum carries, and the structured automorphism-group answers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (
    MarkIndexError,
    NotCoveredError,
    NotReductionError,
    ShapeMismatchError,
)
from .perms import admissibility_partition
from .weights import ONE, WeightData, signature


def forgetful_exists(data: WeightData, keep: Iterable[int]) -> bool:
    """Is the forgetful morphism keeping exactly these markings defined?

    True iff 2g - 2 + sum of the kept weights is positive.
    """
    kept = frozenset(keep)
    if not kept:
        raise MarkIndexError("keep must be nonempty")
    return 2 * data.genus - 2 + data.sum_of(kept) > 0


def reduction_exists(a: WeightData, b: WeightData) -> bool:
    """Is there a reduction morphism from the a-space to the b-space?

    Requires the same genus and length; true iff a_i >= b_i for all i.
    """
    if a.genus != b.genus or a.n != b.n:
        raise ShapeMismatchError(
            f"cannot reduce (g={a.genus}, n={a.n}) to (g={b.genus}, n={b.n})"
        )
    return all(x >= y for x, y in zip(a.weights, b.weights))


def contracted_divisors(a: WeightData, b: WeightData) -> tuple[tuple[int, ...], ...]:
    """Index sets of the rational tails contracted by the reduction a -> b.

    These are the I with |I| >= 3 whose weights sum to more than 1 for a
    (a genus-zero tail carrying I is a divisor) but at most 1 for b (the
    tail loses ampleness and collapses).
    """
    if not reduction_exists(a, b):
        raise NotReductionError("the weights of the source do not dominate the target")
    out = []
    indices = range(1, a.n + 1)
    for size in range(3, a.n + 1):
        hits = [s for s in combinations(indices, size) if b.sum_of(s) <= ONE]
        if not hits:
            break
        out.extend(s for s in hits if a.sum_of(s) > ONE)
    return tuple(sorted(out))


@dataclass(frozen=True)
class BoundaryDivisor:
    """A boundary stratum label.

    kind "irr" is the irreducible-nodal locus; kind "nodal" is a one-node
    splitting into a genus-h side carrying the markings ``part`` and a
    genus g-h side carrying the rest; kind "collision" is the stratum where
    the markings in ``part`` coincide (a divisor exactly when |part| = 2,
    codimension |part| - 1 in general).
    """

    kind: str
    h: int | None = None
    part: tuple[int, ...] = ()

    @classmethod
    def irreducible(cls) -> "BoundaryDivisor":
        return cls("irr")

    @classmethod
    def nodal(cls, g: int, n: int, h: int, part: Iterable[int]) -> "BoundaryDivisor":
        """Canonical form: h <= g - h, and when the two genera agree the
        side containing marking 1 is recorded."""
        p = frozenset(part)
        if h > g - h or (h == g - h and 1 not in p):
            p = frozenset(range(1, n + 1)) - p
            h = g - h
        return cls("nodal", h, tuple(sorted(p)))

    @classmethod
    def collision(cls, part: Iterable[int]) -> "BoundaryDivisor":
        return cls("collision", None, tuple(sorted(frozenset(part))))

    def to_dict(self) -> dict:
        if self.kind == "irr":
            return {"kind": "irr"}
        if self.kind == "nodal":
            return {"kind": "nodal", "h": self.h, "P": list(self.part)}
        return {"kind": "collision", "S": list(self.part)}


def _side_stable(data: WeightData, h: int, marks: tuple[int, ...]) -> bool:
    # a side carries its markings plus the node; only genus-zero sides can
    # fail stability, needing at least two markings of total weight > 1
    if h > 0:
        return True
    return len(marks) >= 2 and data.sum_of(marks) > ONE


def boundary_divisors(data: WeightData) -> tuple[BoundaryDivisor, ...]:
    """All boundary strata of the weight datum, canonically ordered.

    The irreducible-nodal locus appears iff g >= 1; nodal splittings are
    listed in canonical form with both sides stable; collision strata are
    the full size->=2 coincidence signature.
    """
    g, n = data.genus, data.n
    out: list[BoundaryDivisor] = []
    if g >= 1:
        out.append(BoundaryDivisor.irreducible())
    nodal = []
    everything = range(1, n + 1)
    for h in range(0, g // 2 + 1):
        for size in range(0, n + 1):
            for p in combinations(everything, size):
                if 2 * h == g and 1 not in p:
                    continue
                complement = tuple(k for k in everything if k not in set(p))
                if _side_stable(data, h, p) and _side_stable(data, g - h, complement):
                    nodal.append(BoundaryDivisor("nodal", h, p))
    nodal.sort(key=lambda d: (d.h, d.part))
    out.extend(nodal)
    out.extend(BoundaryDivisor.collision(s) for s in signature(data, 2).ordered())
    return tuple(out)


@dataclass(frozen=True)
class GroupDescriptor:
    """Structured automorphism-group answer.

    A torus rank, a multiset of symmetric-group factor degrees, and an
    optional projective-linear special factor ("PGL2", "PGL3", ...).  The
    finite part order is defined only when no special factor is present.
    ``flagged`` marks answers recorded from classical facts outside the
    tower case split (the bare projective-space step).
    """

    torus_rank: int = 0
    symmetric_factors: tuple[int, ...] = ()
    special: str | None = None
    components_witness: tuple[tuple[int, ...], ...] | None = None
    flagged: bool = False

    def __post_init__(self):
        object.__setattr__(self, "symmetric_factors", tuple(sorted(self.symmetric_factors)))

    @property
    def finite_part_order(self) -> int | None:
        if self.special is not None:
            return None
        return math.prod(math.factorial(d) for d in self.symmetric_factors)

    @property
    def is_trivial(self) -> bool:
        return self.torus_rank == 0 and not self.symmetric_factors and self.special is None

    def same_group(self, other: "GroupDescriptor") -> bool:
        """Equality of the described group, ignoring witness and flag."""
        return (
            self.torus_rank == other.torus_rank
            and self.symmetric_factors == other.symmetric_factors
            and self.special == other.special
        )

    def to_dict(self) -> dict:
        order = self.finite_part_order
        d = {
            "torus_rank": self.torus_rank,
            "symmetric_factors": list(self.symmetric_factors),
            "special": self.special,
            "finite_order": None if order is None else str(order),
        }
        if self.components_witness is not None:
            d["components"] = [list(c) for c in self.components_witness]
        if self.flagged:
            d["flagged"] = True
        return d


def _aut_descriptor(data: WeightData, stack: bool) -> GroupDescriptor:
    g, n = data.genus, data.n
    if g == 0:
        raise NotCoveredError(
            "no general genus-zero descriptor: use the Kapranov tower operations "
            "for the A_{r,s}[n] weight family"
        )
    if 2 * g - 2 + n >= 3:
        parts = admissibility_partition(data)
        return GroupDescriptor(
            0, tuple(len(c) for c in parts), components_witness=parts
        )
    if g == 1 and n == 1:
        return GroupDescriptor(torus_rank=1) if stack else GroupDescriptor(special="PGL2")
    if g == 1 and n == 2:
        return GroupDescriptor() if stack else GroupDescriptor(torus_rank=2)
    raise NotCoveredError(f"no automorphism descriptor for g={g}, n={n}")


def aut_descriptor_coarse(data: WeightData) -> GroupDescriptor:
    """Automorphism group of the coarse space, g >= 1.

    For 2g - 2 + n >= 3 this is the group of admissible permutations; the
    two small genus-one cases are PGL(2) (n = 1) and a rank-2 torus (n = 2).
    """
    return _aut_descriptor(data, stack=False)


def aut_descriptor_stack(data: WeightData) -> GroupDescriptor:
    """Automorphism group of the moduli stack, g >= 1.

    Agrees with the coarse answer for 2g - 2 + n >= 3; the genus-one
    exceptions shrink to a rank-1 torus (n = 1) and the trivial group
    (n = 2).
    """
    return _aut_descriptor(data, stack=True)
