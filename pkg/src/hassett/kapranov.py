"""The iterated blow-up schedule realizing genus-zero weighted moduli.

Fix n - 1 points in linear general position in P^{n-3}.  Blowing up the
linear spans of prescribed point subsets, in order of increasing dimension,
produces a chain of spaces starting at projective space and ending at the
moduli space of stable n-pointed rational curves.  The space reached at
sub-step (r, s) carries the Hassett weights A_{r,s}[n], and each blow-up of
a linear center raises the Picard rank by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, StepRangeError
from .moduli import GroupDescriptor
from .weights import WeightData


@dataclass(frozen=True)
class TowerStep:
    """Sub-step (r, s) of the schedule for n markings.

    Valid ranges: n >= 5, 1 <= r <= n-3, 1 <= s <= n-r-2.  Step (1, 1) is
    the bare projective space and (n-3, 1) is the final moduli space.
    """

    n: int
    r: int
    s: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 5:
            raise StepRangeError(f"the tower needs n >= 5, got n={self.n!r}")
        if not 1 <= self.r <= self.n - 3:
            raise StepRangeError(f"step r={self.r} is not in 1..{self.n - 3} for n={self.n}")
        if not 1 <= self.s <= self.n - self.r - 2:
            raise StepRangeError(
                f"sub-step s={self.s} is not in 1..{self.n - self.r - 2} for (n, r)=({self.n}, {self.r})"
            )


@dataclass(frozen=True)
class BlowupCenter:
    """Linear span of some of the fixed points, named by their indices."""

    points: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.points) - 1


def kapranov_weights(n: int, r: int, s: int) -> WeightData:
    """Hassett weights A_{r,s}[n] of the space reached at sub-step (r, s):
    n-r-1 light weights 1/(n-r-1), one middle weight s/(n-r-1), and r full
    weights 1."""
    TowerStep(n, r, s)
    light = Fraction(1, n - r - 1)
    ws = (light,) * (n - r - 1) + (Fraction(s, n - r - 1),) + (Fraction(1),) * r
    return WeightData(0, ws)


def kapranov_centers(n: int, r: int, s: int) -> tuple[BlowupCenter, ...]:
    """Centers blown up at sub-step (r, s), lexicographically ordered.

    Each center is the span of s + r - 2 points containing
    p_{n-r+1},...,p_{n-1}, avoiding p_{n-r}, and otherwise drawn from
    p_1..p_{n-r-1}.  The seed step (1, 1) has no centers.
    """
    TowerStep(n, r, s)
    if r == 1 and s == 1:
        return ()
    required = tuple(range(n - r + 1, n))
    return tuple(
        BlowupCenter(tuple(sorted(required + extra)))
        for extra in combinations(range(1, n - r), s - 1)
    )


@dataclass(frozen=True)
class TowerStage:
    """One schedule entry: step, weights, centers, cumulative Picard rank."""

    step: TowerStep
    weights: WeightData
    centers: tuple[BlowupCenter, ...]
    picard_rank: int


def kapranov_tower(n: int) -> tuple[TowerStage, ...]:
    """The full schedule (1,1), (1,2), ..., (n-3,1) with rank bookkeeping.

    The rank starts at 1 for projective space and each center adds one.
    """
    if not isinstance(n, int) or n < 5:
        raise StepRangeError(f"the tower needs n >= 5, got n={n!r}")
    stages = []
    rank = 1
    for r in range(1, n - 2):
        for s in range(1, n - r - 1):
            centers = kapranov_centers(n, r, s)
            rank += len(centers)
            stages.append(
                TowerStage(TowerStep(n, r, s), kapranov_weights(n, r, s), centers, rank)
            )
    return tuple(stages)


def kapranov_aut(n: int, r: int, s: int) -> GroupDescriptor:
    """Automorphism descriptor of the sub-step (r, s) space.

    For r = 1 the heavy point is never blown up, leaving a rank n-3 torus
    times the permutations of the n-2 blown-up points, plus an extra order-2
    factor from the standard Cremona involution exactly when s = n-3.  For
    r >= 2 every marking can be forgotten and the answer is the full
    symmetric group S_n.  The seed (1, 1) is projective space itself; its
    classical projective linear group is recorded as a flagged answer
    outside the three-case statement.
    """
    TowerStep(n, r, s)
    if r >= 2:
        return GroupDescriptor(0, (n,))
    if s == 1:
        return GroupDescriptor(special=f"PGL{n - 2}", flagged=True)
    if s == n - 3:
        return GroupDescriptor(n - 3, (n - 2, 2))
    return GroupDescriptor(n - 3, (n - 2,))


def detect_losev_manin(data: WeightData) -> int | None:
    """Number of light markings m when ``data`` is the Losev-Manin datum.

    The Losev-Manin space of (n-2)-pointed chains of rational curves is the
    tower space with weights A_{1,n-3}[n]; the match is up to reordering.
    Returns None otherwise.  Requires genus zero.
    """
    if data.genus != 0:
        raise InputError(f"Losev-Manin detection needs genus 0, got g={data.genus}")
    n = data.n
    if n < 4:
        return None
    reference = sorted(
        (Fraction(1, n - 2),) * (n - 2) + (Fraction(n - 3, n - 2), Fraction(1))
    )
    return n - 2 if sorted(data.weights) == reference else None


def feasible_cremona_degrees(
    n: int, r_class: str
) -> dict[int, tuple[tuple[int, int], ...]]:
    """Degrees of linear systems on P^{n-3} compatible with the tower maps.

    A birational self-map preserving the forgetful structure is induced by
    a degree-d system with multiplicity d-1 at each relevant fixed point and
    multiplicity d-h along the span of any h of them.  Candidates d in
    1..n-3 are screened by exact integer arithmetic:

    - r_class "1" (n-2 relevant points): the system must have no fixed
      component, (n-3)(d-n+4) <= d, and for d > 1 a codimension-two span
      must lie in the base locus (d - (n-4) >= 1), as forced by restricting
      to general planes through two of the points.  Feasible set {1, n-3};
      d = n-3 is the standard Cremona transformation.
    - r_class "2+" (n-1 relevant points): the system must also fix the
      degree of the rational normal curves through all points,
      (n-3)d - (n-1)(d-1) = n-3, which pins d = 1.

    Returns a map d -> ((span size h, multiplicity d-h), ...) listing the
    positive multiplicities.
    """
    if not isinstance(n, int) or n < 5:
        raise StepRangeError(f"degree feasibility needs n >= 5, got n={n!r}")
    if r_class not in ("1", "2+"):
        raise InputError(f'r_class must be "1" or "2+", got {r_class!r}')
    feasible: dict[int, tuple[tuple[int, int], ...]] = {}
    for d in range(1, n - 2):
        profile = tuple((h, d - h) for h in range(1, d))
        if r_class == "2+":
            if (n - 3) * d - (n - 1) * (d - 1) == n - 3:
                feasible[d] = profile
        elif d == 1:
            feasible[d] = profile
        else:
            no_fixed_component = (n - 3) * (d - n + 4) <= d
            codim_two_center = d - (n - 4) >= 1
            if no_fixed_component and codim_two_center:
                feasible[d] = profile
    return feasible


def tower_rank_closed_form(n: int) -> int:
    """Independent closed form for the final Picard rank: 2^{n-1} - C(n,2) - 1."""
    if not isinstance(n, int) or n < 5:
        raise StepRangeError(f"the closed form needs n >= 5, got n={n!r}")
    return 2 ** (n - 1) - math.comb(n, 2) - 1
