"""Exact rational weight data for weighted pointed curves.

A weight datum is a genus g >= 0 together with rationals a_1,...,a_n in
(0, 1] satisfying 2g - 2 + sum(a_i) > 0.  Every predicate in this package
is a threshold comparison against 1, so weights are kept as exact
fractions and floats are rejected outright.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    ForgetfulUndefinedError,
    MarkIndexError,
    ShapeMismatchError,
    TotalWeightError,
    WeightRangeError,
    WeightSyntaxError,
)

ONE = Fraction(1)

_FRACTION_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact fraction; decimal forms are rejected."""
    if not isinstance(text, str) or _FRACTION_RE.match(text.strip()) is None:
        raise WeightSyntaxError(
            f"weights must be integer or fraction strings like '1/4', got {text!r}"
        )
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise WeightSyntaxError(f"zero denominator in {text!r}") from None


@dataclass(frozen=True)
class WeightData:
    """Genus plus an ordered tuple of rational marking weights."""

    genus: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or isinstance(self.genus, bool) or self.genus < 0:
            raise WeightRangeError(f"genus must be a nonnegative integer, got {self.genus!r}")
        converted = []
        for w in self.weights:
            if isinstance(w, float):
                raise WeightSyntaxError(f"floats are not accepted as weights: {w!r}")
            converted.append(parse_fraction(w) if isinstance(w, str) else Fraction(w))
        ws = tuple(converted)
        object.__setattr__(self, "weights", ws)
        if not ws:
            raise WeightRangeError("at least one marking is required")
        for k, w in enumerate(ws, 1):
            if not 0 < w <= ONE:
                raise WeightRangeError(f"weight a_{k} = {w} lies outside (0, 1]")
        slack = 2 * self.genus - 2 + sum(ws)
        if slack <= 0:
            raise TotalWeightError(f"2g - 2 + sum(a_i) = {slack} is not positive")

    @classmethod
    def of(cls, genus: int, *weights) -> "WeightData":
        """Convenience constructor: WeightData.of(2, "1", "1/3", "1/3", "1/3")."""
        return cls(genus, tuple(weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= self.n:
            raise MarkIndexError(f"marking index {i!r} is not in 1..{self.n}")

    def weight(self, i: int) -> Fraction:
        self.check_index(i)
        return self.weights[i - 1]

    def sum_of(self, indices: Iterable[int]) -> Fraction:
        total = Fraction(0)
        for i in set(indices):
            total += self.weight(i)
        return total

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def to_doc(self) -> dict:
        return {"g": self.genus, "weights": [str(w) for w in self.weights]}


def weight_data_from_doc(doc) -> WeightData:
    """Validate a decoded weight-data document {"g": int, "weights": [str]}."""
    if not isinstance(doc, dict) or set(doc) != {"g", "weights"}:
        raise WeightSyntaxError('weight data must be an object {"g": ..., "weights": [...]}')
    g = doc["g"]
    if not isinstance(g, int) or isinstance(g, bool):
        raise WeightSyntaxError(f'"g" must be an integer, got {g!r}')
    raw = doc["weights"]
    if not isinstance(raw, list):
        raise WeightSyntaxError('"weights" must be a list of fraction strings')
    return WeightData(g, tuple(parse_fraction(w) for w in raw))


def parse_weight_data(text: str) -> WeightData:
    """Parse the JSON weight-data document format.

    Weights are read as integer or fraction strings, never as numbers;
    syntax, range, and total-weight violations raise distinct errors.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WeightSyntaxError(f"invalid JSON: {exc}") from None
    return weight_data_from_doc(doc)


def serialize_weight_data(data: WeightData) -> str:
    """Inverse of parse_weight_data; fractions come out in lowest terms."""
    return json.dumps(data.to_doc())


def can_coincide(data: WeightData, subset: Iterable[int]) -> bool:
    """True when the markings in ``subset`` may lie at one smooth point,
    i.e. their weights sum to at most 1."""
    s = frozenset(subset)
    if not s:
        raise MarkIndexError("subset must be nonempty")
    return data.sum_of(s) <= ONE


@dataclass(frozen=True)
class Signature:
    """Every index subset of size >= min_size whose weights sum to at most 1.

    The family is downward closed above min_size because weights are
    positive.  ``ordered()`` lists the subsets lexicographically on their
    sorted index tuples, the canonical order used everywhere.
    """

    min_size: int
    subsets: frozenset[frozenset[int]]

    def ordered(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(s)) for s in self.subsets))

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.subsets

    def remap(self, align: Sequence[int]) -> "Signature":
        """Push the subsets forward along an index map (1-based slots)."""
        mapped = frozenset(frozenset(align[i - 1] for i in s) for s in self.subsets)
        return Signature(self.min_size, mapped)


def signature(data: WeightData, min_size: int = 2) -> Signature:
    """Collect the coincidence subsets of size >= min_size.

    Sizes beyond n contribute nothing.  Enumeration stops at the first size
    level with no qualifying subset: a larger subset always has a strictly
    larger weight sum.
    """
    if not isinstance(min_size, int) or isinstance(min_size, bool) or min_size < 2:
        raise MarkIndexError(f"min_size must be an integer >= 2, got {min_size!r}")
    found: set[frozenset[int]] = set()
    indices = range(1, data.n + 1)
    ws = data.weights
    for size in range(min_size, data.n + 1):
        hits = [s for s in combinations(indices, size) if sum(ws[i - 1] for i in s) <= ONE]
        if not hits:
            break
        found.update(frozenset(s) for s in hits)
    return Signature(min_size, frozenset(found))


def reduced_weights(data: WeightData, i: int) -> WeightData:
    """Drop the i-th marking, keeping the order of the others.

    Fails when the remaining data is no longer a valid weight datum, i.e.
    the forgetful map dropping that marking is not defined.
    """
    data.check_index(i)
    remaining = data.weights[: i - 1] + data.weights[i:]
    if not remaining:
        raise ForgetfulUndefinedError("forgetting the only marking leaves no weight data")
    try:
        return WeightData(data.genus, remaining)
    except TotalWeightError:
        slack = 2 * data.genus - 2 + sum(remaining)
        raise ForgetfulUndefinedError(
            f"forgetting marking {i} leaves 2g - 2 + sum = {slack}, not positive"
        ) from None


def canonical_alignment(n: int, i: int, j: int) -> tuple[int, ...]:
    """Slot map between the two single-marking reductions of one parent.

    Slots carrying a common marking are matched to each other, and the slot
    holding a_j (on the side where i was removed) is matched to the slot
    holding a_i.  This is exactly the relabeling implicit in the
    transposition of markings i and j.
    """
    if i == j:
        raise MarkIndexError("alignment needs two distinct removed indices")
    if not 1 <= i <= n or not 1 <= j <= n:
        raise MarkIndexError(f"indices ({i}, {j}) are not in 1..{n}")
    left = [k for k in range(1, n + 1) if k != i]
    right = [k for k in range(1, n + 1) if k != j]
    position = {k: p for p, k in enumerate(right, 1)}
    return tuple(position[i if k == j else k] for k in left)


def weight_data_equivalent(
    a: WeightData, b: WeightData, align: Sequence[int] | None = None
) -> bool:
    """Do two weight data define the same moduli problem under a relabeling?

    Compares the coincidence signatures of size >= 3 through the bijection
    ``align`` (slot k of ``a`` corresponds to slot align[k-1] of ``b``;
    identity when omitted).  Size-2 subsets are deliberately excluded: a
    pair collision or a two-pointed rational tail never changes the space.
    """
    if a.genus != b.genus or a.n != b.n:
        raise ShapeMismatchError(
            f"cannot compare (g={a.genus}, n={a.n}) with (g={b.genus}, n={b.n})"
        )
    n = a.n
    al = tuple(range(1, n + 1)) if align is None else tuple(align)
    if sorted(al) != list(range(1, n + 1)):
        raise MarkIndexError(f"align must be a bijection of 1..{n}")
    return signature(a, 3).remap(al) == signature(b, 3)
