"""Seeded random weight data for surveys and regression corpora."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

from .weights import WeightData


def random_weight_data(
    rng: random.Random,
    min_n: int = 3,
    max_n: int = 6,
    max_den: int = 12,
    genera: Sequence[int] = (1, 2),
) -> WeightData:
    """One random weight datum with weights num/den, 1 <= num <= den <= max_den.

    Restricting to positive genus keeps every sample valid.
    """
    n = rng.randint(min_n, max_n)
    weights = []
    for _ in range(n):
        den = rng.randint(1, max_den)
        num = rng.randint(1, den)
        weights.append(Fraction(num, den))
    return WeightData(rng.choice(list(genera)), tuple(weights))


def weight_data_corpus(
    count: int,
    seed: int,
    min_n: int = 3,
    max_n: int = 6,
    max_den: int = 12,
    genera: Sequence[int] = (1, 2),
) -> Iterator[WeightData]:
    """Deterministic stream of ``count`` random weight data."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_weight_data(rng, min_n, max_n, max_den, genera)
