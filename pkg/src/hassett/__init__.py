"""Exact combinatorics of moduli spaces of weighted pointed stable curves.

Weight validation and collision signatures, admissible-transposition
groups, forgetful/reduction morphism predicates, boundary strata, the
Kapranov blow-up tower with Picard-rank bookkeeping and automorphism
descriptors, and the Cremona degree-feasibility arithmetic behind them.
All arithmetic is exact rational.
"""

from .errors import (
    DomainError,
    ForgetfulUndefinedError,
    HassettError,
    InputError,
    MarkIndexError,
    NotCoveredError,
    NotReductionError,
    OracleTooLargeError,
    ShapeMismatchError,
    StepRangeError,
    TotalWeightError,
    WeightRangeError,
    WeightSyntaxError,
)
from .kapranov import (
    BlowupCenter,
    TowerStage,
    TowerStep,
    detect_losev_manin,
    feasible_cremona_degrees,
    kapranov_aut,
    kapranov_centers,
    kapranov_tower,
    kapranov_weights,
    tower_rank_closed_form,
)
from .moduli import (
    BoundaryDivisor,
    GroupDescriptor,
    aut_descriptor_coarse,
    aut_descriptor_stack,
    boundary_divisors,
    contracted_divisors,
    forgetful_exists,
    reduction_exists,
)
from .perms import (
    ExplicitPermSet,
    PermGroup,
    Permutation,
    admissibility_partition,
    admissible_group,
    admissible_transpositions,
    generated_elements,
    is_admissible,
    membership,
    signature_preserving_group,
)
from .weights import (
    Signature,
    WeightData,
    can_coincide,
    canonical_alignment,
    parse_fraction,
    parse_weight_data,
    reduced_weights,
    serialize_weight_data,
    signature,
    weight_data_equivalent,
)

__all__ = [
    "BlowupCenter",
    "BoundaryDivisor",
    "DomainError",
    "ExplicitPermSet",
    "ForgetfulUndefinedError",
    "GroupDescriptor",
    "HassettError",
    "InputError",
    "MarkIndexError",
    "NotCoveredError",
    "NotReductionError",
    "OracleTooLargeError",
    "PermGroup",
    "Permutation",
    "ShapeMismatchError",
    "Signature",
    "StepRangeError",
    "TotalWeightError",
    "TowerStage",
    "TowerStep",
    "WeightData",
    "WeightRangeError",
    "WeightSyntaxError",
    "admissibility_partition",
    "admissible_group",
    "admissible_transpositions",
    "aut_descriptor_coarse",
    "aut_descriptor_stack",
    "boundary_divisors",
    "can_coincide",
    "canonical_alignment",
    "contracted_divisors",
    "detect_losev_manin",
    "feasible_cremona_degrees",
    "forgetful_exists",
    "generated_elements",
    "is_admissible",
    "kapranov_aut",
    "kapranov_centers",
    "kapranov_tower",
    "kapranov_weights",
    "membership",
    "parse_fraction",
    "parse_weight_data",
    "reduced_weights",
    "reduction_exists",
    "serialize_weight_data",
    "signature",
    "signature_preserving_group",
    "tower_rank_closed_form",
    "weight_data_equivalent",
]
