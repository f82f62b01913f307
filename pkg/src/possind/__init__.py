"""Possibilistic conditional independence over finite variable sets.

Dense possibility tables with max-marginalization, residuated
conditioning under three conjunction families, membership tests for the
independence and no-interactivity relations, closed-form family-specific
characterizations, graphoid axiom checking with counterexamples, and a
randomized property-fuzzing harness.
"""

from .cases import CaseResult, one_sided_min_dist, run_worked_examples, two_peak_dist
from .conjunction import (
    IDENTITY,
    Conjunction,
    Generator,
    LukasiewiczLike,
    Min,
    ProductLike,
    conjoin,
    default_families,
    generator_apply,
    generator_invert,
    parse_conjunction,
    residuum,
    residuum_oracle,
)
from .core import (
    EPS,
    Distribution,
    IndependenceRelation,
    Space,
    Triplet,
    build_space,
    enumerate_triplets,
    make_distribution,
    possibility_measure,
    triplet_count,
)
from .errors import (
    BadTriplet,
    DuplicateVariable,
    EmptyFrame,
    FormatError,
    NotNormalised,
    OutOfRange,
    PossindError,
    ScopeMismatch,
    SpaceMismatch,
    TooLarge,
    TooSmall,
)
from .graphoid import (
    AXIOMS,
    GRAPHOID_AXIOMS,
    SEMIGRAPHOID_AXIOMS,
    AxiomReport,
    Counterexample,
    FuzzConfig,
    FuzzFailure,
    FuzzReport,
    MinedCounterexample,
    check_axiom,
    fuzz_properties,
    is_graphoid,
    is_semigraphoid,
    random_distribution,
)
from .independence import (
    MembershipEvidence,
    RelationKind,
    Witness,
    characterize_luka,
    characterize_min_i,
    characterize_min_ni,
    characterize_product_i,
    characterize_product_ni,
    condition,
    construct_luka_instance,
    enumerate_relation,
    in_independence,
    in_noninteractivity,
)
from .serialize import (
    distribution_document,
    dump_distribution,
    load_distribution,
    parse_distribution,
    reproducer_document,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOMS",
    "AxiomReport",
    "BadTriplet",
    "CaseResult",
    "Conjunction",
    "Counterexample",
    "Distribution",
    "DuplicateVariable",
    "EmptyFrame",
    "EPS",
    "FormatError",
    "FuzzConfig",
    "FuzzFailure",
    "FuzzReport",
    "Generator",
    "GRAPHOID_AXIOMS",
    "IDENTITY",
    "IndependenceRelation",
    "LukasiewiczLike",
    "MembershipEvidence",
    "Min",
    "MinedCounterexample",
    "NotNormalised",
    "OutOfRange",
    "PossindError",
    "ProductLike",
    "RelationKind",
    "ScopeMismatch",
    "SEMIGRAPHOID_AXIOMS",
    "Space",
    "SpaceMismatch",
    "TooLarge",
    "TooSmall",
    "Triplet",
    "Witness",
    "build_space",
    "characterize_luka",
    "characterize_min_i",
    "characterize_min_ni",
    "characterize_product_i",
    "characterize_product_ni",
    "check_axiom",
    "condition",
    "conjoin",
    "construct_luka_instance",
    "default_families",
    "distribution_document",
    "dump_distribution",
    "enumerate_relation",
    "enumerate_triplets",
    "fuzz_properties",
    "generator_apply",
    "generator_invert",
    "in_independence",
    "in_noninteractivity",
    "is_graphoid",
    "is_semigraphoid",
    "load_distribution",
    "make_distribution",
    "one_sided_min_dist",
    "parse_conjunction",
    "parse_distribution",
    "possibility_measure",
    "random_distribution",
    "reproducer_document",
    "residuum",
    "residuum_oracle",
    "run_worked_examples",
    "triplet_count",
    "two_peak_dist",
]
