"""Layered criteria catalogues and matching scores for software selection.

Workflow: refine a general layer-1 criteria list to a domain-specific layer 2,
weight it into a rated, scale-typed layer 3, then score candidate solutions
and compare them, with what-if perturbation on top.
"""

from .errors import (
    CatalogueValidationError,
    CritcatError,
    DerivationError,
    DerivationIssue,
    DocumentError,
    EmptyRatingsError,
    InvalidRatingError,
    MissingAnswerError,
    OutOfRangeRawError,
    PerturbationError,
    RawNotInCohortError,
    ScaleMismatchError,
    UnknownIndexError,
    UnknownSolutionError,
    UnsupportedFormatVersionError,
    WrongLayerError,
)
from .fixtures import FixtureSet, load_fixtures
from .layers import (
    DefineIntervals,
    DerivationScript,
    MarkShowstopper,
    ProvenanceNote,
    Rate,
    Remove,
    Reword,
    RewordForScale,
    assign_scale,
    derive,
    derive_layer2,
    derive_layer3,
    normalize_weights,
    replay_provenance,
    weighting_preview,
)
from .model import (
    AnswerKind,
    BooleanScale,
    Catalogue,
    CatalogueStats,
    Criterion,
    CriterionIndex,
    IntervalBin,
    IntervalScale,
    LikertScale,
    NumericQuantity,
    NumericScale,
    Polarity,
    Qualitative,
    ScaleSpec,
    ValidationReport,
    Violation,
    catalogue_stats,
    format_percent,
    validate_catalogue,
)
from .scoring import (
    AnswerValue,
    BooleanAnswer,
    ComparisonReport,
    LikertAnswer,
    MatchingScoreResult,
    NumericAnswer,
    OverrideAnswer,
    SetRating,
    SolutionProfile,
    ToggleShowstopper,
    WhatIfResult,
    answer_contribution,
    compare,
    interval_score,
    matching_score,
    normalize_numeric,
    whatif,
)

__version__ = "0.1.0"
