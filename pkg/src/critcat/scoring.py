"""Matching scores, solution comparison, and what-if perturbation.

The matching score of a solution against a layer-3 catalogue is the sum of
three weighted groups: boolean answers (0/1) times their weights, raw likert
answers (1..5) times their weights, and numeric answers normalized to [0, 1]
against the cohort (or mapped onto interval bins) times their weights.

A failed showstopper is not a hard disqualifier in the arithmetic: it simply
contributes nothing, and the failure is surfaced in the report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import (
    CatalogueValidationError,
    InvalidRatingError,
    MissingAnswerError,
    OutOfRangeRawError,
    PerturbationError,
    RawNotInCohortError,
    ScaleMismatchError,
    UnknownIndexError,
    UnknownSolutionError,
    WrongLayerError,
)
from .layers import assign_scale, normalize_weights
from .model import (
    BooleanScale,
    Catalogue,
    Criterion,
    CriterionIndex,
    IntervalScale,
    LikertScale,
    NumericScale,
    Polarity,
    validate_catalogue,
)

CONTRIBUTION_TOLERANCE = 1e-9


# --- answers and profiles -----------------------------------------------------


@dataclass(frozen=True)
class BooleanAnswer:
    value: int  # 0 or 1

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise ValueError(f"boolean answer must be 0 or 1, got {self.value!r}")


@dataclass(frozen=True)
class LikertAnswer:
    value: int  # 1..5

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or not 1 <= self.value <= 5:
            raise ValueError(f"likert answer must be in 1..5, got {self.value!r}")


@dataclass(frozen=True)
class NumericAnswer:
    """Raw measured value; serves both numeric and interval scales."""

    raw: float
    unit: str = ""

    def __post_init__(self) -> None:
        if not math.isfinite(self.raw):
            raise ValueError(f"numeric answer must be finite, got {self.raw!r}")


AnswerValue = BooleanAnswer | LikertAnswer | NumericAnswer

_ANSWER_FOR_SCALE: dict[type, type] = {
    BooleanScale: BooleanAnswer,
    LikertScale: LikertAnswer,
    NumericScale: NumericAnswer,
    IntervalScale: NumericAnswer,
}


@dataclass(frozen=True)
class SolutionProfile:
    """One candidate solution's answers to every catalogue criterion."""

    name: str
    answers: dict[CriterionIndex, AnswerValue]
    vendor: str = ""
    notes: str = ""


# --- elementary scoring -------------------------------------------------------


def normalize_numeric(
    raw: float, cohort_values: list[float] | tuple[float, ...], polarity: Polarity
) -> float:
    """Min-max normalize a raw value against the cohort, into [0, 1].

    Benefit polarity maps the cohort maximum to 1; cost polarity maps the
    minimum to 1. A degenerate cohort (all values equal) scores 0.5 for
    everyone, which preserves ranking.
    """
    if not cohort_values:
        raise ValueError("cohort values must be non-empty")
    if raw not in cohort_values:
        raise RawNotInCohortError(raw)
    lo, hi = min(cohort_values), max(cohort_values)
    if hi == lo:
        return 0.5
    if polarity is Polarity.BENEFIT:
        return (raw - lo) / (hi - lo)
    return (hi - raw) / (hi - lo)


def interval_score(raw: float, scale: IntervalScale) -> float:
    """Score a raw value by its bin position: worst bin 0, best bin 1.

    Bins are half-open [lo, hi); the bin at the top of the covered range also
    accepts raw == hi so the range boundary is scoreable.
    """
    bins = scale.bins
    top = max(b.hi for b in bins)
    position = None
    for i, b in enumerate(bins):
        if b.lo <= raw < b.hi or (raw == b.hi == top):
            position = i
            break
    if position is None:
        raise OutOfRangeRawError(raw)
    return position / (len(bins) - 1)


def answer_contribution(
    answer: AnswerValue,
    criterion: Criterion,
    cohort_values: list[float] | tuple[float, ...] | None = None,
) -> float:
    """One criterion's summand of the matching score: scaled answer x weight.

    cohort_values supplies the raw numeric answers of every cohort member for
    this criterion; it is required for numeric scales only.
    """
    scale = criterion.scale
    if scale is None or criterion.weight is None:
        raise ValueError(f"criterion {criterion.index} is not scaled and weighted")
    expected = _ANSWER_FOR_SCALE[type(scale)]
    if not isinstance(answer, expected):
        labels = {BooleanAnswer: "boolean", LikertAnswer: "likert", NumericAnswer: "numeric"}
        raise ScaleMismatchError(criterion.index, labels[expected], labels[type(answer)])
    if isinstance(scale, BooleanScale):
        return answer.value * criterion.weight
    if isinstance(scale, LikertScale):
        return answer.value * criterion.weight
    if isinstance(scale, IntervalScale):
        return interval_score(answer.raw, scale) * criterion.weight
    if cohort_values is None:
        raise ValueError(
            f"criterion {criterion.index} has a numeric scale and needs cohort values"
        )
    return normalize_numeric(answer.raw, cohort_values, scale.polarity) * criterion.weight


# --- matching score and comparison --------------------------------------------


@dataclass(frozen=True)
class MatchingScoreResult:
    solution: str
    ms: float
    ms_max: float
    ms_fraction: float
    per_criterion: tuple[tuple[CriterionIndex, float], ...]
    per_category: dict[str, float]
    failed_showstoppers: tuple[CriterionIndex, ...]


@dataclass(frozen=True)
class ComparisonReport:
    """Cohort scored against one catalogue version, best first.

    ties groups the names of solutions with equal scores; disqualified lists
    solutions that failed at least one showstopper (still scored and ranked).
    """

    catalogue_id: str
    catalogue_version: int
    cohort: tuple[MatchingScoreResult, ...]
    ties: tuple[tuple[str, ...], ...]
    disqualified: tuple[str, ...]

    def rank_of(self, solution: str) -> int:
        for position, result in enumerate(self.cohort, start=1):
            if result.solution == solution:
                return position
        raise UnknownSolutionError(solution)


def _check_catalogue(catalogue: Catalogue) -> None:
    if catalogue.layer != 3:
        raise WrongLayerError(f"scoring needs a layer-3 catalogue, got layer {catalogue.layer}")
    report = validate_catalogue(catalogue)
    if not report.ok:
        raise CatalogueValidationError(report)


def _cohort_values(
    catalogue: Catalogue, cohort: list[SolutionProfile] | tuple[SolutionProfile, ...]
) -> dict[CriterionIndex, tuple[float, ...]]:
    values: dict[CriterionIndex, tuple[float, ...]] = {}
    for c in catalogue.criteria:
        if isinstance(c.scale, NumericScale):
            raws = []
            for p in cohort:
                a = p.answers.get(c.index)
                if isinstance(a, NumericAnswer):
                    raws.append(a.raw)
            values[c.index] = tuple(raws)
    return values


def matching_score(
    catalogue: Catalogue,
    profile: SolutionProfile,
    cohort: list[SolutionProfile] | tuple[SolutionProfile, ...],
) -> MatchingScoreResult:
    """Score one profile against the catalogue within its cohort.

    The cohort must contain the profile itself; it defines the min-max range
    for numeric normalization. Raises MissingAnswerError listing every
    unanswered criterion.
    """
    _check_catalogue(catalogue)
    if not any(p.name == profile.name for p in cohort):
        raise ValueError(f"cohort does not contain profile {profile.name!r}")

    missing = tuple(c.index for c in catalogue.criteria if c.index not in profile.answers)
    if missing:
        raise MissingAnswerError(profile.name, missing)

    numeric_values = _cohort_values(catalogue, cohort)
    per_criterion: list[tuple[CriterionIndex, float]] = []
    per_category: dict[str, float] = {}
    failed: list[CriterionIndex] = []
    ms_max = 0.0

    for c in catalogue.criteria:
        answer = profile.answers[c.index]
        contribution = answer_contribution(answer, c, numeric_values.get(c.index))
        per_criterion.append((c.index, contribution))
        per_category[c.category] = per_category.get(c.category, 0.0) + contribution
        if c.showstopper and isinstance(answer, BooleanAnswer) and answer.value == 0:
            failed.append(c.index)
        ms_max += (5 if isinstance(c.scale, LikertScale) else 1) * c.weight

    ms = math.fsum(contribution for _, contribution in per_criterion)
    return MatchingScoreResult(
        solution=profile.name,
        ms=ms,
        ms_max=ms_max,
        ms_fraction=ms / ms_max,
        per_criterion=tuple(per_criterion),
        per_category=per_category,
        failed_showstoppers=tuple(failed),
    )


def compare(
    catalogue: Catalogue,
    profiles: list[SolutionProfile] | tuple[SolutionProfile, ...],
) -> ComparisonReport:
    """Score every profile with the full profile list as cohort and rank them.

    The sort is stable: equal scores keep input order and are flagged as ties.
    """
    if not profiles:
        raise ValueError("compare needs at least one profile")
    names = [p.name for p in profiles]
    if len(set(names)) != len(names):
        raise ValueError("profile names must be unique within a cohort")

    results = [matching_score(catalogue, p, profiles) for p in profiles]
    ranked = sorted(results, key=lambda r: -r.ms)

    ties: list[tuple[str, ...]] = []
    group = [ranked[0]] if ranked else []
    for result in ranked[1:]:
        if abs(result.ms - group[-1].ms) <= CONTRIBUTION_TOLERANCE:
            group.append(result)
        else:
            if len(group) > 1:
                ties.append(tuple(r.solution for r in group))
            group = [result]
    if len(group) > 1:
        ties.append(tuple(r.solution for r in group))

    disqualified = tuple(r.solution for r in ranked if r.failed_showstoppers)
    return ComparisonReport(
        catalogue_id=catalogue.id,
        catalogue_version=catalogue.version,
        cohort=tuple(ranked),
        ties=tuple(ties),
        disqualified=disqualified,
    )


# --- what-if ------------------------------------------------------------------


@dataclass(frozen=True)
class SetRating:
    index: CriterionIndex
    rating: int


@dataclass(frozen=True)
class ToggleShowstopper:
    index: CriterionIndex


@dataclass(frozen=True)
class OverrideAnswer:
    solution: str
    index: CriterionIndex
    answer: AnswerValue


Perturbation = SetRating | ToggleShowstopper | OverrideAnswer


@dataclass(frozen=True)
class RankChange:
    solution: str
    before: int
    after: int


@dataclass(frozen=True)
class WhatIfResult:
    before: ComparisonReport
    after: ComparisonReport
    rank_changes: tuple[RankChange, ...]


def _perturb_catalogue(
    catalogue: Catalogue, perturbations: tuple[Perturbation, ...]
) -> Catalogue:
    by_index = {c.index: c for c in catalogue.criteria}
    touched: set[CriterionIndex] = set()

    for p in perturbations:
        if isinstance(p, OverrideAnswer):
            continue
        if p.index not in by_index:
            raise UnknownIndexError(p.index, "what-if perturbation")
        c = by_index[p.index]
        if isinstance(p, SetRating):
            if not isinstance(p.rating, int) or not 1 <= p.rating <= 5:
                raise InvalidRatingError(p.rating)
            by_index[p.index] = replace(c, rating=p.rating)
        else:
            by_index[p.index] = replace(c, showstopper=not c.showstopper)
        touched.add(p.index)

    if not touched:
        return catalogue

    # Weights are global (one rating moves them all); scales are re-derived
    # only for the perturbed criteria so untouched rule exceptions survive.
    ordered = [by_index[c.index] for c in catalogue.criteria]
    weights = normalize_weights([c.rating for c in ordered])
    criteria = []
    for c, weight in zip(ordered, weights):
        scale = c.scale
        if c.index in touched:
            bins = c.scale.bins if isinstance(c.scale, IntervalScale) else None
            scale = assign_scale(c.rating, bool(c.showstopper), c.answer_kind, bins)
        criteria.append(replace(c, weight=weight, scale=scale))
    return replace(catalogue, criteria=tuple(criteria))


def _perturb_profiles(
    profiles: tuple[SolutionProfile, ...],
    catalogue: Catalogue,
    perturbations: tuple[Perturbation, ...],
) -> tuple[SolutionProfile, ...]:
    by_name = {p.name: p for p in profiles}
    indices = set(catalogue.indices)
    for p in perturbations:
        if not isinstance(p, OverrideAnswer):
            continue
        if p.solution not in by_name:
            raise UnknownSolutionError(p.solution)
        if p.index not in indices:
            raise UnknownIndexError(p.index, "answer override")
        profile = by_name[p.solution]
        answers = dict(profile.answers)
        answers[p.index] = p.answer
        by_name[p.solution] = replace(profile, answers=answers)
    return tuple(by_name[p.name] for p in profiles)


def whatif(
    catalogue: Catalogue,
    profiles: list[SolutionProfile] | tuple[SolutionProfile, ...],
    perturbations: list[Perturbation] | tuple[Perturbation, ...],
) -> WhatIfResult:
    """Compare the cohort before and after ephemeral perturbations.

    Pure function: nothing is persisted; rating and showstopper changes
    re-derive weights (globally) and the perturbed criteria's scales, answer
    overrides patch profile copies. rank_changes lists every solution whose
    ordinal position moved.
    """
    profiles = tuple(profiles)
    perturbations = tuple(perturbations)

    before = compare(catalogue, profiles)
    perturbed_catalogue = _perturb_catalogue(catalogue, perturbations)
    report = validate_catalogue(perturbed_catalogue)
    if not report.ok:
        raise PerturbationError(
            "perturbed catalogue no longer validates: "
            + "; ".join(str(v) for v in report.violations),
            report,
        )
    perturbed_profiles = _perturb_profiles(profiles, perturbed_catalogue, perturbations)
    after = compare(perturbed_catalogue, perturbed_profiles)

    changes = []
    for result in after.cohort:
        b, a = before.rank_of(result.solution), after.rank_of(result.solution)
        if b != a:
            changes.append(RankChange(solution=result.solution, before=b, after=a))
    return WhatIfResult(before=before, after=after, rank_changes=tuple(changes))
