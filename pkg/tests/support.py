"""Shared helpers for the test suite: deterministic builders, random
generators, and the independent brute-force matching-score evaluator.

The brute-force evaluator deliberately avoids every scoring function of the
package: it expands the score as its three group sums (boolean, numeric,
likert) straight from the dataclasses, so it can serve as an oracle for the
production path.
"""

from __future__ import annotations

import math
import random

from critcat.layers import normalize_weights
from critcat.model import (
    BooleanScale,
    Catalogue,
    Criterion,
    CriterionIndex,
    IntervalBin,
    IntervalScale,
    LikertScale,
    NumericQuantity,
    NumericScale,
    Polarity,
    Qualitative,
)
from critcat.scoring import (
    BooleanAnswer,
    LikertAnswer,
    NumericAnswer,
    SolutionProfile,
)

CATEGORIES = ("Functionality", "Usability", "Costs", "Security", "Support")

UNITS = ("EUR", "minutes", "GB", "%")


# --- deterministic builders ----------------------------------------------------


def make_criterion(
    major: int,
    scale,
    rating: int = 3,
    weight: float = 1.0,
    showstopper: bool = False,
    category: str = "General",
    answer_kind=None,
) -> Criterion:
    index = CriterionIndex(major, 1)
    if answer_kind is None:
        if isinstance(scale, NumericScale):
            answer_kind = NumericQuantity(unit=scale.unit, polarity=scale.polarity)
        elif isinstance(scale, IntervalScale):
            answer_kind = NumericQuantity(unit="units", polarity=Polarity.BENEFIT)
        else:
            answer_kind = Qualitative()
    return Criterion(
        index=index,
        category=category,
        question=f"Question {index}?",
        original_question=f"Question {index}?",
        answer_kind=answer_kind,
        rating=rating,
        showstopper=showstopper,
        scale=scale,
        weight=weight,
    )


def make_catalogue(criteria, layer: int = 3, id: str = "test-cat") -> Catalogue:
    return Catalogue(
        id=id,
        layer=layer,
        title="Test catalogue",
        domain_label="",
        context_label="",
        criteria=tuple(criteria),
        provenance=(),
        version=1,
    )


def worked_example_catalogue() -> Catalogue:
    """Three criteria with weights 0.4 / 0.4 / 0.2 (ratings 2, 2, 1)."""
    return make_catalogue(
        [
            make_criterion(1, BooleanScale(), rating=2, weight=0.4, showstopper=True),
            make_criterion(2, LikertScale(), rating=2, weight=0.4),
            make_criterion(
                3,
                NumericScale(unit="EUR", polarity=Polarity.COST),
                rating=1,
                weight=0.2,
            ),
        ]
    )


def worked_example_profiles() -> tuple[SolutionProfile, SolutionProfile]:
    answers_a = {
        CriterionIndex(1, 1): BooleanAnswer(1),
        CriterionIndex(2, 1): LikertAnswer(4),
        CriterionIndex(3, 1): NumericAnswer(100.0, "EUR"),
    }
    answers_b = {
        CriterionIndex(1, 1): BooleanAnswer(1),
        CriterionIndex(2, 1): LikertAnswer(2),
        CriterionIndex(3, 1): NumericAnswer(200.0, "EUR"),
    }
    return (
        SolutionProfile(name="A", answers=answers_a),
        SolutionProfile(name="B", answers=answers_b),
    )


def answer_for(criterion: Criterion, good: bool = True):
    """A deterministic best/worst answer matching the criterion's scale."""
    scale = criterion.scale
    if isinstance(scale, BooleanScale):
        return BooleanAnswer(1 if good else 0)
    if isinstance(scale, LikertScale):
        return LikertAnswer(5 if good else 1)
    if isinstance(scale, NumericScale):
        return NumericAnswer(100.0 if good else 400.0, scale.unit)
    b = scale.bins[-1] if good else scale.bins[0]
    if math.isfinite(b.lo):
        return NumericAnswer(float(b.lo))
    return NumericAnswer(float(b.hi) - 1.0)


def complete_profile(catalogue: Catalogue, name: str, good: bool = True) -> SolutionProfile:
    answers = {c.index: answer_for(c, good) for c in catalogue.criteria}
    return SolutionProfile(name=name, answers=answers)


# --- random generators -----------------------------------------------------------


def _random_bins(rng: random.Random) -> tuple[IntervalBin, ...]:
    n_bins = rng.randint(2, 4)
    edges = sorted(rng.sample(range(0, 101, 5), n_bins + 1))
    bins = [
        IntervalBin(label=f"bin {i}", lo=float(edges[i]), hi=float(edges[i + 1]))
        for i in range(n_bins)
    ]
    if rng.random() < 0.5:
        bins.reverse()  # worst-to-best may traverse the range downward
    return tuple(bins)


def random_layer3_catalogue(
    rng: random.Random, max_criteria: int = 6, id: str = "random-cat"
) -> Catalogue:
    """A valid random layer-3 catalogue with mixed scales.

    Scales are mostly rule-conforming but occasionally contradict the rating
    rules (the validator allows that, mirroring the published 23.1 row).
    Weights are rating-derived half the time, otherwise arbitrary normalized.
    """
    n = rng.randint(1, max_criteria)
    ratings = [rng.randint(1, 5) for _ in range(n)]
    if rng.random() < 0.5:
        weights = normalize_weights(ratings)
    else:
        raw = [rng.uniform(0.05, 1.0) for _ in range(n)]
        total = sum(raw)
        weights = [w / total for w in raw]

    criteria = []
    for i in range(n):
        showstopper = rng.random() < 0.2
        if showstopper:
            scale = BooleanScale()
        else:
            choice = rng.random()
            if choice < 0.35:
                scale = BooleanScale()
            elif choice < 0.65:
                scale = LikertScale()
            elif choice < 0.85:
                scale = NumericScale(
                    unit=rng.choice(UNITS),
                    polarity=rng.choice((Polarity.BENEFIT, Polarity.COST)),
                )
            else:
                scale = IntervalScale(_random_bins(rng))
        criteria.append(
            make_criterion(
                i + 1,
                scale,
                rating=ratings[i],
                weight=weights[i],
                showstopper=showstopper,
                category=rng.choice(CATEGORIES),
            )
        )
    return make_catalogue(criteria, id=id)


def _random_raw_in(rng: random.Random, scale: IntervalScale) -> float:
    b = rng.choice(scale.bins)
    lo, hi = b.lo, b.hi
    if not math.isfinite(lo):
        return hi - 1.0 - rng.random() * 10.0
    if not math.isfinite(hi):
        return lo + rng.random() * 10.0
    return lo + (hi - lo) * rng.random() * 0.99


def random_cohort(
    rng: random.Random, catalogue: Catalogue, max_solutions: int = 4
) -> list[SolutionProfile]:
    """Complete random profiles; numeric criteria sometimes degenerate
    (every solution shares one raw value)."""
    n = rng.randint(1, max_solutions)
    shared: dict[CriterionIndex, float] = {}
    for c in catalogue.criteria:
        if isinstance(c.scale, NumericScale) and rng.random() < 0.2:
            shared[c.index] = float(rng.randint(0, 500))

    profiles = []
    for k in range(n):
        answers = {}
        for c in catalogue.criteria:
            scale = c.scale
            if isinstance(scale, BooleanScale):
                answers[c.index] = BooleanAnswer(rng.randint(0, 1))
            elif isinstance(scale, LikertScale):
                answers[c.index] = LikertAnswer(rng.randint(1, 5))
            elif isinstance(scale, NumericScale):
                raw = shared.get(c.index, float(rng.randint(0, 500)))
                answers[c.index] = NumericAnswer(raw, scale.unit)
            else:
                answers[c.index] = NumericAnswer(_random_raw_in(rng, scale))
        profiles.append(SolutionProfile(name=f"S{k + 1}", answers=answers))
    return profiles


# --- independent oracle ------------------------------------------------------------


def brute_force_ms(
    catalogue: Catalogue,
    profile: SolutionProfile,
    cohort: list[SolutionProfile],
) -> float:
    """Term-by-term expansion of the matching score's three group sums.

    Re-derives numeric normalization and bin positions from first principles;
    never calls the package's scoring code.
    """
    boolean_sum = 0.0
    likert_sum = 0.0
    numeric_sum = 0.0
    for crit in catalogue.criteria:
        answer = profile.answers[crit.index]
        scale = crit.scale
        if isinstance(scale, BooleanScale):
            boolean_sum += answer.value * crit.weight
        elif isinstance(scale, LikertScale):
            likert_sum += answer.value * crit.weight
        elif isinstance(scale, NumericScale):
            raws = sorted(p.answers[crit.index].raw for p in cohort)
            lo, hi = raws[0], raws[-1]
            if hi == lo:
                scaled = 0.5
            elif scale.polarity is Polarity.BENEFIT:
                scaled = (answer.raw - lo) / (hi - lo)
            else:
                scaled = (hi - answer.raw) / (hi - lo)
            numeric_sum += scaled * crit.weight
        else:
            bins = scale.bins
            top = max(b.hi for b in bins)
            position = None
            for i, b in enumerate(bins):
                if b.lo <= answer.raw < b.hi or (answer.raw == b.hi == top):
                    position = i
                    break
            assert position is not None, "oracle: raw value outside covered range"
            numeric_sum += (position / (len(bins) - 1)) * crit.weight
    return boolean_sum + numeric_sum + likert_sum
