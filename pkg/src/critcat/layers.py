"""Layer transitions.

derive_layer2 applies a refinement script (remove / reword) to a general
layer-1 catalogue; derive_layer3 applies a weighting script (rate / mark
showstopper / define intervals / reword for scale) to a layer-2 catalogue,
assigning scales and normalizing weights. Both are pure functions that record
the applied directives as provenance on the result, so any derived catalogue
can be reproduced by replaying its provenance against its source.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import (
    DerivationError,
    DerivationIssue,
    EmptyRatingsError,
    WrongLayerError,
)
from .model import (
    AnswerKind,
    BooleanScale,
    Catalogue,
    Criterion,
    CriterionIndex,
    IntervalBin,
    IntervalScale,
    LikertScale,
    NumericQuantity,
    NumericScale,
    ScaleSpec,
)

# The scale rule set is evaluated with the numeric-kind rule second: a
# criterion that asks for a numeric value keeps a numeric/interval scale at
# any rating, and only a showstopper overrides that. Catalogues derived here
# carry this note in their provenance.
SCALE_RULE_NOTE = (
    "scale rules applied in order: showstopper -> boolean; "
    "numeric kind -> numeric/intervals; rating 4-5 -> likert; rating 1-3 -> boolean"
)


# --- directives --------------------------------------------------------------


@dataclass(frozen=True)
class Remove:
    """Drop a criterion as impractical for the domain; the reason is mandatory."""

    index: CriterionIndex
    justification: str

    def __post_init__(self) -> None:
        if not self.justification.strip():
            raise ValueError("a removal must state its justification")


@dataclass(frozen=True)
class Reword:
    """Give a criterion its domain-specific wording (layer 1 -> 2).

    May also change what kind of answer the new wording takes.
    """

    index: CriterionIndex
    new_question: str
    new_answer_kind: AnswerKind | None = None
    justification: str | None = None

    def __post_init__(self) -> None:
        if not self.new_question.strip():
            raise ValueError("reworded question must be non-empty")


@dataclass(frozen=True)
class Rate:
    """Rate a criterion's importance to the business, 1 (low) .. 5 (high)."""

    index: CriterionIndex
    rating: int
    justification: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.rating, int) or not 1 <= self.rating <= 5:
            raise ValueError(f"rating must be an integer in 1..5, got {self.rating!r}")


@dataclass(frozen=True)
class MarkShowstopper:
    index: CriterionIndex
    flag: bool = True


@dataclass(frozen=True)
class DefineIntervals:
    """Attach ordered worst-to-best answer bins to a numeric-kind criterion."""

    index: CriterionIndex
    bins: tuple[IntervalBin, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bins", tuple(self.bins))
        IntervalScale(self.bins)  # bins must form a valid interval scale


@dataclass(frozen=True)
class RewordForScale:
    """Reformulate a criterion so it can be answered on its assessed scale
    (layer 2 -> 3); may pin down the answer kind (e.g. unit and polarity)."""

    index: CriterionIndex
    new_question: str
    new_answer_kind: AnswerKind | None = None

    def __post_init__(self) -> None:
        if not self.new_question.strip():
            raise ValueError("reworded question must be non-empty")


@dataclass(frozen=True)
class ProvenanceNote:
    """Free-text provenance entry; not a directive, skipped on replay."""

    text: str


RefinementDirective = Remove | Reword
WeightingDirective = Rate | MarkShowstopper | DefineIntervals | RewordForScale
Directive = RefinementDirective | WeightingDirective
ProvenanceEntry = Directive | ProvenanceNote


@dataclass(frozen=True)
class DerivationScript:
    """An ordered directive list producing the next layer.

    The optional metadata fields name the derived catalogue; when omitted the
    source catalogue's values carry over (id gains a "-layerN" suffix).
    """

    target_layer: int
    directives: tuple[Directive, ...]
    new_id: str | None = None
    new_title: str | None = None
    domain_label: str | None = None
    context_label: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "directives", tuple(self.directives))
        if self.target_layer not in (2, 3):
            raise ValueError(f"target_layer must be 2 or 3, got {self.target_layer}")


# --- scale assignment and weight normalization -------------------------------


def assign_scale(
    rating: int,
    showstopper: bool,
    answer_kind: AnswerKind,
    bins: tuple[IntervalBin, ...] | None = None,
) -> ScaleSpec:
    """Assign the answer scale for one criterion. Total and deterministic.

    Rule order (earlier rules overrule later ones):
      1. showstopper               -> boolean
      2. numeric answer kind       -> numeric, or intervals when bins are given
      3. rating 4 or 5             -> likert
      4. rating 1, 2 or 3          -> boolean
    """
    if not isinstance(rating, int) or not 1 <= rating <= 5:
        raise ValueError(f"rating must be an integer in 1..5, got {rating!r}")
    if showstopper:
        return BooleanScale()
    if isinstance(answer_kind, NumericQuantity):
        if bins is not None:
            return IntervalScale(tuple(bins))
        return NumericScale(unit=answer_kind.unit, polarity=answer_kind.polarity)
    if rating >= 4:
        return LikertScale()
    return BooleanScale()


def normalize_weights(ratings: list[int] | tuple[int, ...]) -> list[float]:
    """Turn ratings into weights rating_i / sum(ratings); order preserved.

    The result sums to 1 (within 1e-9) and every weight is strictly positive.
    """
    if not ratings:
        raise EmptyRatingsError("cannot normalize an empty rating list")
    for r in ratings:
        if not isinstance(r, int) or not 1 <= r <= 5:
            raise ValueError(f"ratings must be integers in 1..5, got {r!r}")
    total = sum(ratings)
    return [r / total for r in ratings]


# --- layer 1 -> 2 -------------------------------------------------------------


def derive_layer2(layer1: Catalogue, script: DerivationScript) -> Catalogue:
    """Apply a refinement script: remove impractical criteria, reword the rest.

    Kept criteria stay in original order; reworded ones keep their index and
    original_question. Raises DerivationError carrying every bad directive.
    """
    if layer1.layer != 1:
        raise WrongLayerError(f"refinement starts from layer 1, got layer {layer1.layer}")
    if script.target_layer != 2:
        raise WrongLayerError(
            f"refinement script must target layer 2, got {script.target_layer}"
        )

    current: dict[CriterionIndex, Criterion] = {c.index: c for c in layer1.criteria}
    removed: set[CriterionIndex] = set()
    issues: list[DerivationIssue] = []

    for d in script.directives:
        if not isinstance(d, (Remove, Reword)):
            issues.append(
                DerivationIssue(
                    "invalid-directive",
                    getattr(d, "index", None),
                    f"{type(d).__name__} is not a refinement directive",
                )
            )
            continue
        if d.index not in current:
            issues.append(
                DerivationIssue(
                    "unknown-index", d.index, f"{type(d).__name__} targets a missing criterion"
                )
            )
            continue
        if d.index in removed:
            issues.append(
                DerivationIssue(
                    "directive-after-removal",
                    d.index,
                    f"{type(d).__name__} follows the removal of this criterion",
                )
            )
            continue
        if isinstance(d, Remove):
            removed.add(d.index)
        else:
            c = current[d.index]
            updates: dict = {"question": d.new_question}
            if d.new_answer_kind is not None:
                updates["answer_kind"] = d.new_answer_kind
            current[d.index] = replace(c, **updates)

    if issues:
        raise DerivationError(tuple(issues))

    criteria = tuple(
        current[c.index] for c in layer1.criteria if c.index not in removed
    )
    return Catalogue(
        id=script.new_id or f"{layer1.id}-layer2",
        layer=2,
        title=script.new_title or layer1.title,
        domain_label=script.domain_label if script.domain_label is not None else layer1.domain_label,
        context_label=script.context_label if script.context_label is not None else layer1.context_label,
        criteria=criteria,
        provenance=tuple(script.directives),
        version=1,
    )


# --- layer 2 -> 3 -------------------------------------------------------------


@dataclass
class _WeightingState:
    criterion: Criterion
    rating: int | None = None
    justification: str | None = None
    showstopper: bool = False
    bins: tuple[IntervalBin, ...] | None = None


def _apply_weighting_directives(
    layer2: Catalogue, directives: tuple[Directive, ...]
) -> tuple[dict[CriterionIndex, _WeightingState], list[DerivationIssue]]:
    state = {c.index: _WeightingState(criterion=c) for c in layer2.criteria}
    issues: list[DerivationIssue] = []

    for d in directives:
        if not isinstance(d, (Rate, MarkShowstopper, DefineIntervals, RewordForScale)):
            issues.append(
                DerivationIssue(
                    "invalid-directive",
                    getattr(d, "index", None),
                    f"{type(d).__name__} is not a weighting directive",
                )
            )
            continue
        s = state.get(d.index)
        if s is None:
            issues.append(
                DerivationIssue(
                    "unknown-index", d.index, f"{type(d).__name__} targets a missing criterion"
                )
            )
            continue
        if isinstance(d, Rate):
            if s.rating is not None:
                issues.append(
                    DerivationIssue(
                        "duplicate-rating", d.index, "criterion was already rated"
                    )
                )
                continue
            s.rating = d.rating
            if d.justification is not None:
                s.justification = d.justification
        elif isinstance(d, MarkShowstopper):
            s.showstopper = d.flag
        elif isinstance(d, RewordForScale):
            updates: dict = {"question": d.new_question}
            if d.new_answer_kind is not None:
                updates["answer_kind"] = d.new_answer_kind
            s.criterion = replace(s.criterion, **updates)
        else:  # DefineIntervals
            if not isinstance(s.criterion.answer_kind, NumericQuantity):
                issues.append(
                    DerivationIssue(
                        "bins-on-qualitative",
                        d.index,
                        "interval bins require a numeric answer kind",
                    )
                )
                continue
            s.bins = d.bins

    return state, issues


def derive_layer3(layer2: Catalogue, script: DerivationScript) -> Catalogue:
    """Apply a weighting script: rate everything, flag showstoppers, assign
    scales, normalize weights.

    Every criterion must receive exactly one rating; a missing-rating issue is
    reported for each unrated index. Unmarked criteria default to
    showstopper=False.
    """
    if layer2.layer != 2:
        raise WrongLayerError(f"weighting starts from layer 2, got layer {layer2.layer}")
    if script.target_layer != 3:
        raise WrongLayerError(
            f"weighting script must target layer 3, got {script.target_layer}"
        )

    state, issues = _apply_weighting_directives(layer2, script.directives)

    for c in layer2.criteria:
        if state[c.index].rating is None:
            issues.append(
                DerivationIssue("missing-rating", c.index, "criterion received no rating")
            )
    if issues:
        raise DerivationError(tuple(issues))

    ratings = [state[c.index].rating for c in layer2.criteria]
    weights = normalize_weights(ratings)

    criteria = []
    for c, weight in zip(layer2.criteria, weights):
        s = state[c.index]
        criteria.append(
            replace(
                s.criterion,
                rating=s.rating,
                showstopper=s.showstopper,
                scale=assign_scale(s.rating, s.showstopper, s.criterion.answer_kind, s.bins),
                weight=weight,
                justification=s.justification if s.justification is not None else c.justification,
            )
        )

    return Catalogue(
        id=script.new_id or f"{layer2.id}-layer3",
        layer=3,
        title=script.new_title or layer2.title,
        domain_label=script.domain_label if script.domain_label is not None else layer2.domain_label,
        context_label=script.context_label if script.context_label is not None else layer2.context_label,
        criteria=tuple(criteria),
        provenance=(ProvenanceNote(SCALE_RULE_NOTE), *script.directives),
        version=1,
    )


def derive(source: Catalogue, script: DerivationScript) -> Catalogue:
    """Dispatch on the script's target layer."""
    if script.target_layer == 2:
        return derive_layer2(source, script)
    return derive_layer3(source, script)


def replay_provenance(source: Catalogue, derived: Catalogue) -> Catalogue:
    """Re-derive a catalogue from its source by replaying its provenance.

    The result is bit-for-bit equal to the derived catalogue.
    """
    directives = tuple(e for e in derived.provenance if not isinstance(e, ProvenanceNote))
    script = DerivationScript(
        target_layer=derived.layer,
        directives=directives,
        new_id=derived.id,
        new_title=derived.title,
        domain_label=derived.domain_label,
        context_label=derived.context_label,
    )
    return derive(source, script)


# --- incremental preview (used by the workbench service) ---------------------


@dataclass(frozen=True)
class PreviewEntry:
    """Per-criterion view of a weighting in progress.

    weight and scale are present once the criterion is rated; weights are
    normalized over the rated subset only, so every new rating shifts them all.
    """

    index: CriterionIndex
    question: str
    rating: int | None
    showstopper: bool
    scale: ScaleSpec | None
    weight: float | None


@dataclass(frozen=True)
class WeightingPreview:
    entries: tuple[PreviewEntry, ...]
    unrated: tuple[CriterionIndex, ...]

    @property
    def complete(self) -> bool:
        return not self.unrated


def weighting_preview(
    layer2: Catalogue, directives: tuple[Directive, ...]
) -> WeightingPreview:
    """Evaluate a partial weighting script without requiring completeness.

    Raises DerivationError for structural problems (unknown index, bins on a
    qualitative criterion, duplicate rating); unrated criteria are fine.
    """
    if layer2.layer != 2:
        raise WrongLayerError(f"weighting starts from layer 2, got layer {layer2.layer}")
    state, issues = _apply_weighting_directives(layer2, directives)
    if issues:
        raise DerivationError(tuple(issues))

    rated = [c.index for c in layer2.criteria if state[c.index].rating is not None]
    weights: dict[CriterionIndex, float] = {}
    if rated:
        for idx, w in zip(rated, normalize_weights([state[i].rating for i in rated])):
            weights[idx] = w

    entries = []
    for c in layer2.criteria:
        s = state[c.index]
        scale = (
            assign_scale(s.rating, s.showstopper, s.criterion.answer_kind, s.bins)
            if s.rating is not None
            else None
        )
        entries.append(
            PreviewEntry(
                index=c.index,
                question=s.criterion.question,
                rating=s.rating,
                showstopper=s.showstopper,
                scale=scale,
                weight=weights.get(c.index),
            )
        )
    unrated = tuple(c.index for c in layer2.criteria if state[c.index].rating is None)
    return WeightingPreview(entries=tuple(entries), unrated=unrated)
