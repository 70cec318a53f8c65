"""Domain model for layered criteria catalogues.

A catalogue is an ordered list of criteria tagged with a layer:

* layer 1 — general questions, no weighting metadata at all;
* layer 2 — domain-refined subset, still unweighted;
* layer 3 — rated, showstopper-flagged, scale-typed and weight-normalized.

Everything here is an immutable value; validation never raises, it reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from .errors import WrongLayerError

if TYPE_CHECKING:
    from .layers import ProvenanceEntry

# Tolerance for the layer-3 "weights sum to 1" invariant.
WEIGHT_SUM_TOLERANCE = 1e-9

# The five agreement levels a Likert-scaled criterion is answered on,
# worst to best (answer values 1..5).
LIKERT_LEVELS = (
    "Strongly disagree",
    "Disagree",
    "Neither agree nor disagree",
    "Agree",
    "Strongly agree",
)


class Polarity(str, Enum):
    """Whether a larger raw numeric answer is better (benefit) or worse (cost)."""

    BENEFIT = "benefit"
    COST = "cost"


@dataclass(frozen=True, order=True)
class CriterionIndex:
    """A two-part criterion index, rendered "major.minor" (e.g. "2.4").

    major groups criteria by category; minor is the position in the group.
    """

    major: int
    minor: int

    def __post_init__(self) -> None:
        if self.major < 1 or self.minor < 1:
            raise ValueError(
                f"index parts must be >= 1, got {self.major}.{self.minor}"
            )

    def __str__(self) -> str:
        return f"{self.major}.{self.minor}"

    @classmethod
    def parse(cls, text: str) -> "CriterionIndex":
        parts = text.strip().split(".")
        if len(parts) != 2:
            raise ValueError(f"criterion index must look like '2.4', got {text!r}")
        try:
            major, minor = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"criterion index must be two integers, got {text!r}"
            ) from None
        return cls(major, minor)


# --- answer kinds -----------------------------------------------------------


@dataclass(frozen=True)
class Qualitative:
    """The question is answered by judgement, not by a measured quantity."""


@dataclass(frozen=True)
class NumericQuantity:
    """The question specifically asks for a numeric value."""

    unit: str
    polarity: Polarity

    def __post_init__(self) -> None:
        if not isinstance(self.polarity, Polarity):
            raise ValueError("a numeric quantity must carry a polarity")


AnswerKind = Qualitative | NumericQuantity


# --- scales -----------------------------------------------------------------


@dataclass(frozen=True)
class BooleanScale:
    """Answered 0 or 1."""


@dataclass(frozen=True)
class LikertScale:
    """Answered on the five-level agreement scale (1..5, see LIKERT_LEVELS)."""


@dataclass(frozen=True)
class NumericScale:
    """Answered with a raw number; normalized against the cohort at scoring time."""

    unit: str
    polarity: Polarity


@dataclass(frozen=True)
class IntervalBin:
    """One labeled half-open range [lo, hi) of raw values.

    lo may be -inf and hi may be +inf for open ends.
    """

    label: str
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("interval bin label must be non-empty")
        if not self.lo < self.hi:
            raise ValueError(f"interval bin must have lo < hi, got [{self.lo}, {self.hi})")


@dataclass(frozen=True)
class IntervalScale:
    """Answered with a raw number mapped onto ordered bins, worst to best.

    The bins must tile a single contiguous range of raw values without
    overlap, and the worst-to-best order must traverse that range
    monotonically (ascending or descending).
    """

    bins: tuple[IntervalBin, ...]

    def __post_init__(self) -> None:
        bins = tuple(self.bins)
        object.__setattr__(self, "bins", bins)
        if len(bins) < 2:
            raise ValueError("an interval scale needs at least 2 bins")
        ascending = all(bins[i].hi == bins[i + 1].lo for i in range(len(bins) - 1))
        descending = all(bins[i + 1].hi == bins[i].lo for i in range(len(bins) - 1))
        if not (ascending or descending):
            raise ValueError(
                "interval bins must be contiguous and ordered worst to best"
            )

    @property
    def covered_range(self) -> tuple[float, float]:
        lows = min(b.lo for b in self.bins)
        highs = max(b.hi for b in self.bins)
        return lows, highs


ScaleSpec = BooleanScale | LikertScale | NumericScale | IntervalScale

# Stable labels used in documents and reports.
SCALE_LABELS: dict[type, str] = {
    BooleanScale: "boolean",
    LikertScale: "likert",
    NumericScale: "numeric",
    IntervalScale: "intervals",
}


def scale_label(scale: ScaleSpec) -> str:
    return SCALE_LABELS[type(scale)]


# --- criteria and catalogues ------------------------------------------------


@dataclass(frozen=True)
class Criterion:
    """One evaluation question.

    question holds the current wording; original_question the layer-1 wording.
    rating, showstopper, scale and weight are populated only at layer 3.
    """

    index: CriterionIndex
    category: str
    question: str
    original_question: str
    answer_kind: AnswerKind = field(default_factory=Qualitative)
    rating: int | None = None
    showstopper: bool | None = None
    scale: ScaleSpec | None = None
    weight: float | None = None
    justification: str | None = None


@dataclass(frozen=True)
class Catalogue:
    """An ordered criteria list at a given layer, with derivation provenance."""

    id: str
    layer: int
    title: str
    domain_label: str
    context_label: str
    criteria: tuple[Criterion, ...]
    provenance: tuple["ProvenanceEntry", ...] = ()
    version: int = 1

    def criterion(self, index: CriterionIndex) -> Criterion | None:
        for c in self.criteria:
            if c.index == index:
                return c
        return None

    @property
    def indices(self) -> tuple[CriterionIndex, ...]:
        return tuple(c.index for c in self.criteria)


@dataclass(frozen=True)
class CatalogueStats:
    """Partition of a layer-3 catalogue by scale: N = K + L + M."""

    n_total: int
    n_numeric: int
    n_boolean: int
    n_likert: int


# --- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One broken structural rule, tied to a criterion where applicable."""

    rule: str
    message: str
    index: CriterionIndex | None = None

    def __str__(self) -> str:
        where = f" at {self.index}" if self.index is not None else ""
        return f"{self.rule}{where}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> tuple[str, ...]:
        return tuple(v.rule for v in self.violations)


_LAYER3_REQUIRED = ("rating", "showstopper", "scale", "weight")


def validate_catalogue(catalogue: Catalogue) -> ValidationReport:
    """Check every structural rule for the catalogue's declared layer.

    Pure function; lists every violation, never just the first. An empty
    report means the catalogue honours all invariants for its layer.
    """
    violations: list[Violation] = []

    if catalogue.layer not in (1, 2, 3):
        violations.append(
            Violation("invalid-layer", f"layer must be 1, 2 or 3, got {catalogue.layer}")
        )

    seen: set[CriterionIndex] = set()
    for c in catalogue.criteria:
        if c.index in seen:
            violations.append(
                Violation("duplicate-index", f"index {c.index} occurs more than once", c.index)
            )
        seen.add(c.index)

        if not c.question.strip():
            violations.append(Violation("empty-question", "question is empty", c.index))

        if c.rating is not None and (not isinstance(c.rating, int) or not 1 <= c.rating <= 5):
            violations.append(
                Violation("rating-out-of-range", f"rating {c.rating!r} not in 1..5", c.index)
            )
        if c.weight is not None and not 0.0 < c.weight <= 1.0:
            violations.append(
                Violation("weight-out-of-range", f"weight {c.weight!r} not in (0, 1]", c.index)
            )

        if catalogue.layer == 3:
            for name in _LAYER3_REQUIRED:
                if getattr(c, name) is None:
                    violations.append(
                        Violation(f"missing-{name}", f"layer-3 criterion lacks {name}", c.index)
                    )
            if c.showstopper and c.scale is not None and not isinstance(c.scale, BooleanScale):
                violations.append(
                    Violation(
                        "showstopper-must-be-boolean",
                        f"showstopper criterion has {scale_label(c.scale)} scale",
                        c.index,
                    )
                )
        else:
            for name in _LAYER3_REQUIRED:
                if getattr(c, name) is not None:
                    violations.append(
                        Violation(
                            f"unexpected-{name}",
                            f"{name} is only meaningful at layer 3",
                            c.index,
                        )
                    )

    if catalogue.layer == 3 and catalogue.criteria:
        total = math.fsum(c.weight for c in catalogue.criteria if c.weight is not None)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            violations.append(
                Violation("weights-not-normalized", f"weights sum to {total!r}, expected 1")
            )

    return ValidationReport(tuple(violations))


def catalogue_stats(catalogue: Catalogue) -> CatalogueStats:
    """Count criteria per scale group of a layer-3 catalogue.

    Numeric and interval scales count together (both are answered with a raw
    number); the three counts always partition the total exactly.
    """
    if catalogue.layer != 3:
        raise WrongLayerError(
            f"catalogue stats need a layer-3 catalogue, got layer {catalogue.layer}"
        )
    n_numeric = n_boolean = n_likert = 0
    for c in catalogue.criteria:
        if isinstance(c.scale, (NumericScale, IntervalScale)):
            n_numeric += 1
        elif isinstance(c.scale, LikertScale):
            n_likert += 1
        else:
            n_boolean += 1
    return CatalogueStats(
        n_total=len(catalogue.criteria),
        n_numeric=n_numeric,
        n_boolean=n_boolean,
        n_likert=n_likert,
    )


def format_percent(fraction: float, locale: str = "comma") -> str:
    """Render a fraction as a one-decimal percentage, e.g. 0.0376 -> "3,8%".

    locale selects the decimal mark: "comma" (3,8%) or "period" (3.8%).
    """
    if locale not in ("comma", "period"):
        raise ValueError(f"locale must be 'comma' or 'period', got {locale!r}")
    text = f"{fraction * 100:.1f}%"
    return text.replace(".", ",") if locale == "comma" else text
