"""Exception types shared across the package.

Data-level problems that a report can describe (catalogue violations) are not
exceptions; see ``model.ValidationReport``. Exceptions are for contract
breaches: wrong layer, unknown index, unanswerable request, broken document.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .model import CriterionIndex, ValidationReport


class CritcatError(Exception):
    """Base class for all errors raised by this package."""


class WrongLayerError(CritcatError):
    """An operation was applied to a catalogue of the wrong layer."""


@dataclass(frozen=True)
class DerivationIssue:
    """One directive-level problem found while deriving a catalogue.

    rule is a stable kebab-case identifier (e.g. "unknown-index",
    "missing-rating", "bins-on-qualitative").
    """

    rule: str
    index: "CriterionIndex | None"
    message: str

    def __str__(self) -> str:
        if self.index is not None:
            return f"{self.rule}: {self.index}: {self.message}"
        return f"{self.rule}: {self.message}"


class DerivationError(CritcatError):
    """A derivation script could not be applied.

    Carries every issue found, never just the first.
    """

    def __init__(self, issues: "tuple[DerivationIssue, ...]"):
        self.issues = tuple(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


class EmptyRatingsError(CritcatError):
    """normalize_weights was called with an empty rating list."""


class UnknownIndexError(CritcatError):
    """A criterion index is not present in the target catalogue."""

    def __init__(self, index: "CriterionIndex", context: str = ""):
        self.index = index
        msg = f"unknown criterion index {index}"
        super().__init__(f"{msg} ({context})" if context else msg)


class InvalidRatingError(CritcatError):
    """A rating outside 1..5 was supplied."""

    def __init__(self, rating: object):
        self.rating = rating
        super().__init__(f"rating must be an integer in 1..5, got {rating!r}")


class UnknownSolutionError(CritcatError):
    """A perturbation or request referenced a solution name not in the cohort."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown solution {name!r}")


class MissingAnswerError(CritcatError):
    """A profile does not answer every criterion of the catalogue."""

    def __init__(self, solution: str, indices: "tuple[CriterionIndex, ...]"):
        self.solution = solution
        self.indices = tuple(indices)
        listed = ", ".join(str(i) for i in self.indices)
        super().__init__(f"profile {solution!r} is missing answers for: {listed}")


class ScaleMismatchError(CritcatError):
    """An answer's variant does not match the criterion's scale."""

    def __init__(self, index: "CriterionIndex", expected: str, got: str):
        self.index = index
        super().__init__(
            f"criterion {index} expects a {expected} answer, got {got}"
        )


class RawNotInCohortError(CritcatError):
    """normalize_numeric was given a raw value absent from the cohort values."""

    def __init__(self, raw: float):
        self.raw = raw
        super().__init__(f"raw value {raw!r} is not among the cohort values")


class OutOfRangeRawError(CritcatError):
    """A numeric answer falls outside the range covered by the interval bins."""

    def __init__(self, raw: float):
        self.raw = raw
        super().__init__(f"raw value {raw!r} is outside the covered interval range")


class PerturbationError(CritcatError):
    """A what-if perturbation produced a catalogue that no longer validates,
    or could not be applied at all."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        self.report = report
        super().__init__(message)


class DocumentError(CritcatError):
    """A document is malformed (bad JSON or wrong shape); names the position
    or field path."""


class UnsupportedFormatVersionError(DocumentError):
    """The document declares a format_version this code does not understand."""

    def __init__(self, version: object):
        self.version = version
        super().__init__(f"unsupported format_version {version!r}")


class CatalogueValidationError(CritcatError):
    """A parsed catalogue fails structural validation for its declared layer."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        lines = "; ".join(str(v) for v in report.violations)
        super().__init__(f"catalogue fails validation: {lines}")
