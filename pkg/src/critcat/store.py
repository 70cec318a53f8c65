"""Document formats and persistence.

Every value round-trips through UTF-8 JSON with an explicit format_version,
all optional fields written out as null, and a fixed key order, so two equal
values always serialize to identical bytes. File writes are atomic
(write-temp-then-rename).
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any

from .errors import (
    CatalogueValidationError,
    DerivationIssue,
    DocumentError,
    UnsupportedFormatVersionError,
)
from .layers import (
    DefineIntervals,
    DerivationScript,
    Directive,
    MarkShowstopper,
    ProvenanceEntry,
    ProvenanceNote,
    Rate,
    Remove,
    Reword,
    RewordForScale,
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
    Perturbation,
    SetRating,
    SolutionProfile,
    ToggleShowstopper,
)

FORMAT_VERSION = 1

REPORT_FORMATS = ("structured", "table", "markdown")


# --- low-level helpers --------------------------------------------------------


def _dumps(document: dict) -> bytes:
    return (json.dumps(document, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def _loads(data: bytes | str) -> Any:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise DocumentError(
            f"malformed document at line {e.lineno} column {e.colno}: {e.msg}"
        ) from None


def _require(obj: Any, key: str, kind: type | tuple[type, ...], path: str) -> Any:
    if not isinstance(obj, dict):
        raise DocumentError(f"{path}: expected an object")
    if key not in obj:
        raise DocumentError(f"{path}.{key}: missing field")
    value = obj[key]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise DocumentError(f"{path}.{key}: unexpected type {type(value).__name__}")
    return value


def _optional(obj: dict, key: str, path: str) -> Any:
    if key not in obj:
        raise DocumentError(f"{path}.{key}: missing field (write null when absent)")
    return obj[key]


def _check_format_version(obj: Any, path: str) -> None:
    version = _require(obj, "format_version", int, path)
    if version != FORMAT_VERSION:
        raise UnsupportedFormatVersionError(version)


def _edge_to_json(value: float) -> float | None:
    return None if math.isinf(value) else value


def _edge_from_json(value: Any, path: str, sign: float) -> float:
    if value is None:
        return math.inf * sign
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{path}: bin edge must be a number or null")
    return float(value)


def atomic_write(path: str | Path, data: bytes) -> None:
    """Write bytes so readers never observe a partial file."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- answer kinds and scales --------------------------------------------------


def _answer_kind_to_json(kind: AnswerKind) -> dict:
    if isinstance(kind, Qualitative):
        return {"kind": "qualitative"}
    return {"kind": "numeric", "unit": kind.unit, "polarity": kind.polarity.value}


def _answer_kind_from_json(obj: Any, path: str) -> AnswerKind:
    label = _require(obj, "kind", str, path)
    if label == "qualitative":
        return Qualitative()
    if label == "numeric":
        unit = _require(obj, "unit", str, path)
        polarity = _require(obj, "polarity", str, path)
        try:
            return NumericQuantity(unit=unit, polarity=Polarity(polarity))
        except ValueError:
            raise DocumentError(f"{path}.polarity: unknown polarity {polarity!r}") from None
    raise DocumentError(f"{path}.kind: unknown answer kind {label!r}")


def _bins_to_json(bins: tuple[IntervalBin, ...]) -> list[dict]:
    return [
        {"label": b.label, "lo": _edge_to_json(b.lo), "hi": _edge_to_json(b.hi)}
        for b in bins
    ]


def _bins_from_json(value: Any, path: str) -> tuple[IntervalBin, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"{path}: bins must be a list")
    bins = []
    for i, item in enumerate(value):
        label = _require(item, "label", str, f"{path}[{i}]")
        lo = _edge_from_json(_optional(item, "lo", f"{path}[{i}]"), f"{path}[{i}].lo", -1.0)
        hi = _edge_from_json(_optional(item, "hi", f"{path}[{i}]"), f"{path}[{i}].hi", 1.0)
        try:
            bins.append(IntervalBin(label=label, lo=lo, hi=hi))
        except ValueError as e:
            raise DocumentError(f"{path}[{i}]: {e}") from None
    return tuple(bins)


def _scale_to_json(scale: ScaleSpec | None) -> dict | None:
    if scale is None:
        return None
    if isinstance(scale, BooleanScale):
        return {"kind": "boolean"}
    if isinstance(scale, LikertScale):
        return {"kind": "likert"}
    if isinstance(scale, NumericScale):
        return {"kind": "numeric", "unit": scale.unit, "polarity": scale.polarity.value}
    return {"kind": "intervals", "bins": _bins_to_json(scale.bins)}


def _scale_from_json(obj: Any, path: str) -> ScaleSpec | None:
    if obj is None:
        return None
    label = _require(obj, "kind", str, path)
    if label == "boolean":
        return BooleanScale()
    if label == "likert":
        return LikertScale()
    if label == "numeric":
        unit = _require(obj, "unit", str, path)
        polarity = _require(obj, "polarity", str, path)
        try:
            return NumericScale(unit=unit, polarity=Polarity(polarity))
        except ValueError:
            raise DocumentError(f"{path}.polarity: unknown polarity {polarity!r}") from None
    if label == "intervals":
        bins = _bins_from_json(_optional(obj, "bins", path), f"{path}.bins")
        try:
            return IntervalScale(bins)
        except ValueError as e:
            raise DocumentError(f"{path}.bins: {e}") from None
    raise DocumentError(f"{path}.kind: unknown scale {label!r}")


def _index_from_json(value: Any, path: str) -> CriterionIndex:
    if not isinstance(value, str):
        raise DocumentError(f"{path}: criterion index must be a string like '2.4'")
    try:
        return CriterionIndex.parse(value)
    except ValueError as e:
        raise DocumentError(f"{path}: {e}") from None


# --- catalogue documents --------------------------------------------------------


def _criterion_to_json(c: Criterion) -> dict:
    return {
        "index": str(c.index),
        "category": c.category,
        "question": c.question,
        "original_question": c.original_question,
        "answer_kind": _answer_kind_to_json(c.answer_kind),
        "rating": c.rating,
        "showstopper": c.showstopper,
        "scale": _scale_to_json(c.scale),
        "weight": c.weight,
        "justification": c.justification,
    }


def _criterion_from_json(obj: Any, path: str) -> Criterion:
    index = _index_from_json(_require(obj, "index", str, path), f"{path}.index")
    rating = _optional(obj, "rating", path)
    if rating is not None and (isinstance(rating, bool) or not isinstance(rating, int)):
        raise DocumentError(f"{path}.rating: must be an integer or null")
    showstopper = _optional(obj, "showstopper", path)
    if showstopper is not None and not isinstance(showstopper, bool):
        raise DocumentError(f"{path}.showstopper: must be a boolean or null")
    weight = _optional(obj, "weight", path)
    if weight is not None and (isinstance(weight, bool) or not isinstance(weight, (int, float))):
        raise DocumentError(f"{path}.weight: must be a number or null")
    justification = _optional(obj, "justification", path)
    if justification is not None and not isinstance(justification, str):
        raise DocumentError(f"{path}.justification: must be a string or null")
    return Criterion(
        index=index,
        category=_require(obj, "category", str, path),
        question=_require(obj, "question", str, path),
        original_question=_require(obj, "original_question", str, path),
        answer_kind=_answer_kind_from_json(_require(obj, "answer_kind", dict, path), f"{path}.answer_kind"),
        rating=rating,
        showstopper=showstopper,
        scale=_scale_from_json(_optional(obj, "scale", path), f"{path}.scale"),
        weight=float(weight) if weight is not None else None,
        justification=justification,
    )


def _directive_to_json(d: ProvenanceEntry) -> dict:
    if isinstance(d, Remove):
        return {"type": "remove", "index": str(d.index), "justification": d.justification}
    if isinstance(d, Reword):
        return {
            "type": "reword",
            "index": str(d.index),
            "new_question": d.new_question,
            "new_answer_kind": _answer_kind_to_json(d.new_answer_kind)
            if d.new_answer_kind is not None
            else None,
            "justification": d.justification,
        }
    if isinstance(d, Rate):
        return {
            "type": "rate",
            "index": str(d.index),
            "rating": d.rating,
            "justification": d.justification,
        }
    if isinstance(d, MarkShowstopper):
        return {"type": "mark_showstopper", "index": str(d.index), "flag": d.flag}
    if isinstance(d, DefineIntervals):
        return {"type": "define_intervals", "index": str(d.index), "bins": _bins_to_json(d.bins)}
    if isinstance(d, RewordForScale):
        return {
            "type": "reword_for_scale",
            "index": str(d.index),
            "new_question": d.new_question,
            "new_answer_kind": _answer_kind_to_json(d.new_answer_kind)
            if d.new_answer_kind is not None
            else None,
        }
    if isinstance(d, ProvenanceNote):
        return {"type": "note", "text": d.text}
    raise TypeError(f"unknown provenance entry {type(d).__name__}")


def _directive_from_json(obj: Any, path: str) -> ProvenanceEntry:
    label = _require(obj, "type", str, path)
    try:
        if label == "note":
            return ProvenanceNote(text=_require(obj, "text", str, path))
        if label == "remove":
            return Remove(
                index=_index_from_json(_require(obj, "index", str, path), f"{path}.index"),
                justification=_require(obj, "justification", str, path),
            )
        if label == "reword":
            kind = _optional(obj, "new_answer_kind", path)
            justification = _optional(obj, "justification", path)
            if justification is not None and not isinstance(justification, str):
                raise DocumentError(f"{path}.justification: must be a string or null")
            return Reword(
                index=_index_from_json(_require(obj, "index", str, path), f"{path}.index"),
                new_question=_require(obj, "new_question", str, path),
                new_answer_kind=_answer_kind_from_json(kind, f"{path}.new_answer_kind")
                if kind is not None
                else None,
                justification=justification,
            )
        if label == "rate":
            justification = _optional(obj, "justification", path)
            if justification is not None and not isinstance(justification, str):
                raise DocumentError(f"{path}.justification: must be a string or null")
            return Rate(
                index=_index_from_json(_require(obj, "index", str, path), f"{path}.index"),
                rating=_require(obj, "rating", int, path),
                justification=justification,
            )
        if label == "mark_showstopper":
            return MarkShowstopper(
                index=_index_from_json(_require(obj, "index", str, path), f"{path}.index"),
                flag=_require(obj, "flag", bool, path),
            )
        if label == "define_intervals":
            return DefineIntervals(
                index=_index_from_json(_require(obj, "index", str, path), f"{path}.index"),
                bins=_bins_from_json(_optional(obj, "bins", path), f"{path}.bins"),
            )
        if label == "reword_for_scale":
            kind = _optional(obj, "new_answer_kind", path)
            return RewordForScale(
                index=_index_from_json(_require(obj, "index", str, path), f"{path}.index"),
                new_question=_require(obj, "new_question", str, path),
                new_answer_kind=_answer_kind_from_json(kind, f"{path}.new_answer_kind")
                if kind is not None
                else None,
            )
    except ValueError as e:
        raise DocumentError(f"{path}: {e}") from None
    raise DocumentError(f"{path}.type: unknown directive type {label!r}")


def catalogue_to_document(catalogue: Catalogue) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "id": catalogue.id,
        "layer": catalogue.layer,
        "title": catalogue.title,
        "domain_label": catalogue.domain_label,
        "context_label": catalogue.context_label,
        "criteria": [_criterion_to_json(c) for c in catalogue.criteria],
        "provenance": [_directive_to_json(d) for d in catalogue.provenance],
        "version": catalogue.version,
    }


def catalogue_from_document(obj: Any, validate: bool = True) -> Catalogue:
    path = "catalogue"
    _check_format_version(obj, path)
    criteria_json = _require(obj, "criteria", list, path)
    criteria = tuple(
        _criterion_from_json(item, f"{path}.criteria[{i}]")
        for i, item in enumerate(criteria_json)
    )
    provenance_json = _require(obj, "provenance", list, path)
    provenance = tuple(
        _directive_from_json(item, f"{path}.provenance[{i}]")
        for i, item in enumerate(provenance_json)
    )
    catalogue = Catalogue(
        id=_require(obj, "id", str, path),
        layer=_require(obj, "layer", int, path),
        title=_require(obj, "title", str, path),
        domain_label=_require(obj, "domain_label", str, path),
        context_label=_require(obj, "context_label", str, path),
        criteria=criteria,
        provenance=provenance,
        version=_require(obj, "version", int, path),
    )
    if validate:
        report = validate_catalogue(catalogue)
        if not report.ok:
            raise CatalogueValidationError(report)
    return catalogue


def serialize_catalogue(catalogue: Catalogue) -> bytes:
    return _dumps(catalogue_to_document(catalogue))


def load_catalogue(data: bytes | str, validate: bool = True) -> Catalogue:
    return catalogue_from_document(_loads(data), validate=validate)


# --- script documents -----------------------------------------------------------


def script_to_document(script: DerivationScript) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "target_layer": script.target_layer,
        "directives": [_directive_to_json(d) for d in script.directives],
        "new_id": script.new_id,
        "new_title": script.new_title,
        "domain_label": script.domain_label,
        "context_label": script.context_label,
    }


def script_from_document(obj: Any) -> DerivationScript:
    path = "script"
    _check_format_version(obj, path)
    directives_json = _require(obj, "directives", list, path)
    directives = []
    for i, item in enumerate(directives_json):
        d = _directive_from_json(item, f"{path}.directives[{i}]")
        if isinstance(d, ProvenanceNote):
            raise DocumentError(f"{path}.directives[{i}]: notes are not directives")
        directives.append(d)
    fields = {}
    for key in ("new_id", "new_title", "domain_label", "context_label"):
        value = _optional(obj, key, path)
        if value is not None and not isinstance(value, str):
            raise DocumentError(f"{path}.{key}: must be a string or null")
        fields[key] = value
    try:
        return DerivationScript(
            target_layer=_require(obj, "target_layer", int, path),
            directives=tuple(directives),
            **fields,
        )
    except ValueError as e:
        raise DocumentError(f"{path}: {e}") from None


def serialize_script(script: DerivationScript) -> bytes:
    return _dumps(script_to_document(script))


def load_script(data: bytes | str) -> DerivationScript:
    return script_from_document(_loads(data))


# --- profile documents -----------------------------------------------------------


def _answer_to_json(answer: AnswerValue) -> dict:
    if isinstance(answer, BooleanAnswer):
        return {"kind": "boolean", "value": answer.value}
    if isinstance(answer, LikertAnswer):
        return {"kind": "likert", "value": answer.value}
    return {"kind": "numeric", "value": answer.raw, "unit": answer.unit}


def _answer_from_json(obj: Any, path: str) -> AnswerValue:
    label = _require(obj, "kind", str, path)
    try:
        if label == "boolean":
            return BooleanAnswer(value=_require(obj, "value", int, path))
        if label == "likert":
            return LikertAnswer(value=_require(obj, "value", int, path))
        if label == "numeric":
            unit = obj.get("unit", "")
            if not isinstance(unit, str):
                raise DocumentError(f"{path}.unit: must be a string")
            return NumericAnswer(raw=_require(obj, "value", float, path), unit=unit)
    except ValueError as e:
        raise DocumentError(f"{path}: {e}") from None
    raise DocumentError(f"{path}.kind: unknown answer kind {label!r}")


def profile_to_document(profile: SolutionProfile) -> dict:
    answers = {
        str(index): _answer_to_json(profile.answers[index])
        for index in sorted(profile.answers)
    }
    return {
        "format_version": FORMAT_VERSION,
        "name": profile.name,
        "vendor": profile.vendor,
        "answers": answers,
        "notes": profile.notes,
    }


def profile_from_document(obj: Any) -> SolutionProfile:
    path = "profile"
    _check_format_version(obj, path)
    answers_json = _require(obj, "answers", dict, path)
    answers = {}
    for key, value in answers_json.items():
        index = _index_from_json(key, f"{path}.answers[{key!r}]")
        answers[index] = _answer_from_json(value, f"{path}.answers.{key}")
    return SolutionProfile(
        name=_require(obj, "name", str, path),
        vendor=_require(obj, "vendor", str, path),
        answers=answers,
        notes=_require(obj, "notes", str, path),
    )


def serialize_profile(profile: SolutionProfile) -> bytes:
    return _dumps(profile_to_document(profile))


def load_profile(data: bytes | str) -> SolutionProfile:
    return profile_from_document(_loads(data))


# --- comparison report documents ---------------------------------------------------


def _result_to_json(result: MatchingScoreResult, rank: int) -> dict:
    return {
        "name": result.solution,
        "rank": rank,
        "ms": result.ms,
        "ms_max": result.ms_max,
        "ms_fraction": result.ms_fraction,
        "per_criterion": [
            {"index": str(index), "contribution": value}
            for index, value in result.per_criterion
        ],
        "per_category": {k: result.per_category[k] for k in sorted(result.per_category)},
        "failed_showstoppers": [str(i) for i in result.failed_showstoppers],
    }


def report_to_document(report: ComparisonReport) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "catalogue_id": report.catalogue_id,
        "catalogue_version": report.catalogue_version,
        "cohort": [
            _result_to_json(result, rank)
            for rank, result in enumerate(report.cohort, start=1)
        ],
        "ties": [list(group) for group in report.ties],
        "disqualified": list(report.disqualified),
    }


def report_from_document(obj: Any) -> ComparisonReport:
    path = "report"
    _check_format_version(obj, path)
    cohort = []
    for i, item in enumerate(_require(obj, "cohort", list, path)):
        entry_path = f"{path}.cohort[{i}]"
        per_criterion = tuple(
            (
                _index_from_json(_require(pc, "index", str, f"{entry_path}.per_criterion[{j}]"), f"{entry_path}.per_criterion[{j}].index"),
                _require(pc, "contribution", float, f"{entry_path}.per_criterion[{j}]"),
            )
            for j, pc in enumerate(_require(item, "per_criterion", list, entry_path))
        )
        per_category_json = _require(item, "per_category", dict, entry_path)
        per_category = {}
        for key, value in per_category_json.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise DocumentError(f"{entry_path}.per_category.{key}: must be a number")
            per_category[key] = float(value)
        failed = tuple(
            _index_from_json(v, f"{entry_path}.failed_showstoppers[{j}]")
            for j, v in enumerate(_require(item, "failed_showstoppers", list, entry_path))
        )
        cohort.append(
            MatchingScoreResult(
                solution=_require(item, "name", str, entry_path),
                ms=_require(item, "ms", float, entry_path),
                ms_max=_require(item, "ms_max", float, entry_path),
                ms_fraction=_require(item, "ms_fraction", float, entry_path),
                per_criterion=per_criterion,
                per_category=per_category,
                failed_showstoppers=failed,
            )
        )
    ties = []
    for i, group in enumerate(_require(obj, "ties", list, path)):
        if not isinstance(group, list) or not all(isinstance(n, str) for n in group):
            raise DocumentError(f"{path}.ties[{i}]: must be a list of names")
        ties.append(tuple(group))
    disqualified = _require(obj, "disqualified", list, path)
    if not all(isinstance(n, str) for n in disqualified):
        raise DocumentError(f"{path}.disqualified: must be a list of names")
    return ComparisonReport(
        catalogue_id=_require(obj, "catalogue_id", str, path),
        catalogue_version=_require(obj, "catalogue_version", int, path),
        cohort=tuple(cohort),
        ties=tuple(ties),
        disqualified=tuple(disqualified),
    )


def _tie_mark(report: ComparisonReport, name: str) -> str:
    return "tie" if any(name in group for group in report.ties) else ""


def _report_rows(report: ComparisonReport, locale: str) -> list[tuple[str, ...]]:
    rows = []
    for rank, result in enumerate(report.cohort, start=1):
        failed = ", ".join(str(i) for i in result.failed_showstoppers) or "-"
        notes = []
        if _tie_mark(report, result.solution):
            notes.append("tie")
        if result.solution in report.disqualified:
            notes.append("disqualified")
        rows.append(
            (
                str(rank),
                result.solution,
                f"{result.ms:.4f}",
                format_percent(result.ms_fraction, locale),
                failed,
                ", ".join(notes),
            )
        )
    return rows


_REPORT_HEADER = ("rank", "solution", "ms", "fit", "failed showstoppers", "notes")


def render_report_table(report: ComparisonReport, locale: str = "comma") -> str:
    rows = [_REPORT_HEADER, *_report_rows(report, locale)]
    widths = [max(len(row[i]) for row in rows) for i in range(len(_REPORT_HEADER))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_report_markdown(report: ComparisonReport, locale: str = "comma") -> str:
    header = "| " + " | ".join(_REPORT_HEADER) + " |"
    divider = "| " + " | ".join("---" for _ in _REPORT_HEADER) + " |"
    lines = [header, divider]
    for row in _report_rows(report, locale):
        lines.append("| " + " | ".join(cell or " " for cell in row) + " |")
    return "\n".join(lines) + "\n"


def save_report(report: ComparisonReport, format: str = "structured", locale: str = "comma") -> bytes:
    """Serialize a comparison report.

    "structured" is loss-free JSON; "table" and "markdown" render ranking,
    score, fit percentage and showstopper failures for humans.
    """
    if format == "structured":
        return _dumps(report_to_document(report))
    if format == "table":
        return render_report_table(report, locale).encode("utf-8")
    if format == "markdown":
        return render_report_markdown(report, locale).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def load_report(data: bytes | str) -> ComparisonReport:
    return report_from_document(_loads(data))


# --- auxiliary wire fragments (service and UI payloads) ----------------------------


def validation_to_json(report: "ValidationReport") -> dict:
    return {
        "ok": report.ok,
        "violations": [
            {
                "rule": v.rule,
                "index": str(v.index) if v.index is not None else None,
                "message": v.message,
            }
            for v in report.violations
        ],
    }


def stats_to_json(stats: "CatalogueStats") -> dict:
    return {
        "n_total": stats.n_total,
        "n_numeric": stats.n_numeric,
        "n_boolean": stats.n_boolean,
        "n_likert": stats.n_likert,
    }


def issues_to_json(issues: tuple["DerivationIssue", ...]) -> list[dict]:
    return [
        {
            "rule": issue.rule,
            "index": str(issue.index) if issue.index is not None else None,
            "message": issue.message,
        }
        for issue in issues
    ]


def parse_directive(obj: Any, path: str = "directive") -> Directive:
    d = _directive_from_json(obj, path)
    if isinstance(d, ProvenanceNote):
        raise DocumentError(f"{path}: notes are not directives")
    return d


def directive_to_json(directive: ProvenanceEntry) -> dict:
    return _directive_to_json(directive)


def perturbation_to_json(p: "Perturbation") -> dict:
    if isinstance(p, SetRating):
        return {"type": "set_rating", "index": str(p.index), "rating": p.rating}
    if isinstance(p, ToggleShowstopper):
        return {"type": "toggle_showstopper", "index": str(p.index)}
    return {
        "type": "override_answer",
        "solution": p.solution,
        "index": str(p.index),
        "answer": _answer_to_json(p.answer),
    }


def perturbation_from_json(obj: Any, path: str = "perturbation") -> "Perturbation":
    label = _require(obj, "type", str, path)
    index = _index_from_json(_require(obj, "index", str, path), f"{path}.index")
    if label == "set_rating":
        return SetRating(index=index, rating=_require(obj, "rating", int, path))
    if label == "toggle_showstopper":
        return ToggleShowstopper(index=index)
    if label == "override_answer":
        return OverrideAnswer(
            solution=_require(obj, "solution", str, path),
            index=index,
            answer=_answer_from_json(_require(obj, "answer", dict, path), f"{path}.answer"),
        )
    raise DocumentError(f"{path}.type: unknown perturbation type {label!r}")


# --- files ------------------------------------------------------------------------


def read_catalogue_file(path: str | Path, validate: bool = True) -> Catalogue:
    return load_catalogue(Path(path).read_bytes(), validate=validate)


def write_catalogue_file(path: str | Path, catalogue: Catalogue) -> None:
    atomic_write(path, serialize_catalogue(catalogue))


def read_script_file(path: str | Path) -> DerivationScript:
    return load_script(Path(path).read_bytes())


def write_script_file(path: str | Path, script: DerivationScript) -> None:
    atomic_write(path, serialize_script(script))


def read_profile_file(path: str | Path) -> SolutionProfile:
    return load_profile(Path(path).read_bytes())


def write_profile_file(path: str | Path, profile: SolutionProfile) -> None:
    atomic_write(path, serialize_profile(profile))
