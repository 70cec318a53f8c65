"""Workbench HTTP service.

Exposes catalogues, derivation directives, solution profiles, comparisons and
ephemeral what-if evaluation over JSON. Every mutable resource carries a
version; mutations cite it via If-Match and a stale version is rejected (409)
without side effects. Derived catalogues are always recomputed from their
parent plus the accumulated directives, never patched, because one rating
change moves every weight.

The store is in-memory with an optional write-through snapshot of every
document to a directory. Single instance, no authentication.
"""

from __future__ import annotations

import hashlib
import threading
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import fixtures, store
from .errors import (
    CatalogueValidationError,
    CritcatError,
    DerivationError,
    DocumentError,
    MissingAnswerError,
    UnsupportedFormatVersionError,
    WrongLayerError,
)
from .layers import DerivationScript, derive, weighting_preview
from .model import Catalogue, catalogue_stats, scale_label, validate_catalogue
from .scoring import SolutionProfile, compare, whatif

FIXTURE_NAMES = ("general", "maas-expected")


# --- store ---------------------------------------------------------------------


@dataclass
class _CatalogueRecord:
    catalogue: Catalogue
    # directives accumulated per target layer, replayed from scratch on change
    pending: dict[int, list] = field(default_factory=dict)
    children: dict[int, str] = field(default_factory=dict)


@dataclass
class _ProfileRecord:
    profile: SolutionProfile
    version: int = 1


class WorkbenchStore:
    """In-memory resource store with per-store mutation serialization."""

    def __init__(self, snapshot_dir: Path | None = None):
        self.lock = threading.Lock()
        self.catalogues: dict[str, _CatalogueRecord] = {}
        self.profiles: dict[str, _ProfileRecord] = {}
        self.snapshot_dir = snapshot_dir
        if snapshot_dir is not None:
            snapshot_dir.mkdir(parents=True, exist_ok=True)

    def snapshot_catalogue(self, catalogue: Catalogue) -> None:
        if self.snapshot_dir is not None:
            path = self.snapshot_dir / f"{catalogue.id}.catalogue.json"
            store.atomic_write(path, store.serialize_catalogue(catalogue))

    def snapshot_profile(self, profile: SolutionProfile) -> None:
        if self.snapshot_dir is not None:
            path = self.snapshot_dir / f"{profile.name}.profile.json"
            store.atomic_write(path, store.serialize_profile(profile))

    def state_hash(self) -> str:
        """Hash of every stored document; unchanged means no side effects."""
        digest = hashlib.sha256()
        for cid in sorted(self.catalogues):
            record = self.catalogues[cid]
            digest.update(store.serialize_catalogue(record.catalogue))
            for layer in sorted(record.pending):
                digest.update(str(layer).encode())
                for directive in record.pending[layer]:
                    digest.update(
                        store._dumps(store.directive_to_json(directive))
                    )
        for name in sorted(self.profiles):
            record = self.profiles[name]
            digest.update(store.serialize_profile(record.profile))
            digest.update(str(record.version).encode())
        return digest.hexdigest()


# --- helpers -------------------------------------------------------------------


def _error(status: int, kind: str, **extra: Any) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": kind, **extra})


def _etag(version: int) -> str:
    return f'"{version}"'


def _parse_if_match(request: Request) -> int | None:
    raw = request.headers.get("if-match")
    if raw is None:
        return None
    raw = raw.strip().removeprefix("W/").strip('"')
    try:
        return int(raw)
    except ValueError:
        return None


def _catalogue_envelope(catalogue: Catalogue) -> dict:
    report = validate_catalogue(catalogue)
    stats = None
    if catalogue.layer == 3 and report.ok:
        stats = store.stats_to_json(catalogue_stats(catalogue))
    return {
        "catalogue": store.catalogue_to_document(catalogue),
        "validation": store.validation_to_json(report),
        "stats": stats,
        "version": catalogue.version,
    }


def _preview_to_json(preview) -> dict:
    return {
        "unrated": [str(i) for i in preview.unrated],
        "criteria": [
            {
                "index": str(e.index),
                "question": e.question,
                "rating": e.rating,
                "showstopper": e.showstopper,
                "scale": scale_label(e.scale) if e.scale is not None else None,
                "weight": e.weight,
            }
            for e in preview.entries
        ],
    }


async def _json_body(request: Request) -> Any:
    try:
        return await request.json()
    except Exception:
        raise DocumentError("request body is not valid JSON") from None


# --- application ------------------------------------------------------------------


def create_app(
    workbench: WorkbenchStore | None = None, snapshot_dir: Path | None = None
) -> FastAPI:
    app = FastAPI(title="critcat workbench", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
        expose_headers=["ETag"],
    )
    wb = workbench if workbench is not None else WorkbenchStore(snapshot_dir)
    app.state.workbench = wb

    @app.exception_handler(DocumentError)
    async def _document_error(_request, exc: DocumentError):
        return _error(400, "malformed-document", detail=str(exc))

    # -- catalogues ---------------------------------------------------------

    @app.post("/catalogues")
    async def create_catalogue(request: Request):
        body = await _json_body(request)
        if not isinstance(body, dict):
            return _error(400, "malformed-document", detail="expected a JSON object")
        if "fixture" in body:
            name = body["fixture"]
            if name == "general":
                catalogue = fixtures.general_catalogue()
            elif name == "maas-expected":
                catalogue = fixtures.maas_expected_layer3()
            else:
                return _error(
                    400, "unknown-fixture", detail=f"fixture must be one of {FIXTURE_NAMES}"
                )
        else:
            document = body.get("document", body)
            try:
                catalogue = store.catalogue_from_document(document, validate=False)
            except UnsupportedFormatVersionError as e:
                return _error(400, "unsupported-format-version", detail=str(e))
            except DocumentError as e:
                return _error(400, "malformed-document", detail=str(e))
        report = validate_catalogue(catalogue)
        if not report.ok:
            return _error(
                422, "validation-failure", validation=store.validation_to_json(report)
            )
        with wb.lock:
            if catalogue.id in wb.catalogues:
                return _error(409, "already-exists", id=catalogue.id)
            wb.catalogues[catalogue.id] = _CatalogueRecord(catalogue=catalogue)
            wb.snapshot_catalogue(catalogue)
        return JSONResponse(
            status_code=201,
            content={"id": catalogue.id, "criteria_count": len(catalogue.criteria),
                     **_catalogue_envelope(catalogue)},
            headers={"ETag": _etag(catalogue.version)},
        )

    @app.get("/catalogues")
    async def list_catalogues():
        items = [
            {
                "id": record.catalogue.id,
                "layer": record.catalogue.layer,
                "title": record.catalogue.title,
                "version": record.catalogue.version,
                "criteria_count": len(record.catalogue.criteria),
            }
            for record in (wb.catalogues[cid] for cid in sorted(wb.catalogues))
        ]
        return {"catalogues": items}

    @app.get("/catalogues/{catalogue_id}")
    async def get_catalogue(catalogue_id: str):
        record = wb.catalogues.get(catalogue_id)
        if record is None:
            return _error(404, "unknown-catalogue", id=catalogue_id)
        return JSONResponse(
            content=_catalogue_envelope(record.catalogue),
            headers={"ETag": _etag(record.catalogue.version)},
        )

    # -- layer transitions ----------------------------------------------------

    @app.post("/catalogues/{catalogue_id}/directives")
    async def post_directives(catalogue_id: str, request: Request):
        body = await _json_body(request)
        if not isinstance(body, dict):
            return _error(400, "malformed-document", detail="expected a JSON object")
        cited = _parse_if_match(request)
        if cited is None:
            return _error(428, "version-required", detail="send If-Match with the parent version")
        target_layer = body.get("target_layer")
        if target_layer not in (2, 3):
            return _error(400, "malformed-document", detail="target_layer must be 2 or 3")
        raw_directives = body.get("directives", [])
        if not isinstance(raw_directives, list):
            return _error(400, "malformed-document", detail="directives must be a list")
        try:
            new_directives = [
                store.parse_directive(obj, f"directives[{i}]")
                for i, obj in enumerate(raw_directives)
            ]
        except DocumentError as e:
            return _error(400, "malformed-document", detail=str(e))
        finalize = bool(body.get("finalize", False))

        with wb.lock:
            record = wb.catalogues.get(catalogue_id)
            if record is None:
                return _error(404, "unknown-catalogue", id=catalogue_id)
            parent = record.catalogue
            if cited != parent.version:
                return _error(409, "stale-version", current_version=parent.version)
            if target_layer != parent.layer + 1:
                return _error(
                    422,
                    "wrong-layer",
                    detail=f"cannot derive layer {target_layer} from layer {parent.layer}",
                )

            pending = list(record.pending.get(target_layer, ())) + new_directives
            child_id = record.children.get(target_layer, f"{catalogue_id}::layer{target_layer}")
            script = DerivationScript(
                target_layer=target_layer,
                directives=tuple(pending),
                new_id=child_id,
                new_title=parent.title,
            )

            draft = None
            if target_layer == 3:
                try:
                    preview = weighting_preview(parent, tuple(pending))
                except DerivationError as e:
                    return _error(422, "directive-errors", issues=store.issues_to_json(e.issues))
                if preview.unrated and finalize:
                    return _error(
                        422,
                        "missing-rating",
                        indices=[str(i) for i in preview.unrated],
                    )
                if preview.unrated:
                    draft = _preview_to_json(preview)

            child_envelope = None
            if draft is None:
                try:
                    child = derive(parent, script)
                except DerivationError as e:
                    return _error(422, "directive-errors", issues=store.issues_to_json(e.issues))
                previous = wb.catalogues.get(child_id)
                version = previous.catalogue.version + 1 if previous else 1
                child = replace(child, version=version)
                wb.catalogues[child_id] = _CatalogueRecord(catalogue=child)
                record.children[target_layer] = child_id
                wb.snapshot_catalogue(child)
                child_envelope = {"id": child_id, **_catalogue_envelope(child)}

            # commit: pending directives are provenance-in-waiting on the parent
            record.pending[target_layer] = pending
            record.catalogue = replace(parent, version=parent.version + 1)
            wb.snapshot_catalogue(record.catalogue)

            content = {"parent": {"id": catalogue_id, "version": record.catalogue.version}}
            if child_envelope is not None:
                content["child"] = child_envelope
            else:
                content["draft"] = draft
            return JSONResponse(
                content=content, headers={"ETag": _etag(record.catalogue.version)}
            )

    # -- solutions -------------------------------------------------------------

    def _upsert_profile(profile: SolutionProfile, cited: int | None):
        with wb.lock:
            existing = wb.profiles.get(profile.name)
            if existing is not None and cited is not None and cited != existing.version:
                return _error(409, "stale-version", current_version=existing.version)
            version = existing.version + 1 if existing else 1
            wb.profiles[profile.name] = _ProfileRecord(profile=profile, version=version)
            wb.snapshot_profile(profile)
            status = 200 if existing else 201
            return JSONResponse(
                status_code=status,
                content={"name": profile.name, "version": version},
                headers={"ETag": _etag(version)},
            )

    @app.post("/solutions")
    async def post_solution(request: Request):
        body = await _json_body(request)
        try:
            profile = store.profile_from_document(body)
        except DocumentError as e:
            return _error(400, "malformed-document", detail=str(e))
        return _upsert_profile(profile, _parse_if_match(request))

    @app.put("/solutions/{name}")
    async def put_solution(name: str, request: Request):
        body = await _json_body(request)
        try:
            profile = store.profile_from_document(body)
        except DocumentError as e:
            return _error(400, "malformed-document", detail=str(e))
        if profile.name != name:
            return _error(400, "name-mismatch", detail="document name must match the URL")
        return _upsert_profile(profile, _parse_if_match(request))

    @app.get("/solutions")
    async def list_solutions():
        items = [
            {"name": record.profile.name, "vendor": record.profile.vendor,
             "version": record.version}
            for record in (wb.profiles[n] for n in sorted(wb.profiles))
        ]
        return {"solutions": items}

    @app.get("/solutions/{name}")
    async def get_solution(name: str):
        record = wb.profiles.get(name)
        if record is None:
            return _error(404, "unknown-solution", name=name)
        return JSONResponse(
            content={"profile": store.profile_to_document(record.profile),
                     "version": record.version},
            headers={"ETag": _etag(record.version)},
        )

    # -- scoring -----------------------------------------------------------------

    def _resolve_cohort(names: list[str]):
        missing = [n for n in names if n not in wb.profiles]
        if missing:
            return None, _error(404, "unknown-solution", names=missing)
        return [wb.profiles[n].profile for n in names], None

    def _split_solutions(raw: list[str]) -> list[str]:
        names: list[str] = []
        for chunk in raw:
            names.extend(n for n in chunk.split(",") if n)
        return names

    @app.get("/comparisons")
    async def get_comparison(request: Request):
        params = request.query_params
        catalogue_id = params.get("catalogue")
        if not catalogue_id:
            return _error(400, "malformed-document", detail="catalogue query parameter required")
        record = wb.catalogues.get(catalogue_id)
        if record is None:
            return _error(404, "unknown-catalogue", id=catalogue_id)
        pinned = _parse_if_match(request)
        if pinned is None and "version" in params:
            try:
                pinned = int(params["version"])
            except ValueError:
                return _error(400, "malformed-document", detail="version must be an integer")
        if pinned is not None and pinned != record.catalogue.version:
            return _error(409, "stale-version", current_version=record.catalogue.version)
        names = _split_solutions(params.getlist("solutions"))
        if not names:
            return _error(400, "malformed-document", detail="solutions query parameter required")
        cohort, failure = _resolve_cohort(names)
        if failure is not None:
            return failure
        try:
            report = compare(record.catalogue, cohort)
        except WrongLayerError as e:
            return _error(422, "wrong-layer", detail=str(e))
        except CatalogueValidationError as e:
            return _error(422, "validation-failure", validation=store.validation_to_json(e.report))
        except MissingAnswerError as e:
            return _error(
                422, "incomplete-profile", solution=e.solution,
                indices=[str(i) for i in e.indices],
            )
        # byte-for-byte the structured report document: the UI never rescores
        return Response(
            content=store.save_report(report, "structured"),
            media_type="application/json",
            headers={"ETag": _etag(record.catalogue.version)},
        )

    @app.post("/whatif")
    async def post_whatif(request: Request):
        body = await _json_body(request)
        if not isinstance(body, dict):
            return _error(400, "malformed-document", detail="expected a JSON object")
        catalogue_id = body.get("catalogue")
        record = wb.catalogues.get(catalogue_id)
        if record is None:
            return _error(404, "unknown-catalogue", id=catalogue_id)
        names = body.get("solutions", [])
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            return _error(400, "malformed-document", detail="solutions must be a list of names")
        cohort, failure = _resolve_cohort(names)
        if failure is not None:
            return failure
        raw = body.get("perturbations", [])
        if not isinstance(raw, list):
            return _error(400, "malformed-document", detail="perturbations must be a list")
        try:
            perturbations = [
                store.perturbation_from_json(obj, f"perturbations[{i}]")
                for i, obj in enumerate(raw)
            ]
        except DocumentError as e:
            return _error(400, "malformed-document", detail=str(e))
        try:
            result = whatif(record.catalogue, cohort, perturbations)
        except MissingAnswerError as e:
            return _error(
                422, "incomplete-profile", solution=e.solution,
                indices=[str(i) for i in e.indices],
            )
        except WrongLayerError as e:
            return _error(422, "wrong-layer", detail=str(e))
        except CritcatError as e:
            return _error(422, "whatif-error", detail=str(e))
        return {
            "before": store.report_to_document(result.before),
            "after": store.report_to_document(result.after),
            "rank_changes": [
                {"solution": c.solution, "before": c.before, "after": c.after}
                for c in result.rank_changes
            ],
        }

    return app
