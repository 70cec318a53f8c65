"""Command-line front end.

Subcommands: fixtures, derive, validate, compare, whatif, serve.
Exit codes: 0 success, 1 validation or scoring failure, 2 usage error.
Results go to stdout, diagnostics to stderr, and default output carries no
timestamps so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import fixtures, store
from .errors import (
    CritcatError,
    DerivationError,
    InvalidRatingError,
    UnknownIndexError,
    UnknownSolutionError,
    WrongLayerError,
)
from .layers import derive
from .model import (
    BooleanScale,
    Catalogue,
    CriterionIndex,
    LikertScale,
    catalogue_stats,
    validate_catalogue,
)
from .scoring import (
    BooleanAnswer,
    LikertAnswer,
    NumericAnswer,
    OverrideAnswer,
    Perturbation,
    SetRating,
    SolutionProfile,
    ToggleShowstopper,
    whatif,
)

USAGE_ERROR = 2
DATA_ERROR = 1


class UsageError(Exception):
    """Bad invocation (malformed flag values, wrong pipeline stage)."""


def _err(message: str) -> None:
    print(f"critcat: {message}", file=sys.stderr)


def _print_bytes(data: bytes) -> None:
    sys.stdout.write(data.decode("utf-8"))
    sys.stdout.flush()


def _maybe_timestamp(args: argparse.Namespace) -> None:
    if getattr(args, "timestamps", False):
        stamp = datetime.now(timezone.utc).isoformat()
        print(f"generated at: {stamp}")


# --- subcommands ---------------------------------------------------------------


def cmd_fixtures(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    fx = fixtures.load_fixtures()
    files = (
        ("general.catalogue.json", store.serialize_catalogue(fx.general_catalogue)),
        ("maas_refinement.script.json", store.serialize_script(fx.maas_refinement)),
        ("maas_weighting.script.json", store.serialize_script(fx.maas_weighting)),
        (
            "maas_sme_expected.catalogue.json",
            store.serialize_catalogue(fx.maas_expected_layer3),
        ),
    )
    for name, data in files:
        store.atomic_write(out / name, data)
        print(f"wrote {out / name}")
    return 0


def cmd_derive(args: argparse.Namespace) -> int:
    source = store.read_catalogue_file(args.source)
    script = store.read_script_file(args.script)
    if source.layer >= 3:
        raise UsageError("source catalogue is already at layer 3")
    if script.target_layer != source.layer + 1:
        raise UsageError(
            f"script targets layer {script.target_layer}, "
            f"but the source is at layer {source.layer}"
        )
    derived = derive(source, script)
    store.write_catalogue_file(args.output, derived)
    if derived.layer == 2:
        removed = len(source.criteria) - len(derived.criteria)
        print(f"{len(source.criteria)} → {len(derived.criteria)} criteria ({removed} removed)")
    else:
        stats = catalogue_stats(derived)
        print(
            f"N={stats.n_total} (K={stats.n_numeric}, "
            f"L={stats.n_boolean}, M={stats.n_likert})"
        )
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    catalogue = store.read_catalogue_file(args.catalogue, validate=False)
    report = validate_catalogue(catalogue)
    if report.ok:
        print(
            f"valid: layer-{catalogue.layer} catalogue "
            f"{catalogue.id!r} with {len(catalogue.criteria)} criteria"
        )
        return 0
    for violation in report.violations:
        print(f"violation: {violation}")
    return DATA_ERROR


def _load_profiles(paths: list[str]) -> list[SolutionProfile]:
    return [store.read_profile_file(p) for p in paths]


class _IncompleteProfiles(CritcatError):
    def __init__(self, lines: list[str]):
        self.lines = lines
        super().__init__("; ".join(lines))


def _check_complete(catalogue: Catalogue, profiles: list[SolutionProfile]) -> None:
    problems = []
    for profile in profiles:
        missing = [c.index for c in catalogue.criteria if c.index not in profile.answers]
        if missing:
            listed = ", ".join(str(i) for i in missing)
            problems.append(f"profile {profile.name!r} is missing answers for: {listed}")
    if problems:
        raise _IncompleteProfiles(problems)


def cmd_compare(args: argparse.Namespace) -> int:
    catalogue = store.read_catalogue_file(args.catalogue)
    if catalogue.layer != 3:
        raise UsageError(f"comparison needs a layer-3 catalogue, got layer {catalogue.layer}")
    profiles = _load_profiles(args.profiles)
    _check_complete(catalogue, profiles)
    from .scoring import compare as run_compare

    report = run_compare(catalogue, profiles)
    _maybe_timestamp(args)
    _print_bytes(store.save_report(report, args.format, args.locale))
    return 0


def _parse_index(text: str) -> CriterionIndex:
    try:
        return CriterionIndex.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _parse_answer_value(catalogue: Catalogue, index: CriterionIndex, text: str):
    criterion = catalogue.criterion(index)
    if criterion is None:
        raise UsageError(f"unknown criterion index {index}")
    try:
        if isinstance(criterion.scale, BooleanScale):
            return BooleanAnswer(int(text))
        if isinstance(criterion.scale, LikertScale):
            return LikertAnswer(int(text))
        return NumericAnswer(float(text))
    except ValueError as e:
        raise UsageError(f"bad answer value {text!r} for {index}: {e}") from None


def _parse_perturbations(args: argparse.Namespace, catalogue: Catalogue) -> list[Perturbation]:
    perturbations: list[Perturbation] = []
    for spec in args.set_rating or ():
        lhs, sep, rhs = spec.partition("=")
        if not sep:
            raise UsageError(f"--set-rating wants INDEX=RATING, got {spec!r}")
        index = _parse_index(lhs)
        if catalogue.criterion(index) is None:
            raise UsageError(f"unknown criterion index {index}")
        try:
            rating = int(rhs)
        except ValueError:
            raise UsageError(f"--set-rating rating must be an integer, got {rhs!r}") from None
        perturbations.append(SetRating(index=index, rating=rating))
    for spec in args.toggle_showstopper or ():
        index = _parse_index(spec)
        if catalogue.criterion(index) is None:
            raise UsageError(f"unknown criterion index {index}")
        perturbations.append(ToggleShowstopper(index=index))
    for spec in args.override or ():
        solution, sep, rest = spec.partition(":")
        if not sep:
            raise UsageError(f"--override wants SOLUTION:INDEX=VALUE, got {spec!r}")
        lhs, sep, rhs = rest.partition("=")
        if not sep:
            raise UsageError(f"--override wants SOLUTION:INDEX=VALUE, got {spec!r}")
        index = _parse_index(lhs)
        answer = _parse_answer_value(catalogue, index, rhs)
        perturbations.append(OverrideAnswer(solution=solution, index=index, answer=answer))
    return perturbations


def cmd_whatif(args: argparse.Namespace) -> int:
    catalogue = store.read_catalogue_file(args.catalogue)
    if catalogue.layer != 3:
        raise UsageError(f"what-if needs a layer-3 catalogue, got layer {catalogue.layer}")
    profiles = _load_profiles(args.profiles)
    _check_complete(catalogue, profiles)
    perturbations = _parse_perturbations(args, catalogue)
    result = whatif(catalogue, profiles, perturbations)
    _maybe_timestamp(args)

    if args.format == "structured":
        document = {
            "format_version": store.FORMAT_VERSION,
            "before": store.report_to_document(result.before),
            "after": store.report_to_document(result.after),
            "rank_changes": [
                {"solution": c.solution, "before": c.before, "after": c.after}
                for c in result.rank_changes
            ],
        }
        print(json.dumps(document, ensure_ascii=False, indent=2))
        return 0

    render = (
        store.render_report_markdown if args.format == "markdown" else store.render_report_table
    )
    print("before:")
    sys.stdout.write(render(result.before, args.locale))
    print("after:")
    sys.stdout.write(render(result.after, args.locale))
    if not result.rank_changes:
        print("no changes")
    else:
        print("rank changes:")
        for change in result.rank_changes:
            print(f"  {change.solution}: {change.before} → {change.after}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    snapshot_dir = Path(args.snapshot_dir) if args.snapshot_dir else None
    app = create_app(snapshot_dir=snapshot_dir)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="info")
    return 0


# --- parser ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critcat",
        description="Derive weighted criteria catalogues and compare software solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    output_flags = argparse.ArgumentParser(add_help=False)
    output_flags.add_argument(
        "--format",
        choices=("structured", "table", "markdown"),
        default="table",
        help="output format (default: table)",
    )
    output_flags.add_argument(
        "--locale",
        choices=("comma", "period"),
        default="comma",
        help="decimal mark for percentages (default: comma)",
    )
    output_flags.add_argument(
        "--timestamps",
        action="store_true",
        help="prepend a generation timestamp (off by default for reproducible output)",
    )

    p = sub.add_parser("fixtures", help="write the embedded fixture documents to a directory")
    p.add_argument("--out", default="fixtures", help="target directory (default: ./fixtures)")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("derive", help="apply a derivation script to a catalogue")
    p.add_argument("source", help="source catalogue document")
    p.add_argument("script", help="derivation script document")
    p.add_argument("output", help="path for the derived catalogue document")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("validate", help="check a catalogue's structural rules")
    p.add_argument("catalogue", help="catalogue document")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compare", parents=[output_flags], help="score and rank solution profiles")
    p.add_argument("catalogue", help="layer-3 catalogue document")
    p.add_argument("profiles", nargs="+", help="solution profile documents")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser(
        "whatif", parents=[output_flags], help="compare rankings before and after perturbations"
    )
    p.add_argument("catalogue", help="layer-3 catalogue document")
    p.add_argument("profiles", nargs="+", help="solution profile documents")
    p.add_argument("--set-rating", action="append", metavar="INDEX=RATING")
    p.add_argument("--toggle-showstopper", action="append", metavar="INDEX")
    p.add_argument("--override", action="append", metavar="SOLUTION:INDEX=VALUE")
    p.set_defaults(func=cmd_whatif)

    p = sub.add_parser("serve", help="start the workbench HTTP service")
    p.add_argument("--port", type=int, default=8722)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--snapshot-dir", default=None, help="write documents here on change")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        _err(str(e))
        return USAGE_ERROR
    except (UnknownIndexError, UnknownSolutionError, InvalidRatingError, WrongLayerError) as e:
        _err(str(e))
        return USAGE_ERROR
    except DerivationError as e:
        for issue in e.issues:
            _err(f"error: {issue}")
        return DATA_ERROR
    except _IncompleteProfiles as e:
        for line in e.lines:
            _err(line)
        return DATA_ERROR
    except CritcatError as e:
        _err(str(e))
        return DATA_ERROR
    except FileNotFoundError as e:
        _err(f"no such file: {e.filename}")
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
