"""Command-line front end.

Every analysis report is deterministic JSON (sorted keys) carrying the tool
version and a digest of the input bytes.  Commands whose output *is* an
algebra or structure-data file (catalog emit, build) print the bare file
format so they can be piped into other commands.  Exit codes: 0 success,
1 domain error (JSON error object on stdout), 2 parse or format error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__, catalog
from .centroid import conjecture_search, decomposability
from .classify import decomposition_tag
from .errors import NildecompError, ParseError
from .liealg import LieAlgebra, is_isomorphism_via
from .series import (
    derived_series,
    extended_lcs,
    left_right_nilpotent,
    lower_central_series,
    near_perfect_radical,
)
from .serialize import (
    algebra_from_json,
    algebra_to_json,
    matrix_to_json,
    search_report_to_json,
    series_to_json,
    structure_from_json,
    structure_to_json,
    subspace_to_json,
    validation_to_json,
    verdict_to_json,
    witness_to_json,
)
from .structure import (
    build_from_structure,
    canonicalize_hp_a1,
    decompose_an_a1,
    extract_structure,
)


def _read_input(path: str) -> tuple[bytes, str]:
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}")
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()
    return raw, digest


def _load_algebra(path: str, check: bool) -> tuple[LieAlgebra, str]:
    raw, digest = _read_input(path)
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}")
    algebra = algebra_from_json(doc)
    if check:
        report = algebra.validate()
        if not report.passed:
            raise NildecompError(
                "input bracket table violates the Jacobi identity",
                triple=list(report.failing_triple),
            )
    return algebra, digest


def _emit(doc: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for key in sorted(doc):
            print(f"{key}: {json.dumps(doc[key], sort_keys=True)}")


def _report(doc: dict, digest: str | None) -> dict:
    doc["tool_version"] = __version__
    doc["input_digest"] = digest
    return doc


def _cmd_validate(args) -> int:
    algebra, digest = _load_algebra(args.file, check=False)
    report = algebra.validate()
    _emit(_report(validation_to_json(report), digest), args.output)
    return 0 if report.passed else 1


def _cmd_series(args) -> int:
    algebra, digest = _load_algebra(args.file, args.check_all)
    if args.kind == "derived":
        report = derived_series(algebra)
    elif args.kind == "extended":
        report = extended_lcs(algebra)
    else:
        report = lower_central_series(algebra)
    _emit(_report(series_to_json(report), digest), args.output)
    return 0


def _cmd_classify(args) -> int:
    algebra, digest = _load_algebra(args.file, args.check_all)
    tag = decomposition_tag(algebra)
    np_space = near_perfect_radical(algebra)
    decomposition = left_right_nilpotent(algebra)
    doc = {
        "tag": tag.render(),
        "np_dim": np_space.dim,
        "np_basis": subspace_to_json(np_space),
        "left_class": tag.left.render(),
        "right_class": tag.right.render(),
        "left_dim": decomposition.left.dim,
        "right_dim": decomposition.right.dim,
    }
    _emit(_report(doc, digest), args.output)
    return 0


def _cmd_canonicalize(args) -> int:
    algebra, digest = _load_algebra(args.file, args.check_all)
    transform, canonical = canonicalize_hp_a1(algebra)
    if args.check_all and not is_isomorphism_via(algebra, canonical, transform):
        raise NildecompError("canonicalisation certificate failed to verify")
    doc = {
        "transform": matrix_to_json(transform),
        "canonical": algebra_to_json(canonical),
    }
    _emit(_report(doc, digest), args.output)
    return 0


def _cmd_decompose(args) -> int:
    algebra, digest = _load_algebra(args.file, args.check_all)
    if args.method == "centroid":
        verdict = decomposability(algebra)
        doc = verdict_to_json(verdict)
        doc["method"] = "centroid"
    else:
        witness = decompose_an_a1(algebra)
        doc = witness_to_json(witness)
        doc["method"] = "abelian_line"
    _emit(_report(doc, digest), args.output)
    return 0


def _cmd_structure(args) -> int:
    algebra, digest = _load_algebra(args.file, args.check_all)
    data, basis = extract_structure(algebra)
    if args.check_all:
        rebuilt = build_from_structure(data)
        if not is_isomorphism_via(algebra, rebuilt, basis):
            raise NildecompError("structure extraction certificate failed to verify")
    doc = structure_to_json(data)
    doc["basis"] = matrix_to_json(basis)
    _emit(_report(doc, digest), args.output)
    return 0


def _cmd_build(args) -> int:
    raw, _ = _read_input(args.file)
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}")
    data = structure_from_json(doc)
    algebra = build_from_structure(data)
    if args.check_all:
        report = algebra.validate()
        if not report.passed:
            raise NildecompError("assembled algebra failed validation")
    _emit(algebra_to_json(algebra), args.output)
    return 0


def _cmd_conjecture(args) -> int:
    report = conjecture_search(args.n1, args.n2, args.samples, args.seed)
    _emit(_report(search_report_to_json(report), None), args.output)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        doc = {
            "labels": [
                {"label": e.label, "params": list(e.params), "summary": e.summary}
                for e in catalog.entries()
            ]
        }
        _emit(_report(doc, None), args.output)
        return 0
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise ParseError(f"--param expects name=value, got {item!r}")
        name, value = item.split("=", 1)
        if name in ("n", "p"):
            try:
                params[name] = int(value)
            except ValueError:
                raise ParseError(f"parameter {name!r} must be an integer")
        else:
            params[name] = value
    algebra = catalog.make(args.label, params)
    _emit(algebra_to_json(algebra), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", choices=("json", "text"), default="json", help="report format"
    )
    common.add_argument(
        "--check-all",
        action="store_true",
        help="re-verify every internal certificate before printing",
    )
    parser = argparse.ArgumentParser(
        prog="nildecomp",
        description="exact computations with solvable and nilpotent Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the Jacobi identity")
    p.add_argument("file", help="algebra file, or - for stdin")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("series", parents=[common], help="ideal series report")
    p.add_argument("file")
    p.add_argument("--kind", choices=("derived", "lcs", "extended"), default="lcs")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("classify", parents=[common], help="decomposition tag")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "canonicalize", parents=[common], help="canonical form for Hp-A(1) algebras"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_canonicalize)

    p = sub.add_parser("decompose", parents=[common], help="direct-sum decomposition")
    p.add_argument("file")
    p.add_argument("--method", choices=("an_a1", "centroid"), default="an_a1")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("structure", parents=[common], help="extract structure data")
    p.add_argument("file")
    p.set_defaults(func=_cmd_structure)

    p = sub.add_parser("build", parents=[common], help="assemble from structure data")
    p.add_argument("file", help="structure data file, or - for stdin")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("conjecture", parents=[common], help="randomised decomposability search")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("catalog", parents=[common], help="named fixture algebras")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("label", nargs="?")
    p.add_argument("--param", action="append", metavar="name=value")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "emit" and not args.label:
        print(json.dumps({"code": "parse_error", "message": "catalog emit needs a label", "context": {}}))
        return 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(
            json.dumps(
                {"code": exc.code, "message": str(exc), "context": exc.context},
                sort_keys=True,
            )
        )
        return 2
    except NildecompError as exc:
        print(
            json.dumps(
                {"code": exc.code, "message": str(exc), "context": _json_safe(exc.context)},
                sort_keys=True,
            )
        )
        return 1


def _json_safe(value):
    try:
        json.dumps(value)
        return value
    except TypeError:
        if isinstance(value, dict):
            return {str(k): _json_safe(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [_json_safe(v) for v in value]
        return str(value)


def entry() -> None:
    sys.exit(main())
