"""JSON <-> object conversions for the CLI.

Scalars travel as strings in the exact textual grammar (native JSON numbers
cannot hold exact rationals).  Algebra files use 0-based indices with i < j
and reject duplicates and out-of-range entries; parsing is strict so that a
parse of an emitted file reproduces the algebra bit for bit.
"""

from __future__ import annotations

from typing import Any, Mapping

from .centroid import DecomposabilityVerdict, SearchReport
from .errors import ParseError
from .liealg import LieAlgebra, ValidationReport
from .linalg import Matrix, Subspace, Vector
from .scalars import Scalar
from .series import SeriesReport
from .structure import (
    AbelianLeft,
    DirectSumWitness,
    HeisenbergLeft,
    StructureData,
    structure_data,
)


def vector_to_json(v: Vector) -> list[str]:
    return [str(x) for x in v]


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [vector_to_json(r) for r in m.data]


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "basis": matrix_to_json(s.basis)}


def algebra_to_json(algebra: LieAlgebra) -> dict:
    brackets = []
    for (i, j), v in sorted(algebra.brackets.items()):
        out = [
            {"k": k, "c": str(c)} for k, c in enumerate(v) if not c.is_zero()
        ]
        brackets.append({"i": i, "j": j, "out": out})
    return {
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "brackets": brackets,
    }


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


def algebra_from_json(doc: Any) -> LieAlgebra:
    _require(isinstance(doc, Mapping), "algebra file must be a JSON object")
    unknown = set(doc) - {"dim", "labels", "brackets"}
    _require(not unknown, f"unknown algebra file keys: {sorted(unknown)}")
    dim = doc.get("dim")
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 0, "dim must be a nonnegative integer")
    labels = doc.get("labels")
    if labels is not None:
        _require(
            isinstance(labels, list)
            and len(labels) == dim
            and all(isinstance(x, str) for x in labels),
            "labels must be a list of dim strings",
        )
    entries = doc.get("brackets", [])
    _require(isinstance(entries, list), "brackets must be a list")
    table: dict[tuple[int, int], tuple[Scalar, ...]] = {}
    for entry in entries:
        _require(isinstance(entry, Mapping), "each bracket must be an object")
        extra = set(entry) - {"i", "j", "out"}
        _require(not extra, f"unknown bracket keys: {sorted(extra)}")
        i, j = entry.get("i"), entry.get("j")
        _require(isinstance(i, int) and isinstance(j, int), "bracket indices must be integers")
        _require(0 <= i < j < dim, f"bracket indices {(i, j)} must satisfy 0 <= i < j < dim")
        _require((i, j) not in table, f"duplicate bracket entry for {(i, j)}")
        out = entry.get("out", [])
        _require(isinstance(out, list), "bracket 'out' must be a list")
        coeffs = [Scalar.parse("0")] * dim
        seen = set()
        for term in out:
            _require(isinstance(term, Mapping), "each output term must be an object")
            extra = set(term) - {"k", "c"}
            _require(not extra, f"unknown term keys: {sorted(extra)}")
            k = term.get("k")
            _require(isinstance(k, int) and 0 <= k < dim, "term index out of range")
            _require(k not in seen, f"duplicate term index {k} in bracket {(i, j)}")
            seen.add(k)
            c = term.get("c")
            _require(isinstance(c, str), "scalar values must be strings")
            coeffs[k] = Scalar.parse(c)
        table[(i, j)] = tuple(coeffs)
    return LieAlgebra.from_brackets(dim, table, labels)


def validation_to_json(report: ValidationReport) -> dict:
    out: dict = {"passed": report.passed}
    if report.passed:
        out["first_failure"] = None
    else:
        out["first_failure"] = {
            "triple": list(report.failing_triple),
            "residual": vector_to_json(report.residual),
        }
    return out


def series_to_json(report: SeriesReport) -> dict:
    return {
        "kind": report.kind,
        "dims": list(report.dims),
        "stabilized_at": report.stabilized_at,
        "split_at": report.split_at,
        "terms": [subspace_to_json(t) for t in report.terms],
    }


def structure_to_json(data: StructureData) -> dict:
    if isinstance(data.family, AbelianLeft):
        family = {"kind": "abelian_left", "n1": data.family.n1, "n2": data.family.n2}
    else:
        family = {"kind": "heisenberg_left", "p": data.family.p, "n": data.family.n}
    return {
        "family": family,
        "d_matrices": [matrix_to_json(d) for d in data.d_matrices],
        "b": [
            {"alpha": a, "beta": b, "coeffs": vector_to_json(v)}
            for (a, b), v in sorted(data.b.items())
        ],
    }


def structure_from_json(doc: Any) -> StructureData:
    _require(isinstance(doc, Mapping), "structure data must be a JSON object")
    # Reports wrap the same payload alongside bookkeeping keys; accept those.
    allowed_extra = {"basis", "tool_version", "input_digest"}
    unknown = set(doc) - {"family", "d_matrices", "b"} - allowed_extra
    _require(not unknown, f"unknown structure data keys: {sorted(unknown)}")
    family_doc = doc.get("family")
    _require(isinstance(family_doc, Mapping), "family must be an object")
    kind = family_doc.get("kind")
    if kind == "abelian_left":
        extra = set(family_doc) - {"kind", "n1", "n2"}
        _require(not extra, f"unknown family keys: {sorted(extra)}")
        n1, n2 = family_doc.get("n1"), family_doc.get("n2")
        _require(
            isinstance(n1, int) and isinstance(n2, int) and n1 >= 1 and n2 >= 1,
            "abelian_left needs integers n1, n2 >= 1",
        )
        family: AbelianLeft | HeisenbergLeft = AbelianLeft(n1, n2)
        m = n2
        q = n1
    elif kind == "heisenberg_left":
        extra = set(family_doc) - {"kind", "p", "n"}
        _require(not extra, f"unknown family keys: {sorted(extra)}")
        p, n = family_doc.get("p"), family_doc.get("n")
        _require(
            isinstance(p, int) and isinstance(n, int) and p >= 1 and n >= 1,
            "heisenberg_left needs integers p >= 1, n >= 1",
        )
        family = HeisenbergLeft(p, n)
        m = n
        q = 2 * p + 1
    else:
        raise ParseError(f"unknown structure family kind: {kind!r}")
    d_docs = doc.get("d_matrices")
    _require(isinstance(d_docs, list) and len(d_docs) == q, f"expected {q} action matrices")
    d_matrices = []
    for d_doc in d_docs:
        _require(
            isinstance(d_doc, list)
            and len(d_doc) == m
            and all(isinstance(r, list) and len(r) == m for r in d_doc),
            f"action matrices must be {m}x{m} nested lists",
        )
        rows = [[_parse_scalar_cell(x) for x in r] for r in d_doc]
        d_matrices.append(Matrix.from_rows(rows, cols=m))
    b_table = {}
    for entry in doc.get("b", []):
        _require(isinstance(entry, Mapping), "each b entry must be an object")
        extra = set(entry) - {"alpha", "beta", "coeffs"}
        _require(not extra, f"unknown b entry keys: {sorted(extra)}")
        a, b = entry.get("alpha"), entry.get("beta")
        _require(isinstance(a, int) and isinstance(b, int) and 0 <= a < b < q, "b indices out of range")
        _require((a, b) not in b_table, f"duplicate b entry for {(a, b)}")
        coeffs = entry.get("coeffs")
        _require(isinstance(coeffs, list) and len(coeffs) == m, f"b vectors must have length {m}")
        b_table[(a, b)] = tuple(_parse_scalar_cell(x) for x in coeffs)
    return structure_data(family, d_matrices, b_table)


def _parse_scalar_cell(x: Any) -> Scalar:
    if not isinstance(x, str):
        raise ParseError("scalar values must be strings in the exact grammar")
    return Scalar.parse(x)


def witness_to_json(witness: DirectSumWitness) -> dict:
    return {
        "ideals": [subspace_to_json(s) for s in witness.ideals],
        "components": [algebra_to_json(c) for c in witness.components],
        "assembly": matrix_to_json(witness.assembly),
    }


def verdict_to_json(verdict: DecomposabilityVerdict) -> dict:
    return {
        "status": verdict.status,
        "reason": verdict.reason,
        "witness": witness_to_json(verdict.witness) if verdict.witness else None,
    }


def search_report_to_json(report: SearchReport) -> dict:
    return {
        "n1": report.n1,
        "n2": report.n2,
        "samples": report.samples,
        "seed": report.seed,
        "decomposable": report.decomposable,
        "indecomposable": report.indecomposable,
        "unknown": report.unknown,
        "counterexample_candidates": [
            structure_to_json(d) for d in report.counterexample_candidates
        ],
        "unknown_reasons": list(report.unknown_reasons),
    }
