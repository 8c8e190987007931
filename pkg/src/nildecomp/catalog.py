"""Named algebra constructors used as the ground-truth fixture set.

Bracket tables follow the usual convention that unlisted pairs bracket to
zero.  Parameterised families accept any nonzero Gaussian-rational values;
the normalisation inequalities that pick representatives inside an
isomorphism family are documentation, not validation, since none of the
computations here depend on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .errors import InvalidParameter, MissingParameter, UnknownLabel
from .liealg import LieAlgebra
from .linalg import Matrix, unit_vector
from .scalars import ONE, Scalar, scalar


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    params: tuple[str, ...]
    summary: str
    build: Callable[..., LieAlgebra] = field(compare=False)


def _neg(v):
    return tuple(-x for x in v)


def _combo(n, *pairs):
    out = [scalar(0)] * n
    for coeff, idx in pairs:
        out[idx] = out[idx] + scalar(coeff)
    return tuple(out)


def _algebra(dim, table, labels=None) -> LieAlgebra:
    algebra = LieAlgebra.from_brackets(dim, table, labels)
    report = algebra.validate()
    if not report.passed:
        raise AssertionError(f"catalog algebra failed validation at {report.failing_triple}")
    return algebra


def _abelian(n: int) -> LieAlgebra:
    return _algebra(n, {})


def _heisenberg(p: int) -> LieAlgebra:
    n = 2 * p + 1
    table = {(2 * l, 2 * l + 1): unit_vector(n, n - 1) for l in range(p)}
    return _algebra(n, table)


def _model_filiform_4() -> LieAlgebra:
    return _algebra(4, {(0, 1): unit_vector(4, 2), (0, 2): unit_vector(4, 3)})


def _canonical_hp_a1(p: int) -> LieAlgebra:
    n = 2 * p + 2
    table = {(2 * l, 2 * l + 1): unit_vector(n, 2 * p) for l in range(p)}
    table[(0, n - 1)] = unit_vector(n, n - 1)
    labels = tuple(f"x{i + 1}" for i in range(n - 1)) + ("y",)
    return _algebra(n, table, labels)


def _s2_1() -> LieAlgebra:
    return _algebra(2, {(0, 1): _neg(unit_vector(2, 0))})


def _s3_1(a: Scalar) -> LieAlgebra:
    return _algebra(
        3,
        {(0, 2): _neg(unit_vector(3, 0)), (1, 2): _combo(3, (-a, 1))},
    )


def _s3_2() -> LieAlgebra:
    return _algebra(
        3,
        {(0, 2): _neg(unit_vector(3, 0)), (1, 2): _combo(3, (-1, 0), (-1, 1))},
    )


def _s4_1() -> LieAlgebra:
    return _algebra(
        4,
        {(1, 3): _neg(unit_vector(4, 0)), (2, 3): _neg(unit_vector(4, 2))},
    )


def _s4_2() -> LieAlgebra:
    return _algebra(
        4,
        {
            (0, 3): _neg(unit_vector(4, 0)),
            (1, 3): _combo(4, (-1, 0), (-1, 1)),
            (2, 3): _combo(4, (-1, 1), (-1, 2)),
        },
    )


def _s4_3(a: Scalar, b: Scalar) -> LieAlgebra:
    return _algebra(
        4,
        {
            (0, 3): _neg(unit_vector(4, 0)),
            (1, 3): _combo(4, (-a, 1)),
            (2, 3): _combo(4, (-b, 2)),
        },
    )


def _s4_4(a: Scalar) -> LieAlgebra:
    return _algebra(
        4,
        {
            (0, 3): _neg(unit_vector(4, 0)),
            (1, 3): _combo(4, (-1, 0), (-1, 1)),
            (2, 3): _combo(4, (-a, 2)),
        },
    )


def _s4_6() -> LieAlgebra:
    return _algebra(
        4,
        {
            (1, 2): unit_vector(4, 0),
            (1, 3): _neg(unit_vector(4, 1)),
            (2, 3): unit_vector(4, 2),
        },
    )


def _s4_8(a: Scalar) -> LieAlgebra:
    return _algebra(
        4,
        {
            (1, 2): unit_vector(4, 0),
            (0, 3): _combo(4, (-(ONE + a), 0)),
            (1, 3): _neg(unit_vector(4, 1)),
            (2, 3): _combo(4, (-a, 2)),
        },
    )


def _s4_10() -> LieAlgebra:
    return _algebra(
        4,
        {
            (1, 2): unit_vector(4, 0),
            (0, 3): _combo(4, (-2, 0)),
            (1, 3): _neg(unit_vector(4, 1)),
            (2, 3): _combo(4, (-1, 1), (-1, 2)),
        },
    )


def _s4_11() -> LieAlgebra:
    return _algebra(
        4,
        {
            (1, 2): unit_vector(4, 0),
            (0, 3): _neg(unit_vector(4, 0)),
            (1, 3): _neg(unit_vector(4, 1)),
        },
    )


def _s6_26() -> LieAlgebra:
    # Built from the canonical H2-A(1) table by the substitution that sends
    # its basis (x1, ..., x5, y) to (e6, e5, e2, e3, e1, e4).
    canonical = _canonical_hp_a1(2)
    rows = [unit_vector(6, k) for k in (4, 2, 3, 5, 1, 0)]
    relabeled = canonical.change_basis(Matrix.from_rows(rows, cols=6))
    return _algebra(6, relabeled.brackets, tuple(f"e{i + 1}" for i in range(6)))


def _require_positive_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidParameter(f"parameter {name!r} must be a positive integer")
    return value


def _require_nonneg_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidParameter(f"parameter {name!r} must be a nonnegative integer")
    return value


def _require_nonzero_scalar(value, name: str) -> Scalar:
    try:
        s = scalar(value)
    except TypeError as exc:
        raise InvalidParameter(f"parameter {name!r} is not a scalar") from exc
    if s.is_zero():
        raise InvalidParameter(f"parameter {name!r} must be nonzero")
    return s


_REGISTRY: dict[str, CatalogEntry] = {}


def _register(label, params, summary, build):
    _REGISTRY[label] = CatalogEntry(label, tuple(params), summary, build)


_register("A", ("n",), "Abelian algebra of dimension n", lambda n: _abelian(n))
_register("H", ("p",), "Heisenberg algebra of index p, dimension 2p+1", lambda p: _heisenberg(p))
_register("F4", (), "model filiform algebra of dimension 4", _model_filiform_4)
_register(
    "canonical_HpA1",
    ("p",),
    "canonical solvable algebra with Heisenberg left part and a line on the right",
    lambda p: _canonical_hp_a1(p),
)
_register("s2_1", (), "two-dimensional solvable algebra [x2,x1]=x1", _s2_1)
_register("s3_1", ("a",), "[x3,x1]=x1, [x3,x2]=a*x2 with a nonzero", _s3_1)
_register("s3_2", (), "[x3,x1]=x1, [x3,x2]=x1+x2", _s3_2)
_register("s4_1", (), "[x4,x2]=x1, [x4,x3]=x3", _s4_1)
_register("s4_2", (), "[x4,x1]=x1, [x4,x2]=x1+x2, [x4,x3]=x2+x3", _s4_2)
_register("s4_3", ("a", "b"), "[x4,x1]=x1, [x4,x2]=a*x2, [x4,x3]=b*x3, a,b nonzero", _s4_3)
_register("s4_4", ("a",), "[x4,x1]=x1, [x4,x2]=x1+x2, [x4,x3]=a*x3, a nonzero", _s4_4)
_register("s4_6", (), "[x2,x3]=x1, [x4,x2]=x2, [x4,x3]=-x3", _s4_6)
_register("s4_8", ("a",), "[x2,x3]=x1, [x4,x1]=(1+a)x1, [x4,x2]=x2, [x4,x3]=a*x3", _s4_8)
_register("s4_10", (), "[x2,x3]=x1, [x4,x1]=2x1, [x4,x2]=x2, [x4,x3]=x2+x3", _s4_10)
_register("s4_11", (), "[x2,x3]=x1, [x4,x1]=x1, [x4,x2]=x2", _s4_11)
_register("s6_26", (), "six-dimensional solvable algebra with chain dims [6,2,1]", _s6_26)

_INT_PARAMS = {"n": _require_nonneg_int, "p": _require_positive_int}


def entries() -> tuple[CatalogEntry, ...]:
    return tuple(_REGISTRY[label] for label in sorted(_REGISTRY))


def make(label: str, params: Mapping[str, object] | None = None) -> LieAlgebra:
    """Construct a catalog algebra; every construction is Jacobi-validated."""
    entry = _REGISTRY.get(label)
    if entry is None:
        raise UnknownLabel(f"unknown catalog label {label!r}", known=sorted(_REGISTRY))
    params = dict(params or {})
    args = []
    for name in entry.params:
        if name not in params:
            raise MissingParameter(f"label {label!r} needs parameter {name!r}")
        value = params.pop(name)
        if name in _INT_PARAMS:
            args.append(_INT_PARAMS[name](value, name))
        else:
            args.append(_require_nonzero_scalar(value, name))
    if params:
        raise InvalidParameter(f"unexpected parameters for {label!r}: {sorted(params)}")
    return entry.build(*args)


#: Tags, near-perfect radical bases (as unit-vector index lists), strictly
#: decreasing lower-central profiles, and extended-series profiles for the
#: solvable fixtures, plus the stated nilradicals checked as nilpotent ideals.
EXPECTED = {
    "s2_1": {"tag": "A(1)-A(1)", "np": [0], "cs": [2, 1], "ext": [2, 1, 0]},
    "s3_1": {"tag": "A(1)-A(2)", "np": [0, 1], "cs": [3, 2], "ext": [3, 2, 0],
             "nilradical": ([0, 1], "A(2)")},
    "s3_2": {"tag": "A(1)-A(2)", "np": [0, 1], "cs": [3, 2], "ext": [3, 2, 0],
             "nilradical": ([0, 1], "A(2)")},
    "s4_1": {"tag": "H1-A(1)", "np": [2], "cs": [4, 2, 1], "ext": [4, 2, 1, 0]},
    "s4_2": {"tag": "A(1)-A(3)", "np": [0, 1, 2], "cs": [4, 3], "ext": [4, 3, 0],
             "nilradical": ([0, 1, 2], "A(3)")},
    "s4_3": {"tag": "A(1)-A(3)", "np": [0, 1, 2], "cs": [4, 3], "ext": [4, 3, 0],
             "nilradical": ([0, 1, 2], "A(3)")},
    "s4_4": {"tag": "A(1)-A(3)", "np": [0, 1, 2], "cs": [4, 3], "ext": [4, 3, 0],
             "nilradical": ([0, 1, 2], "A(3)")},
    "s4_6": {"tag": "A(1)-H1", "np": [0, 1, 2], "cs": [4, 3], "ext": [4, 3, 1, 0],
             "nilradical": ([0, 1, 2], "H1")},
    "s4_8": {"tag": "A(1)-H1", "np": [0, 1, 2], "cs": [4, 3], "ext": [4, 3, 1, 0],
             "nilradical": ([0, 1, 2], "H1")},
    "s4_10": {"tag": "A(1)-H1", "np": [0, 1, 2], "cs": [4, 3], "ext": [4, 3, 1, 0],
              "nilradical": ([0, 1, 2], "H1")},
    "s4_11": {"tag": "A(2)-A(2)", "np": [0, 1], "cs": [4, 2], "ext": [4, 2, 0],
              "nilradical": ([0, 1, 2], "H1")},
    "s6_26": {"tag": "H2-A(1)", "np": [3], "cs": [6, 2, 1], "ext": [6, 2, 1, 0]},
    ("canonical_HpA1", 1): {"tag": "H1-A(1)", "np": [3], "cs": [4, 2, 1], "ext": [4, 2, 1, 0]},
    ("canonical_HpA1", 2): {"tag": "H2-A(1)", "np": [5], "cs": [6, 2, 1], "ext": [6, 2, 1, 0]},
}

#: The fourteen solvable fixtures exercised by the acceptance suite, with the
#: default parameter values used wherever the family is parameterised.
SOLVABLE_FIXTURES: tuple[tuple[str, dict], ...] = (
    ("s2_1", {}),
    ("s3_1", {"a": "1/2"}),
    ("s3_2", {}),
    ("s4_1", {}),
    ("s4_2", {}),
    ("s4_3", {"a": "1/2", "b": "1/3"}),
    ("s4_4", {"a": "1/2"}),
    ("s4_6", {}),
    ("s4_8", {"a": "1/2"}),
    ("s4_10", {}),
    ("s4_11", {}),
    ("s6_26", {}),
    ("canonical_HpA1", {"p": 1}),
    ("canonical_HpA1", {"p": 2}),
)


def expected_for(label: str, params: Mapping[str, object]) -> dict | None:
    if label == "canonical_HpA1":
        return EXPECTED.get((label, params.get("p")))
    return EXPECTED.get(label)
