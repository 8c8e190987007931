"""Derived and lower central series, the near-perfect radical, and the
split of a solvable nonnilpotent algebra into its left and right nilpotent
algebras.

The near-perfect radical is computed as the stabilised term of the lower
central series; stabilisation is detected by dimension equality of
consecutive terms, so the loop is bounded by the algebra dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalContradiction, NotSolvableNonnilpotent
from .liealg import LieAlgebra, LinearMap
from .linalg import Subspace


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "derived" | "lower_central" | "extended"
    terms: tuple[Subspace, ...]
    dims: tuple[int, ...]
    stabilized_at: int
    split_at: int | None = None

    def profile(self) -> tuple[int, ...]:
        """Dimensions of the strictly decreasing part of the chain."""
        return self.dims[: self.stabilized_at + 1]


@dataclass(frozen=True)
class NilpotencyInfo:
    is_nilpotent: bool
    is_solvable: bool
    nilindex: int | None


@dataclass(frozen=True)
class NilpotentDecomposition:
    np_radical: Subspace
    left: LieAlgebra
    right: LieAlgebra
    left_map: LinearMap
    right_map: LinearMap


def _run_series(algebra: LieAlgebra, kind: str, step) -> SeriesReport:
    terms = [algebra.full_space()]
    while terms[-1].dim > 0:
        nxt = step(terms[-1])
        if not terms[-1].contains_subspace(nxt):
            raise InternalContradiction("series term escaped its predecessor")
        terms.append(nxt)
        if nxt.dim == terms[-2].dim:
            break
    dims = tuple(t.dim for t in terms)
    stabilized_at = len(terms) - 1 if dims[-1] == 0 else len(terms) - 2
    return SeriesReport(kind, tuple(terms), dims, stabilized_at)


def derived_series(algebra: LieAlgebra) -> SeriesReport:
    return _run_series(algebra, "derived", lambda s: algebra.product_space(s, s))


def lower_central_series(algebra: LieAlgebra) -> SeriesReport:
    full = algebra.full_space()
    return _run_series(
        algebra, "lower_central", lambda s: algebra.product_space(full, s)
    )


def near_perfect_radical(algebra: LieAlgebra) -> Subspace:
    """The stabilised term of the lower central series.

    Satisfies [L, NP(L)] = NP(L); it is zero exactly when the algebra is
    nilpotent.
    """
    report = lower_central_series(algebra)
    return report.terms[report.stabilized_at]


def nilpotency_solvability(algebra: LieAlgebra) -> NilpotencyInfo:
    lcs = lower_central_series(algebra)
    nilpotent = lcs.dims[-1] == 0
    derived = derived_series(algebra)
    solvable = derived.dims[-1] == 0
    return NilpotencyInfo(nilpotent, solvable, lcs.stabilized_at if nilpotent else None)


def _require_solvable_nonnilpotent_lcs(algebra: LieAlgebra) -> SeriesReport:
    """Shared precondition check that also returns the lower central series,
    so callers do not recompute it."""
    lcs = lower_central_series(algebra)
    nilpotent = lcs.dims[-1] == 0
    solvable = derived_series(algebra).dims[-1] == 0
    if nilpotent or not solvable:
        raise NotSolvableNonnilpotent(
            "operation is defined only for solvable nonnilpotent algebras",
            is_nilpotent=nilpotent,
            is_solvable=solvable,
        )
    return lcs


def extended_lcs(algebra: LieAlgebra) -> SeriesReport:
    """Lower central series of L down to NP(L), continued by the series of
    NP(L) itself, embedded back into ambient coordinates.

    The whole chain is strictly decreasing; ``split_at`` is the index of
    NP(L).
    """
    lcs = _require_solvable_nonnilpotent_lcs(algebra)
    np_space = lcs.terms[lcs.stabilized_at]
    terms = list(lcs.terms[: lcs.stabilized_at + 1])
    right, inclusion = algebra.restrict(np_space)
    inner = lower_central_series(right)
    for term in inner.terms[1:]:
        ambient_rows = [inclusion.apply(r) for r in term.basis.data]
        terms.append(Subspace.from_vectors(algebra.dim, ambient_rows))
    dims = tuple(t.dim for t in terms)
    if any(a <= b for a, b in zip(dims, dims[1:])):
        raise InternalContradiction("extended series is not strictly decreasing", dims=dims)
    return SeriesReport("extended", tuple(terms), dims, len(terms) - 1, lcs.stabilized_at)


def left_right_nilpotent(algebra: LieAlgebra) -> NilpotentDecomposition:
    """Quotient by the near-perfect radical and the radical itself, with maps.

    Both component algebras are nilpotent for solvable nonnilpotent input;
    this is re-checked defensively.
    """
    lcs = _require_solvable_nonnilpotent_lcs(algebra)
    np_space = lcs.terms[lcs.stabilized_at]
    left, proj = algebra.quotient(np_space)
    right, incl = algebra.restrict(np_space)
    if not nilpotency_solvability(left).is_nilpotent:
        raise InternalContradiction("quotient by the near-perfect radical is not nilpotent")
    if not nilpotency_solvability(right).is_nilpotent:
        raise InternalContradiction("near-perfect radical of a solvable algebra is not nilpotent")
    return NilpotentDecomposition(np_space, left, right, proj, incl)
