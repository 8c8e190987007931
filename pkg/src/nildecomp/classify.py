"""Recognition of nilpotent algebra classes and decomposition tags.

Classes are assigned by priority: Abelian, then Heisenberg, then filiform,
then two-step, then unknown.  The Heisenberg test needs only dim D(L) = 1 and
Z(L) = D(L): a radical vector of the induced alternating form would be
central, so the form is nondegenerate and the dimension is odd automatically
(still asserted defensively).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalContradiction, NotNilpotent, WrongTag
from .liealg import LieAlgebra
from .linalg import (
    Matrix,
    Vector,
    extend_to_full_basis,
    scale_vector,
    sub_vectors,
    unit_vector,
)
from .series import left_right_nilpotent, lower_central_series


@dataclass(frozen=True)
class NilpotentClass:
    kind: str  # "abelian" | "heisenberg" | "filiform" | "two_step" | "unknown"
    size: int  # dimension, except for heisenberg where it is the index p

    def render(self) -> str:
        if self.kind == "abelian":
            return f"A({self.size})"
        if self.kind == "heisenberg":
            return f"H{self.size}"
        if self.kind == "filiform":
            return f"F({self.size})"
        if self.kind == "two_step":
            return f"2step({self.size})"
        return f"U({self.size})"

    __str__ = render


@dataclass(frozen=True)
class DecompositionTag:
    left: NilpotentClass
    right: NilpotentClass

    def render(self) -> str:
        return f"{self.left.render()}-{self.right.render()}"

    __str__ = render


def abelian(n: int) -> NilpotentClass:
    return NilpotentClass("abelian", n)


def heisenberg(p: int) -> NilpotentClass:
    return NilpotentClass("heisenberg", p)


def recognize_nilpotent(algebra: LieAlgebra) -> NilpotentClass:
    n = algebra.dim
    derived = algebra.derived_algebra()
    if derived.dim == 0:
        # a vanishing derived algebra is itself a proof of nilpotency
        return NilpotentClass("abelian", n)
    if derived.dim == 1 and algebra.center() == derived:
        # the derived line sits inside the center, so the chain stops in two
        # steps; nilpotency and odd dimension follow
        if n % 2 == 0:
            raise InternalContradiction(
                "one-dimensional derived algebra equal to the center forces odd dimension",
                dim=n,
            )
        return NilpotentClass("heisenberg", (n - 1) // 2)
    lcs = lower_central_series(algebra)
    if lcs.dims[-1] != 0:
        raise NotNilpotent("classification of nilpotent classes needs a nilpotent algebra")
    filiform_profile = (n,) + tuple(n - k - 1 for k in range(1, n))
    if n >= 4 and lcs.dims == filiform_profile:
        return NilpotentClass("filiform", n)
    if lcs.stabilized_at == 2:
        return NilpotentClass("two_step", n)
    return NilpotentClass("unknown", n)


def decomposition_tag(algebra: LieAlgebra) -> DecompositionTag:
    """Classes of the left and right nilpotent algebras, e.g. A(2)-A(2)."""
    decomposition = left_right_nilpotent(algebra)
    return DecompositionTag(
        recognize_nilpotent(decomposition.left),
        recognize_nilpotent(decomposition.right),
    )


def canonical_heisenberg_table(p: int) -> dict[tuple[int, int], int]:
    """Nonzero brackets of the canonical 2p+1 dimensional Heisenberg basis:
    [e_{2l}, e_{2l+1}] = e_{2p} for l < p (0-based)."""
    return {(2 * l, 2 * l + 1): 2 * p for l in range(p)}


def heisenberg_basis(algebra: LieAlgebra) -> Matrix:
    """A basis change carrying a Heisenberg algebra onto its canonical table.

    Works over the alternating pairing [x, y] = B(x, y) z, where z spans the
    one-dimensional center; symplectic pairs are extracted deterministically
    from the unit-vector complement, so an already-canonical algebra maps to
    itself by the identity.
    """
    cls = recognize_nilpotent(algebra)
    if cls.kind != "heisenberg":
        raise WrongTag(f"expected a Heisenberg algebra, got {cls.render()}")
    p = cls.size
    n = algebra.dim
    derived = algebra.derived_algebra()
    z = derived.basis.row(0)

    def pairing(u: Vector, v: Vector):
        coords = derived.coordinates(algebra.bracket(u, v))
        if coords is None:
            raise InternalContradiction("bracket escaped the derived algebra")
        return coords[0]

    active = list(extend_to_full_basis(derived).data[1:])
    rows: list[Vector] = []
    for _ in range(p):
        u = active.pop(0)
        partner = None
        for idx, w in enumerate(active):
            if not pairing(u, w).is_zero():
                partner = idx
                break
        if partner is None:
            raise InternalContradiction("alternating form degenerated off the center")
        v = active.pop(partner)
        v = scale_vector(pairing(u, v).inverse(), v)
        reduced = []
        for w in active:
            w = sub_vectors(w, scale_vector(pairing(u, w), v))
            w = sub_vectors(w, scale_vector(-pairing(v, w), u))
            reduced.append(w)
        active = reduced
        rows.extend([u, v])
    rows.append(z)
    transform = Matrix.from_rows(rows, cols=n)
    result = algebra.change_basis(transform)
    expected = {
        key: unit_vector(n, target)
        for key, target in canonical_heisenberg_table(p).items()
    }
    if result.brackets != expected:
        raise InternalContradiction("symplectic extraction missed the canonical table")
    return transform
