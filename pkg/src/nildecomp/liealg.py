"""Lie algebras given by structure constants, and their core operations.

A bracket table stores one coordinate vector per ordered basis pair (i, j)
with i < j; antisymmetry and [e_i, e_i] = 0 hold by construction, so the only
axiom with actual test surface is the Jacobi identity.  Zero bracket vectors
are never stored, which makes structural equality of tables meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    InternalContradiction,
    NotAnIdeal,
    NotASubalgebra,
    SingularMatrix,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    extend_to_full_basis,
    is_zero_vector,
    kernel_basis,
    scale_vector,
    unit_vector,
    vector,
    zero_vector,
)
from .scalars import ZERO, scalar


def default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class LinearMap:
    """A linear map between coordinate spaces; column k is the image of e_k."""

    source_dim: int
    target_dim: int
    matrix: Matrix

    def apply(self, v) -> Vector:
        return self.matrix.apply(vector(v))


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    failing_triple: tuple[int, int, int] | None = None
    residual: Vector | None = None


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    brackets: dict[tuple[int, int], Vector]
    labels: tuple[str, ...] = field(compare=False, default=())

    @classmethod
    def from_brackets(cls, dim, brackets, labels=None) -> "LieAlgebra":
        """Build a bracket table, normalising scalars and dropping zero rows."""
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"bracket index pair {(i, j)} out of range for dim {dim}")
            v = vector(coeffs)
            if len(v) != dim:
                raise DimensionMismatch(f"bracket vector for {(i, j)} has wrong length")
            if not is_zero_vector(v):
                table[(i, j)] = v
        if labels is None:
            labels = default_labels(dim)
        labels = tuple(labels)
        if len(labels) != dim:
            raise DimensionMismatch("label count does not match dimension")
        return cls(dim, dict(sorted(table.items())), labels)

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any index order."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self.brackets.get((i, j), zero_vector(self.dim))
        v = self.brackets.get((j, i))
        return zero_vector(self.dim) if v is None else scale_vector(-scalar(1), v)

    def bracket(self, x, y) -> Vector:
        """Bilinear expansion of [x, y] over the stored table."""
        x = vector(x)
        y = vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("vectors must match the algebra dimension")
        acc = [ZERO] * self.dim
        for (i, j), v in self.brackets.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c.is_zero():
                continue
            for k, s in enumerate(v):
                if not s.is_zero():
                    acc[k] = acc[k] + c * s
        return tuple(acc)

    def ad_matrix(self, i: int) -> Matrix:
        """Matrix of y -> [e_i, y]; column k is [e_i, e_k]."""
        cols = [self.bracket_basis(i, k) for k in range(self.dim)]
        return Matrix.from_rows(cols, cols=self.dim).transpose()

    def ad_apply(self, i: int, v: Vector) -> Vector:
        """[e_i, v] without the general bilinear scan."""
        acc = [ZERO] * self.dim
        for (a, b), vec in self.brackets.items():
            if a == i:
                c = v[b]
            elif b == i:
                c = -v[a]
            else:
                continue
            if c.is_zero():
                continue
            for k, s in enumerate(vec):
                if not s.is_zero():
                    acc[k] = acc[k] + c * s
        return tuple(acc)

    def validate(self) -> ValidationReport:
        """Check the Jacobi identity on every basis triple.

        Reports the lexicographically first failing triple with its residual.
        """
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    r = add_vectors(
                        self.bracket(unit_vector(self.dim, i), self.bracket_basis(j, k)),
                        self.bracket(unit_vector(self.dim, j), self.bracket_basis(k, i)),
                    )
                    r = add_vectors(
                        r,
                        self.bracket(unit_vector(self.dim, k), self.bracket_basis(i, j)),
                    )
                    if not is_zero_vector(r):
                        return ValidationReport(False, (i, j, k), r)
        return ValidationReport(True)

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def product_space(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of all brackets [x, y] with x in a, y in b."""
        if a.ambient_dim != self.dim or b.ambient_dim != self.dim:
            raise DimensionMismatch("subspace ambient dimension must match the algebra")
        products = []
        for x in a.basis.data:
            xi = _unit_index(x)
            for y in b.basis.data:
                if xi is not None:
                    products.append(self.ad_apply(xi, y))
                    continue
                yi = _unit_index(y)
                if yi is not None:
                    products.append(
                        tuple(-c for c in self.ad_apply(yi, x))
                    )
                else:
                    products.append(self.bracket(x, y))
        return Subspace.from_vectors(self.dim, products)

    def derived_algebra(self) -> Subspace:
        full = self.full_space()
        return self.product_space(full, full)

    def center(self) -> Subspace:
        """Kernel of the stacked adjoint maps."""
        if self.dim == 0:
            return Subspace.zero(0)
        stacked = self.ad_matrix(0)
        for i in range(1, self.dim):
            stacked = stacked.vstack(self.ad_matrix(i))
        return Subspace.from_vectors(self.dim, kernel_basis(stacked))

    def is_ideal(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise DimensionMismatch("subspace ambient dimension must match the algebra")
        return s.contains_subspace(self.product_space(self.full_space(), s))

    def restrict(self, s: Subspace) -> tuple["LieAlgebra", LinearMap]:
        """Structure constants of a subalgebra in its canonical basis.

        Also returns the inclusion map back into the ambient space.
        """
        rows = s.basis.data
        table = {}
        for i in range(s.dim):
            for j in range(i + 1, s.dim):
                w = self.bracket(rows[i], rows[j])
                coords = s.coordinates(w)
                if coords is None:
                    raise NotASubalgebra(
                        "subspace is not closed under the bracket", pair=(i, j)
                    )
                table[(i, j)] = coords
        labels = []
        for r in rows:
            idx = _unit_index(r)
            labels.append(self.labels[idx] if idx is not None else f"v{len(labels) + 1}")
        inclusion = LinearMap(s.dim, self.dim, Matrix.from_rows(rows, cols=self.dim).transpose())
        return LieAlgebra.from_brackets(s.dim, table, labels), inclusion

    def quotient(self, s: Subspace) -> tuple["LieAlgebra", LinearMap]:
        """Quotient algebra on the deterministic complement basis.

        The complement consists of unit vectors at non-pivot columns of the
        ideal's echelon basis, so quotient tables are reproducible.  The
        projection is verified to be a homomorphism before returning.
        """
        if not self.is_ideal(s):
            raise NotAnIdeal("quotient requires an ideal")
        full = extend_to_full_basis(s)
        q = self.dim - s.dim
        inv = full.inverse()
        # Row k of inv expresses e_k in the (ideal basis, complement) rows.
        proj_cols = [inv.row(k)[s.dim :] for k in range(self.dim)]
        proj = LinearMap(self.dim, q, Matrix.from_rows(proj_cols, cols=q).transpose() if q else Matrix.zeros(0, self.dim))
        comp_rows = full.data[s.dim :]
        table = {}
        for a in range(q):
            for b in range(a + 1, q):
                w = self.bracket(comp_rows[a], comp_rows[b])
                table[(a, b)] = proj.apply(w)
        labels = []
        for r in comp_rows:
            idx = _unit_index(r)
            labels.append(self.labels[idx] if idx is not None else f"q{len(labels) + 1}")
        quotient_algebra = LieAlgebra.from_brackets(q, table, labels)
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = proj.apply(self.bracket_basis(i, j))
                rhs = quotient_algebra.bracket(
                    proj.apply(unit_vector(self.dim, i)),
                    proj.apply(unit_vector(self.dim, j)),
                )
                if lhs != rhs:
                    raise InternalContradiction(
                        "quotient projection failed to be a homomorphism", pair=(i, j)
                    )
        return quotient_algebra, proj

    def change_basis(self, p: Matrix) -> "LieAlgebra":
        """Structure constants in the basis whose vectors are the rows of p."""
        if p.shape != (self.dim, self.dim):
            raise DimensionMismatch("basis-change matrix must be square of the algebra dimension")
        try:
            inv = p.inverse()
        except SingularMatrix:
            raise SingularMatrix("basis-change matrix is singular")
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = self.bracket(p.row(i), p.row(j))
                table[(i, j)] = inv.row_apply(w)
        return LieAlgebra.from_brackets(self.dim, table, self.labels)


def _unit_index(v: Vector) -> int | None:
    idx = None
    for k, x in enumerate(v):
        if x.is_zero():
            continue
        if idx is not None or x != scalar(1):
            return None
        idx = k
    return idx


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block direct sum; cross brackets vanish and both blocks are ideals."""
    n = a.dim + b.dim
    table: dict[tuple[int, int], Vector] = {}
    for (i, j), v in a.brackets.items():
        table[(i, j)] = v + zero_vector(b.dim)
    for (i, j), v in b.brackets.items():
        table[(i + a.dim, j + a.dim)] = zero_vector(a.dim) + v
    return LieAlgebra.from_brackets(n, table, a.labels + b.labels)


def is_isomorphism_via(a: LieAlgebra, b: LieAlgebra, p: Matrix) -> bool:
    """Certificate check: does the basis change by p carry a onto b exactly?"""
    if a.dim != b.dim:
        raise DimensionMismatch("algebras have different dimensions")
    return a.change_basis(p).brackets == b.brackets
