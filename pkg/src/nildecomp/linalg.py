"""Exact linear algebra over Gaussian-rational scalars.

The canonical representation of a subspace is its reduced row-echelon basis,
so equality of spans is structural equality and every downstream computation
(series, classification, canonical forms) is reproducible bit for bit.
Choices that could be arbitrary are pinned: pivots are the first nonzero
entry scanning top to bottom, basis extensions append unit vectors at
non-pivot columns in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatch, SingularMatrix
from .scalars import ONE, ZERO, Scalar, scalar

Vector = tuple[Scalar, ...]


def vector(values) -> Vector:
    return tuple(scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(n))


def add_vectors(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub_vectors(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale_vector(c: Scalar, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def is_zero_vector(v: Vector) -> bool:
    return all(x.is_zero() for x in v)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    data: tuple[Vector, ...]

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "Matrix":
        data = tuple(vector(r) for r in rows)
        if data:
            cols = len(data[0])
            if any(len(r) != cols for r in data):
                raise AmbientMismatch("ragged rows")
        elif cols is None:
            raise AmbientMismatch("empty matrix needs an explicit column count")
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def entry(self, i: int, j: int) -> Scalar:
        return self.data[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise AmbientMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            row = [ZERO] * other.cols
            for k, a in enumerate(self.data[i]):
                if a.is_zero():
                    continue
                orow = other.data[k]
                for j in range(other.cols):
                    if not orow[j].is_zero():
                        row[j] = row[j] + a * orow[j]
            out.append(tuple(row))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Vector) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise AmbientMismatch("vector length does not match column count")
        return tuple(
            sum((a * x for a, x in zip(row, v) if not a.is_zero()), ZERO)
            for row in self.data
        )

    def row_apply(self, v: Vector) -> Vector:
        """Row vector times matrix."""
        if len(v) != self.rows:
            raise AmbientMismatch("vector length does not match row count")
        out = [ZERO] * self.cols
        for c, row in zip(v, self.data):
            if c.is_zero():
                continue
            for j, x in enumerate(row):
                if not x.is_zero():
                    out[j] = out[j] + c * x
        return tuple(out)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise AmbientMismatch("row counts differ")
        return Matrix(
            self.rows,
            self.cols + other.cols,
            tuple(a + b for a, b in zip(self.data, other.data)),
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise AmbientMismatch("column counts differ")
        return Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    def is_zero(self) -> bool:
        return all(is_zero_vector(r) for r in self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise SingularMatrix("only square matrices can be inverted")
        result = rref(self)
        if result.rank != self.rows:
            raise SingularMatrix(f"matrix has rank {result.rank} < {self.rows}")
        return result.transform

    def scaled(self, c: Scalar) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(scale_vector(c, r) for r in self.data))

    def add(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise AmbientMismatch("shapes differ")
        return Matrix(self.rows, self.cols, tuple(add_vectors(a, b) for a, b in zip(self.data, other.data)))

    def sub(self, other: "Matrix") -> "Matrix":
        return self.add(other.scaled(-ONE))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.data)


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    rank: int
    transform: Matrix
    pivots: tuple[int, ...]


def rref(m: Matrix) -> RrefResult:
    """Reduced row-echelon form with the invertible row transform.

    transform @ m == rref holds exactly; pivots are 1 with zeros above and
    below.
    """
    a = [list(r) for r in m.data]
    t = [list(r) for r in Matrix.identity(m.rows).data]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        pivot_row = None
        for r in range(pr, m.rows):
            if not a[r][pc].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            continue
        if pivot_row != pr:
            a[pr], a[pivot_row] = a[pivot_row], a[pr]
            t[pr], t[pivot_row] = t[pivot_row], t[pr]
        inv = a[pr][pc].inverse()
        if inv != ONE:
            a[pr] = [inv * x for x in a[pr]]
            t[pr] = [inv * x for x in t[pr]]
        for r in range(m.rows):
            if r == pr:
                continue
            f = a[r][pc]
            if f.is_zero():
                continue
            arow, prow = a[r], a[pr]
            for c in range(pc, m.cols):
                if not prow[c].is_zero():
                    arow[c] = arow[c] - f * prow[c]
            trow, tprow = t[r], t[pr]
            for c in range(m.rows):
                if not tprow[c].is_zero():
                    trow[c] = trow[c] - f * tprow[c]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return RrefResult(
        Matrix(m.rows, m.cols, tuple(tuple(r) for r in a)),
        len(pivots),
        Matrix(m.rows, m.rows, tuple(tuple(r) for r in t)),
        tuple(pivots),
    )


@dataclass(frozen=True)
class Subspace:
    """A subspace of coordinate space, stored by its canonical echelon basis."""

    ambient_dim: int
    basis: Matrix
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "Subspace":
        rows = [vector(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise AmbientMismatch("vector length does not match ambient dimension")
        if not rows:
            return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())
        result = rref(Matrix.from_rows(rows))
        kept = result.matrix.data[: result.rank]
        return cls(ambient_dim, Matrix(result.rank, ambient_dim, kept), result.pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(
            ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim))
        )

    @property
    def dim(self) -> int:
        return self.basis.rows

    def coordinates(self, v) -> Vector | None:
        """Coordinates of v in the echelon basis, or None if v is outside.

        Pivot columns of an echelon basis are unit columns, so the candidate
        coordinates can be read off directly and verified by reconstruction.
        """
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient dimension")
        coords = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, row in zip(coords, self.basis.data):
            if c.is_zero():
                continue
            for j, x in enumerate(row):
                if not x.is_zero():
                    residual[j] = residual[j] - c * x
        if all(x.is_zero() for x in residual):
            return coords
        return None

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("ambient dimensions differ")
        return all(self.contains(r) for r in other.basis.data)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    return Subspace.from_vectors(a.ambient_dim, a.basis.data + b.basis.data)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the left kernel of the stacked bases.

    A combination c_a . A equals c_b . B exactly when (c_a, -c_b) lies in the
    left kernel of [A; B]; no inner product is assumed.
    """
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    stacked = a.basis.vstack(b.basis)
    vectors = []
    for k in kernel_basis(stacked.transpose()):
        coeffs_a = k[: a.dim]
        combo = zero_vector(a.ambient_dim)
        for c, row in zip(coeffs_a, a.basis.data):
            if not c.is_zero():
                combo = add_vectors(combo, scale_vector(c, row))
        vectors.append(combo)
    return Subspace.from_vectors(a.ambient_dim, vectors)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of {x : m.apply(x) = 0}, one vector per free column."""
    result = rref(m)
    pivot_set = set(result.pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    out = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(result.pivots):
            v[p] = -result.matrix.entry(i, f)
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class LinearSolution:
    consistent: bool
    particular: "Vector | Matrix | None"
    kernel: Subspace


def solve_linear(a: Matrix, rhs) -> LinearSolution:
    """Solve a.x = rhs, for a single column vector or column-wise for a
    Matrix right-hand side.

    Inconsistency is reported, not raised.  The kernel of ``a`` is always
    returned as a canonical subspace.
    """
    single = not isinstance(rhs, Matrix)
    if single:
        rhs = vector(rhs)
        if len(rhs) != a.rows:
            raise AmbientMismatch("right-hand side length does not match row count")
        rhs = Matrix.from_rows([rhs], cols=len(rhs)).transpose()
    elif rhs.rows != a.rows:
        raise AmbientMismatch("right-hand side row count does not match")
    result = rref(a.hstack(rhs))
    kernel = Subspace.from_vectors(a.cols, kernel_basis(a))
    if any(p >= a.cols for p in result.pivots):
        return LinearSolution(False, None, kernel)
    columns = []
    for j in range(rhs.cols):
        x = [ZERO] * a.cols
        for i, p in enumerate(result.pivots):
            x[p] = result.matrix.entry(i, a.cols + j)
        columns.append(tuple(x))
    particular = Matrix.from_rows(columns, cols=a.cols).transpose()
    if single:
        return LinearSolution(True, particular.column(0), kernel)
    return LinearSolution(True, particular, kernel)


def extend_to_full_basis(s: Subspace) -> Matrix:
    """Complete the canonical basis of ``s`` to a basis of the ambient space.

    The first dim(s) rows are the echelon basis; the remaining rows are unit
    vectors at the non-pivot columns, in ascending order.  The result is
    always invertible.
    """
    n = s.ambient_dim
    pivot_set = set(s.pivots)
    rows = list(s.basis.data)
    rows.extend(unit_vector(n, c) for c in range(n) if c not in pivot_set)
    return Matrix(n, n, tuple(rows))
