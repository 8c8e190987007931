"""Constructive algorithms for solvable algebras with Abelian or Heisenberg
left part: structure-data extraction, constraint verification, assembly,
admissible transformations, the direct-sum split of algebras with an Abelian
left part acting on a line, and the canonical form of algebras with a
Heisenberg left part acting on a line.

Structure data presents such an algebra on a basis (y_1..y_m, x_1..x_q):
the y's span the near-perfect radical and bracket to zero, [x_a, y_k] is
column k of the matrix D_a, and [x_a, x_b] is the vector b[(a, b)] over the
y's, plus, in the Heisenberg family, a leading x_{q} term on symplectic
pairs.  All indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .classify import DecompositionTag, heisenberg_basis, recognize_nilpotent
from .errors import (
    ConstraintViolation,
    InternalContradiction,
    NotQuotientPreserving,
    SingularMatrix,
    WrongTag,
)
from .liealg import LieAlgebra, direct_sum
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    extend_to_full_basis,
    is_zero_vector,
    scale_vector,
    sub_vectors,
    subspace_intersect,
    subspace_sum,
    unit_vector,
    vector,
    zero_vector,
)
from .scalars import ONE
from .series import left_right_nilpotent


@dataclass(frozen=True)
class AbelianLeft:
    n1: int
    n2: int


@dataclass(frozen=True)
class HeisenbergLeft:
    p: int
    n: int


Family = AbelianLeft | HeisenbergLeft


@dataclass(frozen=True)
class StructureData:
    family: Family
    d_matrices: tuple[Matrix, ...]
    b: dict[tuple[int, int], Vector]

    @property
    def m(self) -> int:
        """Number of y generators (dimension of the radical part)."""
        return self.family.n2 if isinstance(self.family, AbelianLeft) else self.family.n

    @property
    def q(self) -> int:
        """Number of x generators (dimension of the quotient part)."""
        if isinstance(self.family, AbelianLeft):
            return self.family.n1
        return 2 * self.family.p + 1

    def is_symplectic_pair(self, a: int, b: int) -> bool:
        if isinstance(self.family, AbelianLeft):
            return False
        return a % 2 == 0 and b == a + 1 and b < 2 * self.family.p

    def b_vector(self, a: int, b: int) -> Vector:
        if a < b:
            return self.b.get((a, b), zero_vector(self.m))
        return scale_vector(-ONE, self.b.get((b, a), zero_vector(self.m)))


def structure_data(family: Family, d_matrices, b=None) -> StructureData:
    """Validate shapes and normalise the sparse b table (zero vectors dropped)."""
    if isinstance(family, AbelianLeft):
        if family.n1 < 1 or family.n2 < 1:
            raise WrongTag("both parts of the Abelian-left family must be nonzero")
    else:
        if family.p < 1 or family.n < 1:
            raise WrongTag("the Heisenberg-left family needs p >= 1 and n >= 1")
    data = StructureData(family, tuple(d_matrices), {})
    m, q = data.m, data.q
    if len(data.d_matrices) != q:
        raise WrongTag(f"expected {q} action matrices, got {len(data.d_matrices)}")
    for d in data.d_matrices:
        if d.shape != (m, m):
            raise WrongTag(f"action matrices must be {m}x{m}")
    table: dict[tuple[int, int], Vector] = {}
    for (a, bidx), coeffs in (b or {}).items():
        if not (0 <= a < bidx < q):
            raise WrongTag(f"bracket constant key {(a, bidx)} out of range")
        v = vector(coeffs)
        if len(v) != m:
            raise WrongTag(f"bracket constant for {(a, bidx)} has wrong length")
        if not is_zero_vector(v):
            table[(a, bidx)] = v
    return StructureData(family, data.d_matrices, dict(sorted(table.items())))


@dataclass(frozen=True)
class ConstraintFailure:
    kind: str  # "commutation" | "bracket" | "span"
    indices: tuple[int, ...]


@dataclass(frozen=True)
class ConstraintReport:
    failures: tuple[ConstraintFailure, ...]

    @property
    def jacobi_ok(self) -> bool:
        """Do the equations equivalent to the Jacobi identity all hold?"""
        return all(f.kind == "span" for f in self.failures)

    @property
    def spanning_ok(self) -> bool:
        return all(f.kind != "span" for f in self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return a.mul(b).sub(b.mul(a))


def verify_constraints(data: StructureData) -> ConstraintReport:
    """Check every structure-data constraint, reporting failures by equation.

    The commutation and bracket-compatibility equations are exactly the
    nontrivial components of the Jacobi identity for the assembled table (the
    bracket equations are derived directly from the identity).  The spanning
    condition is independent of Jacobi: it makes the y-part the full
    near-perfect radical.
    """
    failures: list[ConstraintFailure] = []
    m, q = data.m, data.q
    d = data.d_matrices
    heis = isinstance(data.family, HeisenbergLeft)
    lead = q - 1

    for a in range(q):
        for b in range(a + 1, q):
            expected = d[lead] if data.is_symplectic_pair(a, b) else Matrix.zeros(m, m)
            if _commutator(d[a], d[b]) != expected:
                failures.append(ConstraintFailure("commutation", (a, b)))

    def b_star(t: int) -> Vector:
        # Bracket of x_t against the leading generator; zero by convention
        # when t is the leading index itself.
        if not heis or t == lead:
            return zero_vector(m)
        return data.b_vector(t, lead)

    for a in range(q):
        for b in range(a + 1, q):
            for c in range(b + 1, q):
                residual = add_vectors(
                    d[a].apply(data.b_vector(b, c)),
                    scale_vector(-ONE, d[b].apply(data.b_vector(a, c))),
                )
                residual = add_vectors(residual, d[c].apply(data.b_vector(a, b)))
                if data.is_symplectic_pair(b, c):
                    residual = add_vectors(residual, b_star(a))
                if data.is_symplectic_pair(a, b):
                    residual = add_vectors(residual, b_star(c))
                if not is_zero_vector(residual):
                    failures.append(ConstraintFailure("bracket", (a, b, c)))

    columns = [mat.column(k) for mat in d for k in range(m)]
    if Subspace.from_vectors(m, columns).dim != m:
        failures.append(ConstraintFailure("span", ()))
    return ConstraintReport(tuple(failures))


def assemble_raw(data: StructureData) -> LieAlgebra:
    """Assemble the bracket table without checking any constraint.

    The result need not satisfy the Jacobi identity; callers that require a
    Lie algebra should use build_from_structure.
    """
    m, q = data.m, data.q
    n = m + q
    heis = isinstance(data.family, HeisenbergLeft)
    table: dict[tuple[int, int], Vector] = {}
    for a in range(q):
        for i in range(m):
            col = data.d_matrices[a].column(i)
            if not is_zero_vector(col):
                table[(i, m + a)] = scale_vector(-ONE, col) + zero_vector(q)
    for a in range(q):
        for b in range(a + 1, q):
            v = list(data.b_vector(a, b) + zero_vector(q))
            if heis and data.is_symplectic_pair(a, b):
                v[m + q - 1] = v[m + q - 1] + ONE
            if not all(x.is_zero() for x in v):
                table[(m + a, m + b)] = tuple(v)
    labels = tuple(f"y{i + 1}" for i in range(m)) + tuple(f"x{a + 1}" for a in range(q))
    return LieAlgebra.from_brackets(n, table, labels)


def build_from_structure(data: StructureData) -> LieAlgebra:
    report = verify_constraints(data)
    if not report.ok:
        raise ConstraintViolation(
            "structure data violates its constraints", report=report
        )
    algebra = assemble_raw(data)
    check = algebra.validate()
    if not check.passed:
        raise InternalContradiction(
            "constraints passed but the assembled table broke the Jacobi identity",
            triple=check.failing_triple,
        )
    return algebra


def extract_structure(algebra: LieAlgebra) -> tuple[StructureData, Matrix]:
    """Read off (D, b) data from a suitable algebra, plus the chosen basis.

    The y-basis is the canonical echelon basis of the near-perfect radical;
    the x-lifts are the deterministic unit-vector complement, composed in the
    Heisenberg case with the symplectic normalisation of the quotient so its
    brackets carry the canonical leading terms.  The returned basis matrix
    holds the y rows followed by the x rows in ambient coordinates.
    """
    split = left_right_nilpotent(algebra)
    left_cls = recognize_nilpotent(split.left)
    right_cls = recognize_nilpotent(split.right)
    if left_cls.kind == "abelian" and right_cls.kind == "abelian":
        family: Family = AbelianLeft(left_cls.size, right_cls.size)
    elif left_cls.kind == "heisenberg" and right_cls.kind == "abelian":
        family = HeisenbergLeft(left_cls.size, right_cls.size)
    else:
        raise WrongTag(
            f"structure extraction needs an Abelian or Heisenberg left part acting "
            f"on an Abelian radical, got {DecompositionTag(left_cls, right_cls).render()}"
        )
    np_space = split.np_radical
    m = np_space.dim
    q = algebra.dim - m
    full = extend_to_full_basis(np_space)
    complement = full.data[m:]
    if isinstance(family, AbelianLeft):
        x_rows = list(complement)
    else:
        normaliser = heisenberg_basis(split.left)
        x_rows = []
        for coeffs in normaliser.data:
            v = zero_vector(algebra.dim)
            for c, row in zip(coeffs, complement):
                if not c.is_zero():
                    v = add_vectors(v, scale_vector(c, row))
            x_rows.append(v)

    def radical_coords(v: Vector) -> Vector:
        coords = np_space.coordinates(v)
        if coords is None:
            raise InternalContradiction("bracket escaped the near-perfect radical")
        return coords

    d_matrices = []
    for a in range(q):
        cols = [radical_coords(algebra.bracket(x_rows[a], y)) for y in np_space.basis.data]
        d_matrices.append(Matrix.from_rows(cols, cols=m).transpose())
    b_table: dict[tuple[int, int], Vector] = {}
    data_shell = StructureData(family, tuple(d_matrices), {})
    for a in range(q):
        for b in range(a + 1, q):
            w = algebra.bracket(x_rows[a], x_rows[b])
            if data_shell.is_symplectic_pair(a, b):
                w = sub_vectors(w, x_rows[q - 1])
            coords = radical_coords(w)
            if not is_zero_vector(coords):
                b_table[(a, b)] = coords
    data = structure_data(family, d_matrices, b_table)
    report = verify_constraints(data)
    if not report.ok:
        raise InternalContradiction(
            "extracted data violated its own constraints",
            failures=[(f.kind, f.indices) for f in report.failures],
        )
    basis = Matrix.from_rows(list(np_space.basis.data) + x_rows, cols=algebra.dim)
    return data, basis


def apply_admissible_transform(
    data: StructureData, r: Matrix, s: Matrix, g: Matrix
) -> tuple[StructureData, Matrix]:
    """Transform structure data by re-picking representatives (r), changing
    the radical basis (s), and mixing the complement generators (g).

    The induced action on (D, b) is obtained by performing the corresponding
    basis change on the assembled algebra and re-extracting, rather than by
    closed formulas.  Returns the new data and the certificate basis-change
    matrix; the two assembled algebras are isomorphic via that certificate.
    """
    report = verify_constraints(data)
    if not report.ok:
        raise ConstraintViolation("structure data violates its constraints", report=report)
    m, q = data.m, data.q
    if r.shape != (q, m):
        raise WrongTag(f"representative shift must be {q}x{m}")
    if s.shape != (m, m):
        raise WrongTag(f"radical basis change must be {m}x{m}")
    if g.shape != (q, q):
        raise WrongTag(f"complement basis change must be {q}x{q}")
    try:
        s.inverse()
        g.inverse()
    except SingularMatrix:
        raise SingularMatrix("the basis-change blocks must be invertible")
    if isinstance(data.family, HeisenbergLeft):
        p = data.family.p
        canonical = LieAlgebra.from_brackets(
            q, {(2 * l, 2 * l + 1): unit_vector(q, q - 1) for l in range(p)}
        )
        if canonical.change_basis(g).brackets != canonical.brackets:
            raise NotQuotientPreserving(
                "complement change must preserve the canonical quotient brackets"
            )
    shifted = g.mul(r)
    rows = []
    for i in range(m):
        rows.append(s.row(i) + zero_vector(q))
    for a in range(q):
        rows.append(shifted.row(a) + g.row(a))
    certificate = Matrix.from_rows(rows, cols=m + q)
    transformed = assemble_raw(data).change_basis(certificate)
    new_data, basis = extract_structure(transformed)
    if basis != Matrix.identity(m + q):
        raise InternalContradiction("re-extraction failed to land on the unit basis")
    check = verify_constraints(new_data)
    if not check.ok:
        raise InternalContradiction("transformed data violated its constraints")
    return new_data, certificate


@dataclass(frozen=True)
class DirectSumWitness:
    ideals: tuple[Subspace, ...]
    components: tuple[LieAlgebra, ...]
    assembly: Matrix


def make_witness(algebra: LieAlgebra, ideals) -> DirectSumWitness:
    """Assemble and fully verify a direct-sum witness from candidate ideals."""
    ideals = tuple(ideals)
    for idx, s in enumerate(ideals):
        if not algebra.is_ideal(s):
            raise InternalContradiction("witness component is not an ideal", index=idx)
    for i in range(len(ideals)):
        for j in range(i + 1, len(ideals)):
            if subspace_intersect(ideals[i], ideals[j]).dim != 0:
                raise InternalContradiction(
                    "witness ideals overlap", pair=(i, j)
                )
    total = reduce(subspace_sum, ideals, Subspace.zero(algebra.dim))
    if total.dim != algebra.dim:
        raise InternalContradiction("witness ideals do not span the algebra")
    components = tuple(algebra.restrict(s)[0] for s in ideals)
    rows = [row for s in ideals for row in s.basis.data]
    assembly = Matrix.from_rows(rows, cols=algebra.dim)
    block = reduce(direct_sum, components)
    if algebra.change_basis(assembly).brackets != block.brackets:
        raise InternalContradiction("witness reassembly does not reproduce the algebra")
    return DirectSumWitness(ideals, components, assembly)


def decompose_an_a1(algebra: LieAlgebra) -> DirectSumWitness:
    """Split an algebra with Abelian left part of dimension >= 2 acting on a
    line into a two-dimensional solvable block plus central lines.

    Follows the constructive proof: normalise a generator x with [x, y] = y
    over the line spanned by y, complete to a basis, and shift each extra
    generator u into the centraliser z = u - a x + b y; the shifted
    generators must bracket to zero, which is asserted.
    """
    split = left_right_nilpotent(algebra)
    left_cls = recognize_nilpotent(split.left)
    right_cls = recognize_nilpotent(split.right)
    if not (
        left_cls.kind == "abelian"
        and left_cls.size >= 2
        and right_cls.kind == "abelian"
        and right_cls.size == 1
    ):
        raise WrongTag(
            "direct-sum split requires an A(n)-A(1) tag with n >= 2, got "
            f"{DecompositionTag(left_cls, right_cls).render()}"
        )
    n = algebra.dim
    np_space = split.np_radical
    y = np_space.basis.row(0)

    def line_coord(v: Vector):
        coords = np_space.coordinates(v)
        if coords is None:
            raise InternalContradiction("bracket escaped the derived line")
        return coords[0]

    x = None
    for i in range(n):
        alpha = line_coord(algebra.bracket(unit_vector(n, i), y))
        if not alpha.is_zero():
            x = scale_vector(alpha.inverse(), unit_vector(n, i))
            break
    if x is None:
        raise InternalContradiction("no generator acts nontrivially on the radical line")
    plane = Subspace.from_vectors(n, [x, y])
    if plane.dim != 2:
        raise InternalContradiction("normalised generator collapsed onto the radical line")
    zs = []
    for u in extend_to_full_basis(plane).data[2:]:
        alpha = line_coord(algebra.bracket(u, y))
        beta = line_coord(algebra.bracket(u, x))
        z = add_vectors(u, scale_vector(-alpha, x))
        z = add_vectors(z, scale_vector(beta, y))
        if not (
            is_zero_vector(algebra.bracket(z, y))
            and is_zero_vector(algebra.bracket(z, x))
        ):
            raise InternalContradiction("shifted generator failed to centralise the block")
        zs.append(z)
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if not is_zero_vector(algebra.bracket(zs[i], zs[j])):
                raise InternalContradiction(
                    "shifted generators do not commute", pair=(i, j)
                )
    ideals = [plane] + [Subspace.from_vectors(n, [z]) for z in zs]
    return make_witness(algebra, ideals)


def canonicalize_hp_a1(algebra: LieAlgebra) -> tuple[Matrix, LieAlgebra]:
    """Canonical form of an algebra with Heisenberg left part acting on a line.

    Mirrors the constructive uniqueness proof: lift a symplectically
    normalised basis of the quotient, kill the radical action of everything
    but the first generator, then absorb the remaining line coefficients.
    Every coefficient the proof shows to vanish is asserted; a violation
    signals input outside the precondition.
    """
    split = left_right_nilpotent(algebra)
    left_cls = recognize_nilpotent(split.left)
    right_cls = recognize_nilpotent(split.right)
    if not (
        left_cls.kind == "heisenberg"
        and right_cls.kind == "abelian"
        and right_cls.size == 1
    ):
        raise WrongTag(
            "canonicalisation requires an Hp-A(1) tag, got "
            f"{DecompositionTag(left_cls, right_cls).render()}"
        )
    p = left_cls.size
    n = algebra.dim
    np_space = split.np_radical
    y = np_space.basis.row(0)

    def line_coord(v: Vector):
        coords = np_space.coordinates(v)
        if coords is None:
            raise InternalContradiction("bracket escaped the radical line")
        return coords[0]

    normaliser = heisenberg_basis(split.left)
    complement = extend_to_full_basis(np_space).data[1:]
    lifts = []
    for coeffs in normaliser.data:
        v = zero_vector(n)
        for c, row in zip(coeffs, complement):
            if not c.is_zero():
                v = add_vectors(v, scale_vector(c, row))
        lifts.append(v)

    def alpha(i: int):
        return line_coord(algebra.bracket(lifts[i], y))

    if not alpha(2 * p).is_zero():
        raise InternalContradiction("the central lift acts on the radical line")
    first = next((i for i in range(2 * p) if not alpha(i).is_zero()), None)
    if first is None:
        raise InternalContradiction("no lift acts on the radical line")
    pair = first // 2
    if first % 2 == 1:
        lifts[2 * pair], lifts[2 * pair + 1] = (
            lifts[2 * pair + 1],
            scale_vector(-ONE, lifts[2 * pair]),
        )
    if pair != 0:
        lifts[0], lifts[2 * pair] = lifts[2 * pair], lifts[0]
        lifts[1], lifts[2 * pair + 1] = lifts[2 * pair + 1], lifts[1]
    scale = alpha(0)
    if scale.is_zero():
        raise InternalContradiction("reordering lost the acting generator")
    lifts[0] = scale_vector(scale.inverse(), lifts[0])
    lifts[1] = scale_vector(scale, lifts[1])
    if alpha(0) != ONE:
        raise InternalContradiction("normalisation failed to fix the action to one")

    alphas = [alpha(i) for i in range(2 * p + 1)]
    shifted = list(lifts)
    correction = zero_vector(n)
    for l in range(1, p):
        correction = add_vectors(
            correction,
            sub_vectors(
                scale_vector(alphas[2 * l + 1], lifts[2 * l]),
                scale_vector(alphas[2 * l], lifts[2 * l + 1]),
            ),
        )
    shifted[1] = sub_vectors(
        sub_vectors(lifts[1], scale_vector(alphas[1], lifts[0])), correction
    )
    for i in range(2, 2 * p):
        shifted[i] = sub_vectors(lifts[i], scale_vector(alphas[i], lifts[0]))

    beta_pair0 = line_coord(sub_vectors(algebra.bracket(shifted[0], shifted[1]), shifted[2 * p]))
    beta_first = {
        j: line_coord(algebra.bracket(shifted[0], shifted[j])) for j in range(2, 2 * p + 1)
    }
    final = list(shifted)
    final[1] = add_vectors(
        shifted[1], scale_vector(-(beta_pair0 + beta_first[2 * p]), y)
    )
    for j in range(2, 2 * p + 1):
        final[j] = add_vectors(shifted[j], scale_vector(-beta_first[j], y))

    transform = Matrix.from_rows(final + [y], cols=n)
    result = algebra.change_basis(transform)
    expected: dict[tuple[int, int], Vector] = {
        (2 * l, 2 * l + 1): unit_vector(n, 2 * p) for l in range(p)
    }
    expected[(0, n - 1)] = unit_vector(n, n - 1)
    if result.brackets != expected:
        raise InternalContradiction(
            "residual coefficients failed to vanish in the canonical form"
        )
    return transform, result
