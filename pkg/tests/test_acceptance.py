"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line.  All comparisons are exact; the only tolerances are wall-time
budgets, asserted inside the tests themselves.
"""

import functools
import json
import random
import time

from conftest import random_invertible_matrix
from nildecomp.catalog import SOLVABLE_FIXTURES, expected_for, make
from nildecomp.centroid import centroid, conjecture_search, decomposability
from nildecomp.classify import decomposition_tag, recognize_nilpotent
from nildecomp.liealg import direct_sum, is_isomorphism_via
from nildecomp.linalg import Matrix, Subspace, unit_vector
from nildecomp.scalars import ZERO, scalar
from nildecomp.serialize import algebra_from_json, algebra_to_json
from nildecomp.series import (
    extended_lcs,
    lower_central_series,
    near_perfect_radical,
    nilpotency_solvability,
)
from nildecomp.structure import (
    AbelianLeft,
    HeisenbergLeft,
    assemble_raw,
    build_from_structure,
    canonicalize_hp_a1,
    decompose_an_a1,
    extract_structure,
    structure_data,
    verify_constraints,
)


def _passed(criterion: str, detail: str) -> None:
    print(f"ACCEPTANCE {criterion} PASS: {detail}")


def axis_span(ambient, indices):
    return Subspace.from_vectors(ambient, [unit_vector(ambient, i) for i in indices])


# -- shared generated corpora (criteria 3-7 reuse them) ----------------------


@functools.lru_cache(maxsize=None)
def heisenberg_line_instances():
    """25 invertible scrambles of the canonical table for each p in 1..3."""
    rng = random.Random(1003)
    out = []
    for p in (1, 2, 3):
        base = make("canonical_HpA1", {"p": p})
        for _ in range(25):
            out.append((p, base.change_basis(random_invertible_matrix(base.dim, rng))))
    return out


def _solve_b_kernel(family, mats, rng):
    """Sample bracket constants from the kernel of the compatibility system."""
    q = family.n1 if isinstance(family, AbelianLeft) else 2 * family.p + 1
    m = family.n2 if isinstance(family, AbelianLeft) else family.n
    pairs = [(a, b) for a in range(q) for b in range(a + 1, q)]
    shell = structure_data(family, mats, {})
    lead = q - 1
    rows = []
    for a in range(q):
        for b in range(a + 1, q):
            for c in range(b + 1, q):
                for j in range(m):
                    row = [ZERO] * (len(pairs) * m)

                    def add(pair, coeffs):
                        base = pairs.index(pair) * m
                        for k, x in enumerate(coeffs):
                            row[base + k] = row[base + k] + x

                    add((b, c), [mats[a].entry(j, k) for k in range(m)])
                    add((a, c), [-mats[b].entry(j, k) for k in range(m)])
                    add((a, b), [mats[c].entry(j, k) for k in range(m)])
                    if shell.is_symplectic_pair(b, c) and a != lead:
                        add((a, lead), unit_vector(m, j))
                    if shell.is_symplectic_pair(a, b) and c != lead:
                        add((c, lead), unit_vector(m, j))
                    rows.append(row)
    if not rows:
        flat = [scalar(rng.randint(-2, 2)) for _ in range(len(pairs) * m)]
    else:
        from nildecomp.linalg import kernel_basis

        flat = [ZERO] * (len(pairs) * m)
        for vec in kernel_basis(Matrix.from_rows(rows, cols=len(pairs) * m)):
            c = scalar(rng.randint(-2, 2))
            if not c.is_zero():
                flat = [acc + c * x for acc, x in zip(flat, vec)]
    return {
        key: tuple(flat[idx * m : (idx + 1) * m]) for idx, key in enumerate(pairs)
    }


def _random_valid_data(family, rng):
    q = family.n1 if isinstance(family, AbelianLeft) else 2 * family.p + 1
    m = family.n2 if isinstance(family, AbelianLeft) else family.n
    while True:
        seed_matrix = Matrix.from_rows(
            [[scalar(rng.randint(-2, 2)) for _ in range(m)] for _ in range(m)]
        )
        powers = [Matrix.identity(m)]
        for _ in range(m - 1):
            powers.append(powers[-1].mul(seed_matrix))
        mats = []
        for a in range(q):
            if isinstance(family, HeisenbergLeft) and a == q - 1:
                # the leading action is a commutator of commuting maps: zero
                mats.append(Matrix.zeros(m, m))
                continue
            acc = Matrix.zeros(m, m)
            for power in powers:
                acc = acc.add(power.scaled(scalar(rng.randint(-2, 2))))
            mats.append(acc)
        data = structure_data(family, mats, _solve_b_kernel(family, mats, rng))
        if verify_constraints(data).ok:
            return data


@functools.lru_cache(maxsize=None)
def fuzz_corpus():
    """100 candidates per family: valid, corrupted-valid, and fully random."""
    rng = random.Random(777)
    corpus = []

    def random_family(abelian: bool):
        if abelian:
            n1 = rng.randint(1, 5)
            return AbelianLeft(n1, rng.randint(1, 6 - n1))
        return HeisenbergLeft(rng.randint(1, 2), rng.randint(1, 2))

    def corrupt(data):
        mats = list(data.d_matrices)
        m = data.m
        idx = rng.randrange(len(mats))
        rows = [list(r) for r in mats[idx].data]
        rows[rng.randrange(m)][rng.randrange(m)] += scalar(rng.randint(1, 2))
        mats[idx] = Matrix.from_rows(rows, cols=m)
        return structure_data(data.family, mats, data.b)

    for abelian in (True, False):
        for trial in range(100):
            family = random_family(abelian)
            q = family.n1 if isinstance(family, AbelianLeft) else 2 * family.p + 1
            m = family.n2 if isinstance(family, AbelianLeft) else family.n
            if trial % 3 == 0:
                corpus.append(_random_valid_data(family, rng))
            elif trial % 3 == 1:
                corpus.append(corrupt(_random_valid_data(family, rng)))
            else:
                mats = [
                    Matrix.from_rows(
                        [[scalar(rng.randint(-2, 2)) for _ in range(m)] for _ in range(m)]
                    )
                    for _ in range(q)
                ]
                b = {}
                for a in range(q):
                    for bb in range(a + 1, q):
                        if rng.random() < 0.5:
                            b[(a, bb)] = tuple(
                                scalar(rng.randint(-2, 2)) for _ in range(m)
                            )
                corpus.append(structure_data(family, mats, b))
    return corpus


@functools.lru_cache(maxsize=None)
def abelian_line_instances():
    """25 built-and-scrambled A(n)-A(1) instances for each n in 2..4."""
    rng = random.Random(4001)
    out = []
    for n in (2, 3, 4):
        family = AbelianLeft(n, 1)
        for _ in range(25):
            while True:
                mats = [
                    Matrix.from_rows([[scalar(rng.randint(-2, 2))]]) for _ in range(n)
                ]
                if all(m.is_zero() for m in mats):
                    continue
                data = structure_data(family, mats, _solve_b_kernel(family, mats, rng))
                if verify_constraints(data).ok:
                    break
            built = build_from_structure(data)
            scrambled = built.change_basis(
                random_invertible_matrix(built.dim, rng)
            )
            out.append((n, scrambled))
    return out


# -- criteria ----------------------------------------------------------------


def test_criterion_1_example_fixtures():
    start = time.monotonic()
    for label, params in SOLVABLE_FIXTURES:
        algebra = make(label, params)
        expected = expected_for(label, params)
        assert decomposition_tag(algebra).render() == expected["tag"], label
        assert near_perfect_radical(algebra) == axis_span(algebra.dim, expected["np"]), label
        assert list(lower_central_series(algebra).profile()) == expected["cs"], label
        assert list(extended_lcs(algebra).dims) == expected["ext"], label
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"criterion 1 took {elapsed:.2f}s"
    _passed("C1", f"14 fixture tags, radical bases and series profiles exact ({elapsed:.2f}s)")


def test_criterion_2_six_dimensional_canonical_form():
    start = time.monotonic()
    canonical = make("canonical_HpA1", {"p": 2})
    assert lower_central_series(canonical).profile() == (6, 2, 1)
    _, recovered = canonicalize_hp_a1(make("s6_26"))
    assert recovered.brackets == canonical.brackets
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"criterion 2 took {elapsed:.2f}s"
    _passed("C2", f"chain dims (6,2,1) and relabeled fixture canonicalises back ({elapsed:.2f}s)")


def test_criterion_3_heisenberg_line_canonicalisation():
    start = time.monotonic()
    for p, scrambled in heisenberg_line_instances():
        expected = make("canonical_HpA1", {"p": p})
        transform, out = canonicalize_hp_a1(scrambled)
        assert out.brackets == expected.brackets, p
        assert is_isomorphism_via(scrambled, expected, transform), p
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"criterion 3 took {elapsed:.2f}s"
    _passed("C3", f"75 scrambles canonicalised to the exact table ({elapsed:.2f}s)")


def test_criterion_4_abelian_line_decomposition():
    start = time.monotonic()
    for n, algebra in abelian_line_instances():
        assert decomposition_tag(algebra).render() == f"A({n})-A(1)"
        witness = decompose_an_a1(algebra)
        blocks = sorted(s.dim for s in witness.ideals)
        assert blocks == [1] * (n - 1) + [2], n
        tags = []
        for component in witness.components:
            if component.dim == 2:
                tags.append(decomposition_tag(component).render())
            else:
                tags.append(recognize_nilpotent(component).render())
        assert sorted(tags) == ["A(1)"] * (n - 1) + ["A(1)-A(1)"], n
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"criterion 4 took {elapsed:.2f}s"
    _passed("C4", f"75 generated instances split into verified blocks ({elapsed:.2f}s)")


def test_criterion_5_nilpotent_decomposition_everywhere():
    start = time.monotonic()
    instances = [make(label, params) for label, params in SOLVABLE_FIXTURES]
    instances += [algebra for _, algebra in heisenberg_line_instances()]
    instances += [algebra for _, algebra in abelian_line_instances()]
    for algebra in instances:
        np_space = near_perfect_radical(algebra)
        left, _ = algebra.quotient(np_space)
        right, _ = algebra.restrict(np_space)
        assert nilpotency_solvability(left).is_nilpotent
        assert nilpotency_solvability(right).is_nilpotent
        ambient = lower_central_series(algebra).dims
        expected = []
        for d in ambient:
            expected.append(max(d - np_space.dim, 0))
            if expected[-1] == 0:
                break
        assert list(lower_central_series(left).dims) == expected
    elapsed = time.monotonic() - start
    _passed(
        "C5",
        f"{len(instances)} instances: both parts nilpotent, quotient chain dims exact ({elapsed:.2f}s)",
    )


def test_criterion_6_constraints_iff_jacobi():
    start = time.monotonic()
    corpus = fuzz_corpus()
    passes = 0
    for data in corpus:
        report = verify_constraints(data)
        valid = assemble_raw(data).validate().passed
        assert report.jacobi_ok == valid
        if report.ok:
            assert valid
            passes += 1
    assert passes >= 30  # the corpus must exercise both directions
    assert any(not verify_constraints(d).jacobi_ok for d in corpus)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"criterion 6 took {elapsed:.2f}s"
    _passed(
        "C6",
        f"{len(corpus)} fuzzed candidates: constraint equations match the bracket identity ({elapsed:.2f}s)",
    )


def test_criterion_7_round_trips():
    start = time.monotonic()
    rebuilt = 0
    for data in fuzz_corpus():
        if not verify_constraints(data).ok:
            continue
        built = build_from_structure(data)
        again, basis = extract_structure(built)
        assert again == data
        assert basis == Matrix.identity(built.dim)
        rebuilt += 1
    assert rebuilt >= 30
    for label, params in SOLVABLE_FIXTURES:
        algebra = make(label, params)
        doc = json.loads(json.dumps(algebra_to_json(algebra)))
        again = algebra_from_json(doc)
        assert again.brackets == algebra.brackets and again.labels == algebra.labels
    elapsed = time.monotonic() - start
    _passed(
        "C7",
        f"{rebuilt} extract/build round trips and 14 parse/emit round trips exact ({elapsed:.2f}s)",
    )


def test_criterion_8_decomposability():
    start = time.monotonic()
    rng = random.Random(808)
    pool = [
        ("s2_1", {}),
        ("s3_2", {}),
        ("s4_6", {}),
        ("H", {"p": 1}),
        ("A", {"n": 2}),
        ("canonical_HpA1", {"p": 1}),
    ]
    for _ in range(4):
        left = make(*rng.choice(pool))
        right = make(*rng.choice(pool))
        total = direct_sum(left, right)
        verdict = decomposability(total)
        assert verdict.status == "decomposable", (left.dim, right.dim)
        blocks = verdict.witness.components[0]
        for component in verdict.witness.components[1:]:
            blocks = direct_sum(blocks, component)
        assert total.change_basis(verdict.witness.assembly).brackets == blocks.brackets

    verdict = decomposability(make("s2_1"))
    assert verdict.status == "indecomposable"
    assert verdict.reason == "centroid dimension 1"
    assert centroid(make("s2_1")).dim == 1
    assert _independent_centroid_dimension(make("s2_1")) == 1

    verdict = decomposability(make("canonical_HpA1", {"p": 1}))
    assert verdict.status != "decomposable"
    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"criterion 8 took {elapsed:.2f}s"
    _passed("C8", f"sums split, line fixture provably indecomposable (oracle agrees) ({elapsed:.2f}s)")


def _independent_centroid_dimension(algebra) -> int:
    """Oracle: set up the commuting-map system from scratch in sympy and
    count the nullspace dimension."""
    import sympy

    n = algebra.dim
    unknowns = sympy.symbols(f"u0:{n * n}")
    phi = sympy.Matrix(n, n, unknowns)

    def lift(v):
        return sympy.Matrix(
            [
                sympy.Rational(x.re.numerator, x.re.denominator)
                + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator)
                for x in v
            ]
        )

    def bracket(i, j):
        return lift(algebra.bracket_basis(i, j))

    equations = []
    for i in range(n):
        for j in range(n):
            lhs = phi * bracket(i, j)
            act_left = sympy.zeros(n, 1)
            act_right = sympy.zeros(n, 1)
            for k in range(n):
                act_left += phi[k, i] * bracket(k, j)
                act_right += phi[k, j] * bracket(i, k)
            equations.extend(list(lhs - act_left))
            equations.extend(list(lhs - act_right))
    coeffs, _ = sympy.linear_eq_to_matrix(equations, list(unknowns))
    return len(coeffs.nullspace())


def test_criterion_9_conjecture_harness():
    start = time.monotonic()
    report = conjecture_search(2, 1, 50, 90210)
    assert report.indecomposable == 0
    assert report.decomposable == 50
    wide = conjecture_search(3, 2, 100, 90211)
    assert wide.indecomposable == 0  # a hit would be a verified counterexample
    assert wide.decomposable + wide.unknown == 100
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, f"criterion 9 took {elapsed:.2f}s"
    _passed(
        "C9",
        f"region (2,1): all 50 decomposable; region (3,2): "
        f"{wide.decomposable} decomposable, {wide.unknown} unknown, no counterexample ({elapsed:.2f}s)",
    )


def test_criterion_10_invariance_suite():
    start = time.monotonic()
    rng = random.Random(1010)
    fixtures = [
        ("s2_1", {}),
        ("s3_2", {}),
        ("s4_6", {}),
        ("s4_11", {}),
        ("canonical_HpA1", {"p": 1}),
    ]
    changes = 0
    for label, params in fixtures:
        algebra = make(label, params)
        base_tag = decomposition_tag(algebra).render()
        base_lcs = lower_central_series(algebra).dims
        base_ext = extended_lcs(algebra).dims
        base_status = decomposability(algebra).status
        for _ in range(4):
            moved = algebra.change_basis(random_invertible_matrix(algebra.dim, rng))
            assert decomposition_tag(moved).render() == base_tag
            assert lower_central_series(moved).dims == base_lcs
            assert extended_lcs(moved).dims == base_ext
            assert decomposability(moved).status == base_status
            changes += 1
    assert changes == 20
    elapsed = time.monotonic() - start
    _passed("C10", f"20 basis changes over 5 fixtures left all invariants unchanged ({elapsed:.2f}s)")
