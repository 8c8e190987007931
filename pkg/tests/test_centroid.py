import random

import pytest

from conftest import random_invertible_matrix
from nildecomp.catalog import make
from nildecomp.centroid import (
    Centroid,
    centroid,
    conjecture_search,
    decomposability,
    find_idempotent,
    gaussian_sqrt,
    minimal_polynomial,
    split_coprime,
)
from nildecomp.errors import InvalidParameters
from nildecomp.liealg import direct_sum
from nildecomp.linalg import Matrix
from nildecomp.scalars import IMAG, ONE, scalar


def mat(*rows):
    return Matrix.from_rows([[scalar(x) for x in r] for r in rows])


class TestPolynomialMachinery:
    def test_minimal_polynomial_of_projection(self):
        proj = mat([1, 0], [0, 0])
        # t^2 - t, low-degree-first coefficients
        assert minimal_polynomial(proj) == (scalar(0), scalar(-1), ONE)

    def test_minimal_polynomial_of_nilpotent(self):
        nil = mat([0, 1], [0, 0])
        assert minimal_polynomial(nil) == (scalar(0), scalar(0), ONE)

    def test_minimal_polynomial_of_identity(self):
        assert minimal_polynomial(Matrix.identity(3)) == (scalar(-1), ONE)

    def test_gaussian_sqrt(self):
        assert gaussian_sqrt(scalar("9/4")) == scalar("3/2")
        assert gaussian_sqrt(scalar(-4)) == scalar("0+2*i")
        two_i = IMAG * scalar(2)
        root = gaussian_sqrt(two_i)
        assert root is not None and root * root == two_i
        assert gaussian_sqrt(scalar(2)) is None
        assert gaussian_sqrt(IMAG * scalar(1) + ONE) is None  # 1+i has no sqrt in Q(i)

    def test_split_coprime(self):
        t = (scalar(0), ONE)
        t_minus_1 = (scalar(-1), ONE)
        product = (scalar(0), scalar(-1), ONE)  # t(t-1)
        split = split_coprime(product)
        assert split is not None and set(split) == {t, t_minus_1}
        assert split_coprime((scalar(0), scalar(0), ONE)) is None  # t^2
        # t^2 + 1 factors (t-i)(t+i) over the Gaussian rationals
        assert split_coprime((ONE, scalar(0), ONE)) is not None
        # t^2 - 2 is irreducible over the Gaussian rationals
        assert split_coprime((scalar(-2), scalar(0), ONE)) is None


class TestCentroid:
    def test_abelian_centroid_is_everything(self):
        assert centroid(make("A", {"n": 3})).dim == 9

    def test_s2_1_centroid_is_scalars(self):
        c = centroid(make("s2_1"))
        assert c.dim == 1

    def test_direct_sum_centroid_contains_projections(self):
        L = direct_sum(make("s2_1"), make("A", {"n": 1}))
        c = centroid(L)
        span = c.span()
        projection = mat([1, 0, 0], [0, 1, 0], [0, 0, 0])
        flat = tuple(x for row in projection.data for x in row)
        assert span.contains(flat)

    def test_rejects_zero_algebra(self):
        from nildecomp.liealg import LieAlgebra

        with pytest.raises(InvalidParameters):
            centroid(LieAlgebra.from_brackets(0, {}))


class TestFindIdempotent:
    def test_scalar_centroid_has_none(self):
        assert find_idempotent(centroid(make("s2_1"))) is None

    def test_direct_sum_yields_projection(self):
        L = direct_sum(make("s2_1"), make("A", {"n": 1}))
        e = find_idempotent(centroid(L))
        assert e is not None
        assert e.mul(e) == e

    def test_identity_plus_nilpotent_has_none(self):
        # span{I, N} with N^2 = 0: minimal polynomials never split coprimely
        c = Centroid(2, (Matrix.identity(2), mat([0, 1], [0, 0])))
        assert find_idempotent(c) is None


class TestDecomposability:
    def test_s2_1_indecomposable_by_centroid_dimension(self):
        verdict = decomposability(make("s2_1"))
        assert verdict.status == "indecomposable"
        assert verdict.reason == "centroid dimension 1"

    def test_direct_sum_decomposable_with_verified_witness(self):
        L = direct_sum(make("s2_1"), make("A", {"n": 1}))
        verdict = decomposability(L)
        assert verdict.status == "decomposable"
        blocks = verdict.witness.components[0]
        for component in verdict.witness.components[1:]:
            blocks = direct_sum(blocks, component)
        assert L.change_basis(verdict.witness.assembly).brackets == blocks.brackets

    def test_canonical_h1_a1_not_decomposable(self):
        verdict = decomposability(make("canonical_HpA1", {"p": 1}))
        assert verdict.status != "decomposable"

    def test_catalog_pair_sums_decompose(self):
        rng = random.Random(61)
        pool = [("s2_1", {}), ("s4_6", {}), ("H", {"p": 1}), ("A", {"n": 2})]
        for _ in range(3):
            a = make(*rng.choice(pool))
            b = make(*rng.choice(pool))
            verdict = decomposability(direct_sum(a, b))
            assert verdict.status == "decomposable"

    def test_status_invariant_under_basis_change(self):
        rng = random.Random(67)
        for label, params in [("s2_1", {}), ("s4_11", {})]:
            L = make(label, params)
            base = decomposability(L).status
            for _ in range(3):
                moved = L.change_basis(random_invertible_matrix(L.dim, rng))
                assert decomposability(moved).status == base


class TestConjectureSearch:
    def test_theorem_region_has_no_indecomposables(self):
        report = conjecture_search(2, 1, 10, 7)
        assert report.indecomposable == 0
        assert report.decomposable + report.unknown == 10

    def test_deterministic_for_fixed_seed(self):
        a = conjecture_search(2, 1, 5, 3)
        b = conjecture_search(2, 1, 5, 3)
        assert a == b

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameters):
            conjecture_search(1, 1, 5, 0)
        with pytest.raises(InvalidParameters):
            conjecture_search(2, 3, 5, 0)
        with pytest.raises(InvalidParameters):
            conjecture_search(3, 2, 0, 0)
