import random
from fractions import Fraction

from hypothesis import strategies as st

from nildecomp.errors import SingularMatrix
from nildecomp.linalg import Matrix
from nildecomp.scalars import Scalar, scalar


def random_invertible_matrix(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        candidate = Matrix.from_rows(
            [[scalar(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        )
        try:
            candidate.inverse()
            return candidate
        except SingularMatrix:
            continue


small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=1, max_value=6),
)

scalars = st.builds(Scalar, small_fractions, small_fractions)

nonzero_scalars = scalars.filter(lambda s: not s.is_zero())


def vectors(dim: int):
    return st.lists(scalars, min_size=dim, max_size=dim).map(tuple)


def matrices(rows: int, cols: int):
    return st.lists(vectors(cols), min_size=rows, max_size=rows).map(
        lambda r: Matrix.from_rows(r, cols=cols)
    )
