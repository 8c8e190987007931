"""Exact structure-constant computations for solvable and nilpotent Lie
algebras over the Gaussian rationals: ideal series, near-perfect radicals,
left/right nilpotent decomposition tags, canonical forms, direct-sum
decomposability via centroid idempotents, and a randomised search harness.
"""

__version__ = "0.1.0"

from .catalog import make as catalog_make
from .centroid import (
    Centroid,
    DecomposabilityVerdict,
    SearchReport,
    centroid,
    conjecture_search,
    decomposability,
    find_idempotent,
    minimal_polynomial,
)
from .classify import (
    DecompositionTag,
    NilpotentClass,
    decomposition_tag,
    heisenberg_basis,
    recognize_nilpotent,
)
from .errors import NildecompError
from .liealg import LieAlgebra, LinearMap, ValidationReport, direct_sum, is_isomorphism_via
from .linalg import (
    Matrix,
    Subspace,
    extend_to_full_basis,
    kernel_basis,
    rref,
    solve_linear,
    subspace_intersect,
    subspace_sum,
)
from .scalars import Scalar, scalar
from .series import (
    NilpotencyInfo,
    NilpotentDecomposition,
    SeriesReport,
    derived_series,
    extended_lcs,
    left_right_nilpotent,
    lower_central_series,
    near_perfect_radical,
    nilpotency_solvability,
)
from .structure import (
    AbelianLeft,
    DirectSumWitness,
    HeisenbergLeft,
    StructureData,
    apply_admissible_transform,
    assemble_raw,
    build_from_structure,
    canonicalize_hp_a1,
    decompose_an_a1,
    extract_structure,
    make_witness,
    structure_data,
    verify_constraints,
)

__all__ = [name for name in dir() if not name.startswith("_")]
