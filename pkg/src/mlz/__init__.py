"""Exact matroid log-concavity toolkit.

Matroid generating polynomials, exact Hessian inertia, degree-1
Lefschetz/Hodge-Riemann point checks, matroid-morphism degeneracy, and
exhaustive verification surveys over all labeled matroids on small ground
sets.  Everything is arbitrary-precision rational; nothing here floats.
"""

from .lefschetz import (
    InapplicablePointError,
    PointClass,
    classify_point,
    gradient_rank,
    hessian_inertia,
    hrr1,
    lorentzian_witness,
    slp1,
)
from .linalg import Inertia, SymMatrix, char_poly, inertia, matrix_rank
from .matroids import (
    EmptyBasesError,
    ExchangeViolationError,
    IndepProfile,
    Matroid,
    MatroidError,
    NotAFlatError,
    ParallelDecomposition,
    UnequalCardinalityError,
    catalog,
    circuits_and_girth,
    closure,
    contract,
    delete,
    direct_sum,
    elems_of,
    enumerate_matroids,
    flats,
    from_json_dict,
    graphic,
    indep_profile,
    mask_of,
    minimal_superflats,
    minor,
    parallel_decomposition,
    rank_of,
    restrict,
    simplify,
    truncate,
    uniform,
    validate_bases,
)
from .morphisms import (
    AnnihilatorCheckFailed,
    ConditionMismatch,
    DegeneracyVerdict,
    EurHuhEntry,
    FlatPreimageViolation,
    ImageRankDeficient,
    MatroidMorphism,
    MorphismBases,
    MorphismError,
    degeneracy_class,
    enumerate_morphisms,
    eur_huh_profile,
    morphism_bases,
    morphism_from_json_dict,
    morphism_poly,
    phi_decomposition,
    validate_morphism,
)
from .polynomials import (
    HomogPoly,
    basis_poly,
    evaluate,
    f_slice,
    gradient_matrix,
    hessian_at,
    indep_poly,
    linear_apply,
    partial,
    poly_json,
    poly_str,
    reduced_indep_poly,
)
from .sampling import SplitMix64, derive, positive_point
from .verify import (
    MasonBasisReport,
    MasonIndepReport,
    SurveyReport,
    mason_basis_check,
    mason_indep_check,
    morphism_suite,
    survey,
    theorem_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
