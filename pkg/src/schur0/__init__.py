"""Exact computations in 0-Schur algebras S_0(n, r), their graded versions
DS_0(n, r), the deformations D_t(n, r), and the 0-Hecke and
nil-Temperley-Lieb centralizers."""

from .algebra import (
    GuardExceeded,
    IdealBasis,
    StructureTable,
    boundary_ideal_basis,
    build_table,
    check_associativity,
    corner_algebra,
    corner_table,
    ideal_closure,
    quotient_algebra,
    subalgebra_closure,
    table_from_json,
    table_to_json,
    verify_iso_by_bijection,
    verify_main_theorem,
)
from .centralizers import (
    PeakSet,
    Permutation,
    element_to_peaks,
    hecke0_build,
    nilhecke_graded_build,
    ntl_build,
    peaks_to_element,
    reduced_words,
)
from .core import (
    DegreeVector,
    GeneratorWord,
    OrbitMatrix,
    ScaledOrbit,
    co,
    decompose_monomial,
    decompose_pbw,
    degree_vectors,
    enumerate_basis,
    evaluate_word,
    left_apply_e,
    left_apply_f,
    right_apply_e,
    right_apply_f,
    ro,
    s0_multiply,
    star_multiply,
    t_multiply,
)
from .kernel import BACKEND
from .linalg import Subspace, contains, rref
from .core import reduced_word_for
from .presentation import build_quiver, evaluate_relation, relation_set

__version__ = "0.1.0"
