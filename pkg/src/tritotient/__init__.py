"""Tridiagonal words over SL2(Z), totient enumeration and level-set polytopes."""
from ._backend import BACKEND, available_backends, use_backend
from .enumeration import (
    catalan,
    count_words,
    enumerate_unimodular,
    enumerate_words,
    lattice_class_count,
    nu,
    reversal_orbits,
    totient,
    word_to_residue,
)
from .lattice import LatticeT, minimal_norm, root_blocks
from .polytope import (
    SymMatrix,
    enumerate_level_set,
    hull,
    permutation_vertex,
)
from .sl2core import FactorizationError, Mat2, factorize, in_cone, m_alpha, m_product
from .tridiag import TriMatrix, determinant, is_positive_definite, leading_minors
from .word import (
    CFrac,
    NotInvertibleError,
    ResidueClass,
    RunWord,
    cfrac,
    mod_inverse,
    power_sum,
    sigma,
    word_of,
    word_of_fast,
)

__version__ = "0.1.0"
