"""Exact noncommutative Newton interpolation: quasideterminants, biorthogonalization,
difference derivatives and the inverse-matrix sum."""

from .applications import (
    GramData,
    confluent_limit_check,
    gram_schmidt,
    newton_interpolate,
    taylor_interpolate,
    taylor_matrix,
    vandermonde,
)
from .biortho import BiorthoResult, biorthogonalize, biorthogonalize_permuted
from .diffcalc import (
    NewtonExpansion,
    NewtonTerm,
    delta_left,
    delta_right,
    inverse_via_theorem6,
    newton_expand,
    pairing_truncated,
)
from .errors import (
    DuplicateIndex,
    DuplicateNode,
    IndexOutOfBounds,
    NonGeneric,
    NotInvertible,
    NotPositiveDefinite,
    VariantMismatch,
)
from .matrix import Matrix, invert, quasidet, submatrix
from .polynomial import Polynomial
from .ring import Block, Fraction, inverse, ring_add, ring_inverse, ring_mul

__version__ = "0.1.0"
