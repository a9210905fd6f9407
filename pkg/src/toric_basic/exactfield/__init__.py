"""Exact arithmetic over Q and real quadratic fields, plus Z-module tools."""
from .lattice import (hermite_normal_form, is_primitive, lattice_rank,
                      relative_elementary_divisors, smith_invariants,
                      zmodule_equal, zmodule_membership)
from .linalg import (ExactMatrix, common_field, determinant, inverse,
                     kernel_basis, rank, rref, solve, sparse_rank)
from .scalar import (QuadraticScalar, Scalar, conjugate, format_scalar, lift, radicand,
                     normalize, parse_scalar, rational_parts, sign)

__all__ = [
    "ExactMatrix", "QuadraticScalar", "Scalar", "common_field", "conjugate",
    "determinant", "format_scalar", "hermite_normal_form", "inverse",
    "is_primitive", "kernel_basis", "lattice_rank", "lift", "normalize",
    "parse_scalar", "radicand", "rank", "rational_parts", "relative_elementary_divisors",
    "rref", "sign", "smith_invariants", "solve", "sparse_rank",
    "zmodule_equal", "zmodule_membership",
]
