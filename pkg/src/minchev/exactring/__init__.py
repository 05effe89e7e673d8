"""Exact rings, sparse matrices over them, and integer lattice tools."""

from .matrix import SparseMatrix, commutator, identity, mat_add, mat_mul, scalar_mul, transpose
from .rings import (
    Integers,
    IntPolynomial,
    Modular,
    PrimeField,
    Rationals,
    Ring,
    RingElement,
    is_prime,
    least_primitive_root,
    parse_ring,
)
from .smith import (
    SmithForm,
    abelian_invariants,
    in_row_lattice,
    integer_determinant,
    lattice_index,
    left_kernel,
    rational_inverse,
    smith_normal_form,
)

__all__ = [
    "Integers", "IntPolynomial", "Modular", "PrimeField", "Rationals", "Ring", "RingElement",
    "SmithForm", "SparseMatrix", "abelian_invariants", "commutator", "identity", "in_row_lattice",
    "integer_determinant", "is_prime", "lattice_index", "least_primitive_root", "left_kernel",
    "mat_add", "mat_mul", "parse_ring", "rational_inverse", "scalar_mul", "smith_normal_form",
    "transpose",
]
