"""Chevalley groups of minuscule type as exact matrices over commutative rings.

Typical use::

    from minchev import build_root_datum, build_basis, GroupContext, parse_ring

    basis = build_basis(build_root_datum("E6"), [1])
    ctx = GroupContext(basis, parse_ring("gfp:7"))
"""

from __future__ import annotations

from .chevgroup import (
    CenterDescription,
    EnumerationResult,
    GroupContext,
    GroupElement,
    center,
    enumerate_group,
    gen_h,
    gen_n,
    gen_x,
    gen_x_root,
    gen_y,
    h_product,
    perfectness_identity,
    torus_kernel_test,
    unipotent_factorize,
    verify_commutator,
    verify_n_h_normalization,
    verify_torus_conjugation,
    weyl_group_elements,
    weyl_lift_check,
    x_product,
)
from .errors import MinchevError
from .exactring import SparseMatrix, parse_ring, smith_normal_form
from .liealg import (
    CheckReport,
    LieGenSet,
    chevalley_generators,
    lie_closure_dimension,
    n_matrix,
    root_vector,
    structure_constants,
    verify_braid,
    verify_cartan_conjugation,
    verify_serre,
)
from .minuscule import WeightBasis, build_basis, lattice_report, minuscule_nodes, orbit
from .rootdata import LieType, Root, RootDatum, build_root_datum, pairing_with_coroot, simple_reflection

__version__ = "0.1.0"

__all__ = [
    "CenterDescription", "CheckReport", "EnumerationResult", "GroupContext", "GroupElement",
    "LieGenSet", "LieType", "MinchevError", "Root", "RootDatum", "SparseMatrix", "WeightBasis",
    "build_basis", "build_root_datum", "center", "chevalley_generators", "enumerate_group",
    "gen_h", "gen_n", "gen_x", "gen_x_root", "gen_y", "h_product", "lattice_report",
    "lie_closure_dimension", "minuscule_nodes", "n_matrix", "orbit", "pairing_with_coroot",
    "parse_ring", "perfectness_identity", "root_vector", "simple_reflection", "smith_normal_form",
    "structure_constants", "torus_kernel_test", "unipotent_factorize", "verify_braid",
    "verify_cartan_conjugation", "verify_commutator", "verify_n_h_normalization", "verify_serre",
    "verify_torus_conjugation", "weyl_group_elements", "weyl_lift_check", "x_product",
]
