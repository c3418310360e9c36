"""Groups with dihedral central quotient and their modular group algebras over GF(2^k)."""

from .algebra import AlgebraElement, GroupAlgebra, group_algebra, unit_inverse
from .base import base_lemma_checks, base_profile, crossed_base, hom_rank, verify_relations
from .gf import GF2, FieldSpec
from .groups import Group, GroupParams, group, make_group
from .jennings import jennings_basis, phi_eval, phi_kernel_size, psi_eval
from .recognition import brute_force_isomorphic, maximal_quotient_table, quotient_by, recognize
from .report import distinguish_pair, fingerprint

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "FieldSpec", "GF2", "Group", "GroupAlgebra", "GroupParams",
    "base_lemma_checks", "base_profile", "brute_force_isomorphic", "crossed_base",
    "distinguish_pair", "fingerprint", "group", "group_algebra", "hom_rank",
    "jennings_basis", "make_group", "maximal_quotient_table", "phi_eval",
    "phi_kernel_size", "psi_eval", "quotient_by", "recognize", "unit_inverse",
    "verify_relations",
]
