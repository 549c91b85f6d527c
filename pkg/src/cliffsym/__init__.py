"""Exact discrete-symmetry (CPT) groups of real Clifford algebras Cl(p,q)."""
from .algebra_core import Multivector, Signature
from .discrete_symmetries import (
    PhaseAssignment, assemble, build_cpt_group, build_quotient_pt_group, cpt_for_idempotent,
)
from .group_engine import FiniteGroupTable, GroupId, closure
from .spinor_rep import IdempotentSpec, canonical_idempotents, gamma_matrices
from .structure_theory import ring_class, salingaros_group, salingaros_type

__all__ = [
    "FiniteGroupTable", "GroupId", "IdempotentSpec", "Multivector", "PhaseAssignment", "Signature",
    "assemble", "build_cpt_group", "build_quotient_pt_group", "canonical_idempotents", "closure",
    "cpt_for_idempotent", "gamma_matrices", "ring_class", "salingaros_group", "salingaros_type",
]
