"""Exact-arithmetic characters and rigidity reconstruction for the
classical simple Lie algebras (types A, B, C, D)."""

from .charring import (
    coefficient,
    expand,
    peel_decompose,
    product,
    saturated_dominants,
)
from .rigidity import (
    BoundaryOracle,
    CaseTag,
    FamilyTable,
    ViolationReport,
    build_freudenthal_family,
    choose_index,
    constrained_lr,
    falsify,
    fundamental_identities,
    lemma_supp_check,
    reconstruct_up_to,
    supp,
    verify_conditions,
)
from .rootsystem import (
    LieType,
    RootSystem,
    RootVector,
    build_root_system,
    dominance_leq,
    dominant_rep,
    fundamental,
    inner_product,
    is_minimal,
    minus_w0,
    order_less,
    root_system,
    to_root_coords,
    weyl_orbit,
)
from .weylchar import (
    CharacterTable,
    LeviSelector,
    character_table,
    freudenthal_char,
    levi_check,
    levi_subsystem,
    tensor_coeffs,
    weyl_dimension,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
