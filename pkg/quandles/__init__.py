from quandles.core import (
    FiniteQuandle,
    GoodInvolution,
    dihedral_quandle,
    enumerate_good_involutions,
    is_connected,
    is_involutory,
    verify_axioms,
    verify_good_involution,
)
from quandles.cosets import QuandleHom, TildeExtension, build_tilde_r, check_extension, coset_quandle
from quandles.extensions import cocycle_extension, verify_symmetric_2cocycle

__all__ = [
    "FiniteQuandle",
    "GoodInvolution",
    "dihedral_quandle",
    "enumerate_good_involutions",
    "is_connected",
    "is_involutory",
    "verify_axioms",
    "verify_good_involution",
    "QuandleHom",
    "TildeExtension",
    "build_tilde_r",
    "check_extension",
    "coset_quandle",
    "cocycle_extension",
    "verify_symmetric_2cocycle",
]
