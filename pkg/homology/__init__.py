from homology.chains import (
    Chain,
    Cochain,
    XSetAction,
    characteristic,
    checkerboard_action,
    evaluate,
    pi_forget,
    trivial_action,
    verify_xset_action,
)
from homology.cocycles import (
    a_cochain,
    is_pm_monic,
    is_symmetric_cocycle,
    phi,
    phi_double_prime,
    phi_prime,
    triple_point_bound,
    values_bounded,
)
from homology.complex import SymmetricComplex
from homology.groups import HomologyResult, homology, homology_class
from homology.scan import small_support_null_scan

__all__ = [
    "Chain",
    "Cochain",
    "XSetAction",
    "characteristic",
    "checkerboard_action",
    "evaluate",
    "pi_forget",
    "trivial_action",
    "verify_xset_action",
    "a_cochain",
    "is_pm_monic",
    "is_symmetric_cocycle",
    "phi",
    "phi_double_prime",
    "phi_prime",
    "triple_point_bound",
    "values_bounded",
    "SymmetricComplex",
    "HomologyResult",
    "homology",
    "homology_class",
    "small_support_null_scan",
]
