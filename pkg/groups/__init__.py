from groups.group_engine import (
    DihedralCoverGroup,
    GeneratedGroup,
    NormalForm,
    RightCoset,
    build_g,
    centralizer,
    generate_closure,
    normal_form,
    right_cosets,
    strip_signs_image,
)
from groups.signed_perm import (
    SignedPermutation,
    compose,
    determinant,
    format_notation,
    identity,
    inverse,
    parse_notation,
    strip_signs,
)

__all__ = [
    "DihedralCoverGroup",
    "GeneratedGroup",
    "NormalForm",
    "RightCoset",
    "build_g",
    "centralizer",
    "generate_closure",
    "normal_form",
    "right_cosets",
    "strip_signs_image",
    "SignedPermutation",
    "compose",
    "determinant",
    "format_notation",
    "identity",
    "inverse",
    "parse_notation",
    "strip_signs",
]
