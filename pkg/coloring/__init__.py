from coloring.colorings import (
    Coloring,
    count_colorings,
    count_nontrivial_colorings,
    enumerate_colorings,
    is_valid_coloring,
    project_coloring,
)
from coloring.gauss_code import GaussCode, parse_gauss_code

__all__ = [
    "Coloring",
    "count_colorings",
    "count_nontrivial_colorings",
    "enumerate_colorings",
    "is_valid_coloring",
    "project_coloring",
    "GaussCode",
    "parse_gauss_code",
]
