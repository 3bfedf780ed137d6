"""Realizers of at most three linear extensions for tree and unicycle posets."""

from posetdim._core import (
    Poset,
    PosetError,
    brute_dimension,
    build_poset,
    classify,
    crown_poset,
    crown_realizer,
    format_poset,
    is_linear_extension,
    parse_poset,
    realize,
    realizes,
    sample,
    to_dot,
)

__all__ = [
    "Poset",
    "PosetError",
    "brute_dimension",
    "build_poset",
    "classify",
    "crown_poset",
    "crown_realizer",
    "format_poset",
    "is_linear_extension",
    "parse_poset",
    "realize",
    "realizes",
    "sample",
    "to_dot",
]
