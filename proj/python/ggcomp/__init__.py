"""Partition identities of Gollnitz-Gordon type: marking, counts, series checks and the bijections."""

from ._ggcomp import (
    ContractError,
    ParamError,
    count_D,
    dilate,
    enumerate_class,
    in_class,
    mark,
    phi,
    product_coeffs,
    psi,
    reduce,
    verify_bressoud,
    verify_companion,
    verify_gg,
)

__all__ = [
    "ContractError",
    "ParamError",
    "count_D",
    "dilate",
    "enumerate_class",
    "in_class",
    "mark",
    "phi",
    "product_coeffs",
    "psi",
    "reduce",
    "verify_bressoud",
    "verify_companion",
    "verify_gg",
]
