"""Differential VT codes for deletions, insertions and bursts.

Words are plain lists of ints in ``range(q)``; positions are 1-based.
"""

from ._core import (
    BurstCode,
    CapacityError,
    DecodeError,
    DiffSvtCode,
    DiffVtCode,
    DomainError,
    InternalInvariantViolation,
    MarkerCode,
    RllCodec,
    best_coset_size,
    delete,
    diff,
    diff_inv,
    insert,
    max_run,
    vt_syndrome,
)

__all__ = [
    "BurstCode",
    "CapacityError",
    "DecodeError",
    "DiffSvtCode",
    "DiffVtCode",
    "DomainError",
    "InternalInvariantViolation",
    "MarkerCode",
    "RllCodec",
    "best_coset_size",
    "delete",
    "diff",
    "diff_inv",
    "insert",
    "max_run",
    "vt_syndrome",
]
