"""Inverses of tridiagonal matrices by ratio, recursive and dense methods."""

from ._tridinv import (
    TridiagonalMatrix,
    TridinvError,
    condition_number,
    generate,
    invert,
    methods,
    operation_count,
    predicted_zeros,
    residual_report,
)

__all__ = [
    "TridiagonalMatrix",
    "TridinvError",
    "condition_number",
    "generate",
    "invert",
    "methods",
    "operation_count",
    "predicted_zeros",
    "residual_report",
]
