"""Rank computations: fraction-free exact elimination and an SVD check."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .exactnum import Exact

_SVD_RTOL = 1e-8


def exact_rank(rows: Sequence[Sequence[Exact]]) -> int:
    """Rank of a matrix of Exact scalars.

    Fraction-free elimination: rows below the pivot are updated as
    pivot*row - coeff*pivot_row, which needs only ring operations, so
    every intermediate entry stays exact.
    """
    mat = [[Exact.of(x) for x in row] for row in rows]
    if not mat:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row, n_rows):
            if not mat[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        p = mat[row][col]
        for r in range(row + 1, n_rows):
            c = mat[r][col]
            if c.is_zero():
                continue
            mat[r] = [p * mat[r][k] - c * mat[row][k] for k in range(n_cols)]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def float_rank(matrix: np.ndarray, rtol: float = _SVD_RTOL) -> int:
    """Rank as the number of singular values above rtol * largest."""
    m = np.asarray(matrix, dtype=complex)
    if m.size == 0:
        return 0
    svals = np.linalg.svd(m, compute_uv=False)
    top = svals[0] if len(svals) else 0.0
    if top == 0.0:
        return 0
    return int(np.sum(svals > rtol * top))
