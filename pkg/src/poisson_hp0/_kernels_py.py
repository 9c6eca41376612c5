"""Numpy fallback for the compiled elimination kernels (same contract)."""

from __future__ import annotations

import numpy as np


def _prepare(mat, p: int) -> np.ndarray:
    A = np.array(mat, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return A


def _eliminate(A: np.ndarray, p: int, full: bool) -> list[int]:
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        f = pow(int(A[r, col]), p - 2, p)
        if f != 1:
            A[r, col:] = A[r, col:] * f % p
        lo = 0 if full else r + 1
        block = A[lo:, col:]
        factors = block[:, 0].copy()
        if full:
            factors[r - lo] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            block[hit] = (block[hit] - np.outer(factors[hit], A[r, col:])) % p
        pivots.append(col)
        r += 1
    return pivots


def rank(mat, p: int) -> int:
    """Rank of an integer matrix reduced mod p."""
    A = _prepare(mat, p)
    if A.size == 0:
        return 0
    return len(_eliminate(A, p, full=False))


def rref(mat, p: int):
    """Reduced row echelon form mod p: (nonzero rows, pivot columns)."""
    A = _prepare(mat, p)
    if A.size == 0:
        return np.zeros((0, A.shape[1] if A.ndim == 2 else 0), dtype=np.int64), []
    pivots = _eliminate(A, p, full=True)
    return A[: len(pivots)].copy(), pivots
