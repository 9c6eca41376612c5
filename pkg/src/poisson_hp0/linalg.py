"""Row spaces over F_p (and over Q for ``p == 0``).

``FpRowSpace`` is the incremental, immutable interface; ``matrix_rank`` and
``matrix_rref`` are the batch entry points used by the brute-force modules
and dispatch to the compiled kernels for ``p > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .fp import inv


@dataclass(frozen=True)
class FpRowSpace:
    """Row space in reduced echelon form. ``p == 0`` means rational coefficients."""

    p: int
    dim: int
    rows: tuple[tuple, ...] = ()
    pivots: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        """Remainder of ``v`` after subtracting its components along the pivots."""
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in a space of dimension {self.dim}")
        p = self.p
        w = [x % p for x in v] if p else [Fraction(x) for x in v]
        for row, c in zip(self.rows, self.pivots):
            f = w[c]
            if f:
                if p:
                    w = [(a - f * b) % p for a, b in zip(w, row)]
                else:
                    w = [a - f * b for a, b in zip(w, row)]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))


def rank_append(space: FpRowSpace, v: Sequence) -> tuple[FpRowSpace, bool]:
    """Add ``v`` to the span. Returns the new space and whether ``v`` was absorbed."""
    w = space.reduce(v)
    lead = next((i for i, x in enumerate(w) if x), None)
    if lead is None:
        return space, True
    p = space.p
    s = inv(w[lead], p) if p else 1 / w[lead]
    w = [(x * s) % p for x in w] if p else [x * s for x in w]
    rows = []
    for row in space.rows:
        f = row[lead]
        if f:
            row = tuple((a - f * b) % p for a, b in zip(row, w)) if p else tuple(a - f * b for a, b in zip(row, w))
        rows.append(row)
    order = sorted(range(len(rows) + 1), key=lambda i: (space.pivots + (lead,))[i])
    all_rows = rows + [tuple(w)]
    all_piv = space.pivots + (lead,)
    return (
        FpRowSpace(p, space.dim, tuple(all_rows[i] for i in order), tuple(all_piv[i] for i in order)),
        False,
    )


def matrix_rank(rows, p: int, ncols: int | None = None) -> int:
    """Rank of a list of vectors (or 2-d array) over F_p, or over Q when ``p == 0``."""
    if p:
        A = np.asarray(rows, dtype=np.int64)
        if A.size == 0:
            return 0
        return kernels.rank(A, p)
    return len(_rref_rational(rows)[1])


def matrix_rref(rows, p: int, ncols: int):
    """RREF rows and pivot columns; rows are a numpy array for ``p > 0``."""
    if p:
        A = np.asarray(rows, dtype=np.int64).reshape(-1, ncols)
        return kernels.rref(A, p)
    return _rref_rational(rows)


def _rref_rational(rows):
    A = [[Fraction(x) for x in r] for r in rows]
    if not A:
        return [], []
    nrows, ncols = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        s = A[r][col]
        A[r] = [x / s for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return A[:r], pivots
