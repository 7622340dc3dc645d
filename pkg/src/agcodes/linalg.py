"""Gaussian elimination over a :class:`~agcodes.galois.Field`.

Matrices are 2-D numpy arrays of canonical encodings.  Pivoting is
deterministic (leftmost column first, smallest row index within it) so the
reduced forms, and everything derived from them, are reproducible.
"""

from __future__ import annotations

import numpy as np

from .galois import Field


def rref(field: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = field.mul(R[r], field.inv(R[r, c]))
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            factors = R[others, c]
            R[others] = field.sub(R[others], field.mul(factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field: Field, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def row_basis(field: Field, M) -> np.ndarray:
    """Nonzero rows of the RREF of ``M`` (a canonical basis of its row space)."""
    M = np.asarray(M, dtype=np.int64)
    if M.shape[0] == 0:
        return M.reshape(0, M.shape[1])
    R, piv = rref(field, M)
    return R[: len(piv)]


def null_space(field: Field, M, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{v : M v^T = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1] if M.ndim == 2 else int(ncols)
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(field, M)
    free = [c for c in range(n) if c not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        N[t, f] = 1
        for i, pc in enumerate(piv):
            N[t, pc] = field.neg(R[i, f])
    return N


def same_row_space(field: Field, A, B) -> bool:
    A = row_basis(field, A)
    B = row_basis(field, B)
    return A.shape == B.shape and bool((A == B).all())


def solve_left(field: Field, A, b):
    """Return the unique ``x`` with ``x @ A = b``, or None.

    None covers both an inconsistent system and one with several solutions.
    """
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    k = A.shape[0]
    aug = np.concatenate([A.T, b.reshape(-1, 1)], axis=1)
    R, piv = rref(field, aug)
    if k in piv or len(piv) != k:
        return None
    return R[:k, k].copy()
