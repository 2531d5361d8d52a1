"""Dense matrix routines over a table-backed finite field.

Matrices are 2-D numpy int64 arrays of element encodings.
"""

from __future__ import annotations

import numpy as np

from eaqmds.errors import MagnitudeExceeded
from eaqmds.gf import Field


def _need_tables(f: Field) -> None:
    if not f.has_tables:
        raise MagnitudeExceeded(f"dense linear algebra over {f} needs exp/log tables")


def mat_mul(f: Field, A, B) -> np.ndarray:
    _need_tables(f)
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        col, row = A[:, t], B[t, :]
        if col.any() and row.any():
            out = f.vadd(out, f.vmul(col[:, None], row[None, :]))
    return out


def conj_transpose(f: Field, M, q: int) -> np.ndarray:
    """Entrywise x -> x^q followed by transpose."""
    _need_tables(f)
    return f.vpow(np.asarray(M, dtype=np.int64), q).T.copy()


def rref(f: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    _need_tables(f)
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = f.vmul(R[r], f.inv(int(R[r, c])))
        factors = R[:, c].copy()
        factors[r] = 0
        if factors.any():
            R = f.vsub(R, f.vmul(factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(f: Field, M) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(rref(f, M)[1])


def nullspace(f: Field, M) -> np.ndarray:
    """Rows spanning {x : M x = 0}."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(f, M)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = f.neg(int(R[r, fc]))
    return basis
