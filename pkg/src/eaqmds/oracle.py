"""Brute-force certificates used to cross-check the structured fast paths."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from eaqmds.errors import OracleBudgetExceeded
from eaqmds.gf import Field
from eaqmds.linalg import rank

MINOR_CHUNK = 4096


@dataclass(frozen=True)
class OracleBudget:
    max_codewords: int = 10**7
    max_minors: int = 10**6
    max_field_order: int = 2**16

    def __post_init__(self):
        if min(self.max_codewords, self.max_minors, self.max_field_order) <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def matrix_rank(f: Field, M, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    if f.order > budget.max_field_order:
        raise OracleBudgetExceeded(f"{f} exceeds field-order budget")
    return rank(f, M)


def _all_invertible(f: Field, blocks: np.ndarray) -> bool:
    """True iff every square matrix in the (B, s, s) stack is nonsingular."""
    A = blocks.copy()
    B, s, _ = A.shape
    idx = np.arange(B)
    for c in range(s):
        col = A[:, c:, c]
        nz = col != 0
        if not nz.any(axis=1).all():
            return False
        piv = c + np.argmax(nz, axis=1)
        rows_c = A[idx, c].copy()
        A[idx, c] = A[idx, piv]
        A[idx, piv] = rows_c
        A[:, c] = f.vmul(A[:, c], f.vinv(A[:, c, c])[:, None])
        factors = A[:, :, c].copy()
        factors[:, c] = 0
        A = f.vsub(A, f.vmul(factors[:, :, None], A[:, c][:, None, :]))
    return True


def mds_certify(f: Field, G, H=None, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Every k columns of G (equivalently every n-k columns of H) independent.

    The side with the smaller square minors is used when H is supplied.
    """
    if f.order > budget.max_field_order:
        raise OracleBudgetExceeded(f"{f} exceeds field-order budget")
    M = np.asarray(G, dtype=np.int64)
    k, n = M.shape
    if H is not None:
        Hm = np.asarray(H, dtype=np.int64)
        if Hm.shape[0] < k:
            M, k = Hm, Hm.shape[0]
    if k == 0 or k == n:
        return True
    count = math.comb(n, k)
    if count > budget.max_minors:
        raise OracleBudgetExceeded(f"{count} minors exceed budget {budget.max_minors}")
    combos = itertools.combinations(range(n), k)
    while True:
        chunk = list(itertools.islice(combos, MINOR_CHUNK))
        if not chunk:
            return True
        cols = np.asarray(chunk, dtype=np.int64)
        blocks = np.transpose(M[:, cols], (1, 0, 2))
        if not _all_invertible(f, blocks):
            return False


def min_distance_exhaustive(f: Field, G, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact minimum weight over all nonzero messages, in lexicographic order."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        raise ValueError("zero-dimensional code has no nonzero codewords")
    total = f.order**k
    if total > budget.max_codewords:
        raise OracleBudgetExceeded(f"{f.order}^{k} messages exceed budget {budget.max_codewords}")
    scalars = np.arange(f.order, dtype=np.int64)
    # all combinations of rows 1..k-1, last row fastest
    tail = np.zeros((1, n), dtype=np.int64)
    for row in G[1:]:
        tail = f.vadd(tail[:, None, :], f.vmul(scalars[:, None], row[None, :])[None, :, :]).reshape(-1, n)
    best = n + 1
    for a0 in range(f.order):
        words = f.vadd(tail, f.vmul(a0, G[0])[None, :]) if a0 else tail
        w = np.count_nonzero(words, axis=1)
        if a0 == 0:
            w = w[1:]
        if w.size:
            best = min(best, int(w.min()))
        if best == 1:
            break
    return best


def intersect_bruteforce(A, B) -> list[int]:
    """Sorted intersection by plain element-wise scanning."""
    b_list = list(B)
    out = []
    for a in A:
        for b in b_list:
            if a == b:
                out.append(a)
                break
    return sorted(set(out))


def _dependent_mask(f: Field, vecs: np.ndarray) -> np.ndarray:
    """For a (B, w, R) stack of w vectors each, flag the stacks that are linearly dependent."""
    A = vecs.copy()
    B, w, _ = A.shape
    idx = np.arange(B)
    dependent = np.zeros(B, dtype=bool)
    for i in range(w):
        row = A[:, i, :]
        nz = row != 0
        zero = ~nz.any(axis=1)
        dependent |= zero
        pc = np.argmax(nz, axis=1)
        piv = np.where(zero, 1, row[idx, pc])
        inv = f.vinv(piv)
        for j in range(i + 1, w):
            factor = f.vmul(A[idx, j, pc], inv)
            factor = np.where(zero, 0, factor)
            A[:, j, :] = f.vsub(A[:, j, :], f.vmul(factor[:, None], row))
    return dependent


def min_distance_by_columns(f: Field, H, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact minimum distance as the size of the smallest dependent column set of H.

    Scans subset sizes w = 1, 2, ... in order; the total number of subsets
    examined is charged against ``max_minors``.
    """
    H = np.asarray(H, dtype=np.int64)
    R, n = H.shape
    cols = H.T
    spent = 0
    for w in range(1, R + 1):
        spent += math.comb(n, w)
        if spent > budget.max_minors:
            raise OracleBudgetExceeded(f"column subsets exceed budget {budget.max_minors}")
        combos = itertools.combinations(range(n), w)
        while True:
            chunk = list(itertools.islice(combos, MINOR_CHUNK))
            if not chunk:
                break
            stack = cols[np.asarray(chunk, dtype=np.int64)]
            if _dependent_mask(f, stack).any():
                return w
    return R + 1
