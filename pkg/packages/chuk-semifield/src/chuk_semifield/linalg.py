"""Linear algebra over F_p on plain int64 arrays.

Single matrices go through ``galois`` (row reduction, null spaces,
inverses). Stacks of small matrices, the common case in exhaustive sweeps,
use a batched Gauss-Jordan written directly in numpy.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any

import galois
import numpy as np

from chuk_semifield.errors import ConsistencyError, ParameterError


@lru_cache(maxsize=16)
def prime_field(p: int) -> Any:
    return galois.GF(p)


@lru_cache(maxsize=16)
def inv_table(p: int) -> np.ndarray:
    """inv[v] = v^(-1) mod p, inv[0] = 0."""
    table = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        table[v] = pow(v, p - 2, p)
    return table


def _gauss_jordan(a: np.ndarray, p: int, ncols: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a stack (B, R, C) over its first ``ncols`` columns.

    Returns the reduced stack and the rank of each member.
    """
    a = np.array(a, dtype=np.int64, copy=True) % p
    batch, rows, _ = a.shape
    inv = inv_table(p)
    rank = np.zeros(batch, dtype=np.int64)
    row_ids = np.arange(rows)
    for col in range(ncols):
        mask = (a[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = np.argmax(mask[b], axis=1)
        rb = rank[b]
        top = a[b, rb].copy()
        a[b, rb] = a[b, piv]
        a[b, piv] = top
        scale = inv[a[b, rb, col]]
        a[b, rb] = (a[b, rb] * scale[:, None]) % p
        factors = a[b, :, col].copy()
        factors[np.arange(b.size), rb] = 0
        a[b] = (a[b] - factors[:, :, None] * a[b, rb][:, None, :]) % p
        rank[b] += 1
    return a, rank


def batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack (..., R, C) of matrices mod p."""
    mats = np.asarray(mats, dtype=np.int64)
    lead = mats.shape[:-2]
    flat = mats.reshape((-1,) + mats.shape[-2:])
    if flat.shape[0] == 0:
        return np.zeros(lead, dtype=np.int64)
    _, rank = _gauss_jordan(flat, p, flat.shape[-1])
    return rank.reshape(lead)


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    return int(batch_rank(np.asarray(mat)[None], p)[0])


def batch_inverse(mats: np.ndarray, p: int) -> np.ndarray:
    """Inverses of a stack (B, n, n); every member must be invertible."""
    mats = np.asarray(mats, dtype=np.int64)
    batch, n, _ = mats.shape
    eye = np.broadcast_to(np.eye(n, dtype=np.int64), (batch, n, n))
    reduced, rank = _gauss_jordan(np.concatenate([mats, eye], axis=2), p, n)
    if np.any(rank < n):
        raise ParameterError("singular matrix in batch inverse")
    return reduced[:, :, n:]


def inverse_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    return batch_inverse(np.asarray(mat)[None], p)[0]


def null_space_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {v : mat @ v = 0}."""
    gf = prime_field(p)
    mat = np.asarray(mat, dtype=np.int64) % p
    basis = gf(mat).null_space()
    return np.asarray(basis.view(np.ndarray), dtype=np.int64).reshape(-1, mat.shape[1])


def left_null_space_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {v : v @ mat = 0}."""
    return null_space_mod_p(np.asarray(mat).T, p)


def row_reduce_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form with zero rows dropped."""
    reduced, rank = _gauss_jordan(np.asarray(mat)[None], p, np.asarray(mat).shape[1])
    return reduced[0, : int(rank[0])]


def same_row_space(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ra = rank_mod_p(a, p)
    return ra == rank_mod_p(b, p) and ra == rank_mod_p(np.vstack([a, b]), p)


def coordinates_in_span(basis: np.ndarray, targets: np.ndarray, p: int) -> np.ndarray:
    """Coefficients c with c @ basis = targets (basis rows independent)."""
    basis = np.asarray(basis, dtype=np.int64) % p
    targets = np.asarray(targets, dtype=np.int64) % p
    rref = row_reduce_mod_p(basis, p)
    if rref.shape[0] != basis.shape[0]:
        raise ParameterError("basis rows are linearly dependent")
    pivots = np.argmax(rref != 0, axis=1)
    sub_inv = inverse_mod_p(basis[:, pivots], p)
    coords = (targets[:, pivots] @ sub_inv) % p
    if not np.array_equal((coords @ basis) % p, targets):
        raise ConsistencyError("target matrix lies outside the span")
    return coords


def matrices_from_indices(indices: np.ndarray, n: int, p: int) -> np.ndarray:
    """All n x n matrices whose base-p code is in ``indices``."""
    weights = p ** np.arange(n * n, dtype=np.int64)
    digits = (np.asarray(indices, dtype=np.int64)[:, None] // weights) % p
    return digits.reshape(-1, n, n)
