"""Spread sets and the transpose operation.

The spread set of S is the F_p-space of right multiplications
{R_y : y in S}, spanned by R_{e_j}. The transpose replaces every R_y by its
adjoint under the trace form <u, v> = sum_c Tr(u_c v_c), which in digit
coordinates is R* = G R^T G^-1 with G the block-diagonal trace Gram matrix.
The same matrices come out of the dual spread: the perp of
{(x, x R_y)} under the alternating form (X1, X2).(Y1, Y2) = <X1, Y2> - <X2, Y1>
is the graph {(w, w R*)}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ConsistencyError
from chuk_semifield.linalg import batch_rank, inverse_mod_p, null_space_mod_p, rank_mod_p, same_row_space

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpreadSet:
    """F_p-span of n matrices of size n x n."""

    p: int
    basis: np.ndarray

    @property
    def n(self) -> int:
        return int(self.basis.shape[-1])

    @property
    def flat(self) -> np.ndarray:
        return self.basis.reshape(self.basis.shape[0], -1)

    @property
    def dimension(self) -> int:
        return rank_mod_p(self.flat, self.p)

    def members(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Members sum_j c_j B_j with c read from the indices start..stop-1."""
        k = self.basis.shape[0]
        stop = self.p**k if stop is None else stop
        idx = np.arange(start, stop, dtype=np.int64)
        coeffs = (idx[:, None] // self.p ** np.arange(k, dtype=np.int64)) % self.p
        return np.einsum("bj,jrc->brc", coeffs, self.basis) % self.p

    def is_valid(self) -> bool:
        """Dimension n and every nonzero member invertible."""
        if self.dimension != self.n:
            return False
        ranks = batch_rank(self.members(1), self.p)
        return bool(np.all(ranks == self.n))

    def equals(self, other: SpreadSet) -> bool:
        """Same set of matrices."""
        return self.p == other.p and same_row_space(self.flat, other.flat, self.p)

    def contains(self, mats: np.ndarray) -> np.ndarray:
        """Membership of each matrix of a stack (..., n, n)."""
        mats = np.asarray(mats, dtype=np.int64) % self.p
        lead = mats.shape[:-2]
        flat = mats.reshape(-1, self.n * self.n)
        base = self.dimension
        stacked = np.concatenate(
            [np.broadcast_to(self.flat, (flat.shape[0],) + self.flat.shape), flat[:, None, :]], axis=1
        )
        return (batch_rank(stacked, self.p) == base).reshape(lead)

    def to_text(self) -> str:
        """One member per line: the n row integers, each row read base p."""
        weights = self.p ** np.arange(self.n, dtype=np.int64)
        lines = [" ".join(str(int(v)) for v in (mat @ weights)) for mat in self.members()]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "n": self.n, "basis": self.basis.tolist()}


def spread_set(S: PreSemifield) -> SpreadSet:
    return SpreadSet(S.p, S.spread_basis())


def spread_equal(S1: PreSemifield, S2: PreSemifield) -> bool:
    return spread_set(S1).equals(spread_set(S2))


def left_spread_set(S: PreSemifield) -> SpreadSet:
    """Left multiplications; the spread set of the dual."""
    return SpreadSet(S.p, np.ascontiguousarray(S.C))


# ============================================================================
# Transpose
# ============================================================================


def trace_form(S: PreSemifield) -> np.ndarray:
    """Block-diagonal Gram matrix of <u, v> = sum_c Tr(u_c v_c)."""
    gram = S.ctx.trace_gram()
    return np.kron(np.eye(S.d, dtype=np.int64), gram) % S.p


def adjoint_matrices(S: PreSemifield, mats: np.ndarray) -> np.ndarray:
    """G R^T G^-1 for each R of a stack."""
    G = trace_form(S)
    G_inv = inverse_mod_p(G, S.p)
    return np.einsum("ab,jcb,cd->jad", G, mats, G_inv) % S.p


def dual_spread_matrices(S: PreSemifield, mats: np.ndarray) -> np.ndarray:
    """Graph matrices of the perps of {(x, x R)} under the alternating form."""
    p, n = S.p, S.n
    G = trace_form(S)
    zero = np.zeros_like(G)
    J = np.block([[zero, G], [(-G) % p, zero]])
    out = []
    for R in mats:
        ker = null_space_mod_p(np.hstack([np.eye(n, dtype=np.int64), R]) @ J % p, p)
        if ker.shape[0] != n:
            raise ConsistencyError(f"perp has dimension {ker.shape[0]}, expected {n}")
        Z1, Z2 = ker[:, :n], ker[:, n:]
        if rank_mod_p(Z1, p) != n:
            raise ConsistencyError("dual spread element is not a graph over the first block")
        out.append(inverse_mod_p(Z1, p) @ Z2 % p)
    return np.stack(out)


def transpose(S: PreSemifield) -> PreSemifield:
    """Presemifield whose R_{e_j} is the adjoint of the original R_{e_j}.

    Computed through the trace adjoint and re-derived from the dual spread;
    the two must coincide.
    """
    basis = S.spread_basis()
    adj = adjoint_matrices(S, basis)
    kernel = dual_spread_matrices(S, basis)
    if not np.array_equal(adj, kernel):
        raise ConsistencyError(f"transpose of {S.label}: trace adjoint and dual spread disagree")
    # C'[i, j, :] = R*_{e_j}[i, :]
    return S.derive(adj.transpose(1, 0, 2), "transpose")
