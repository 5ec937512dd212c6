"""The autotopisms gamma_r of (sigma, tau)-biprojective semifields.

For a semifield on L^2 whose first component is (p^k + 1)-homogeneous and
whose second is (p^l + 1)-homogeneous,

    gamma_r = (diag(r^(sigma+1), r^(tau+1)), diag(r, r), diag(r, r))

is an autotopism for every r in L*.
"""

from __future__ import annotations

import logging

import numpy as np

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.gf import FieldCtx

logger = logging.getLogger(__name__)


def _block_scalars(ctx: FieldCtx, c0: int, c1: int) -> np.ndarray:
    m = ctx.m
    out = np.zeros((2 * m, 2 * m), dtype=np.int64)
    out[:m, :m] = ctx.mul_matrix(c0)
    out[m:, m:] = ctx.mul_matrix(c1)
    return out


def gamma_triple(ctx: FieldCtx, r: int, k: int, l: int) -> tuple[np.ndarray, np.ndarray]:
    """(N1, N2 = N3) of gamma_r."""
    first = ctx.mul(ctx.frob(r, k), r)
    second = ctx.mul(ctx.frob(r, l), r)
    return _block_scalars(ctx, first, second), _block_scalars(ctx, r, r)


def verify_gamma_autotopism(S: PreSemifield, k: int, l: int) -> bool:
    """gamma_r is an autotopism of S for every r != 0."""
    if S.d != 2:
        raise ParameterError("gamma autotopisms are defined on L^2")
    ctx = S.ctx
    for r in ctx.nonzero():
        N1, N = gamma_triple(ctx, int(r), k, l)
        lhs = S.C @ N1 % S.p
        rhs = np.einsum("ia,jb,abk->ijk", N, N, S.C) % S.p
        if not np.array_equal(lhs, rhs):
            logger.debug("gamma_%d fails for %s with (k, l) = (%d, %d)", r, S.label, k, l)
            return False
    return True
