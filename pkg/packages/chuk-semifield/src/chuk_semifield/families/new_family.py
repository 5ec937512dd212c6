"""The family S_(sigma, tau, alpha, eta) obtained from construction1 over the diag family.

    x o y = (x1 y1^sigma - eta x1^sigma y1 + alpha (x0 y0^sigma - eta^(tau^-1) x0^sigma y0),
             x0^tau y1 + x1 y0^tau)

Valid when alpha lies outside the d-th powers, d = gcd(p^k + 1, p^l - 1, p^m - 1),
and N_(L:K)(eta) != 1. For eta in Fix(tau), in particular eta = -1 and eta = 0,
the alpha term reads alpha (x0 y0^sigma - eta x0^sigma y0).

Every S_(sigma, tau, alpha, eta) is biprojective with pair (sigma, tau).
"""

from __future__ import annotations

import logging

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.families.base import (
    FamilyParams,
    build,
    fr,
    pair,
    require_norm_not_one,
    split,
)
from chuk_semifield.gf import FieldCtx, admissible_degree
from chuk_semifield.types import FLAG_ETA_ZERO

logger = logging.getLogger(__name__)


class NewFamilyBuildParams(FamilyParams):
    k: int = Field(ge=1, description="sigma exponent")
    l: int = Field(ge=1, description="tau exponent")
    alpha: int = Field(ge=1)
    eta: int = Field(default=0, ge=0)


def require_admissible_alpha(ctx: FieldCtx, k: int, l: int, alpha: int, family: str) -> int:
    """alpha outside the d-th powers; returns d."""
    d = admissible_degree(ctx.p, k % ctx.m, l % ctx.m, ctx.m)
    if d == 1:
        raise ParameterError(f"{family}: d = 1, every alpha is a d-th power")
    if alpha == 0 or ctx.is_dth_power(alpha, d):
        raise ParameterError(f"{family}: alpha = {alpha} must not be a {d}-th power")
    return d


def new_family(
    ctx: FieldCtx, k: int, l: int, alpha: int, eta: int = 0, check: bool = True
) -> PreSemifield:
    """Build S_(sigma, tau, alpha, eta) on L^2.

    Args:
        ctx: the field L
        k: sigma is x -> x^(p^k)
        l: tau is x -> x^(p^l)
        alpha: encoded element, not a d-th power for d = gcd(p^k + 1, p^l - 1, p^m - 1)
        eta: encoded element with N_(L:K)(eta) != 1; 0 is accepted and flagged
        check: validate the parameter conditions and the absence of zero divisors

    Returns:
        The presemifield, labelled "new-family"

    Raises:
        ParameterError: alpha or eta violates its condition
    """
    flags: list[str] = []
    if check:
        require_admissible_alpha(ctx, k, l, alpha, "new-family")
        require_norm_not_one(ctx, k, eta, "new-family")
    if eta == 0:
        logger.warning("new family with eta = 0 lies outside the counted family")
        flags.append(FLAG_ETA_ZERO)
    a, e = ctx.el(alpha), ctx.el(eta)
    e_tau = fr(ctx, e, -l)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        first = (
            x1 * fr(ctx, y1, k)
            - e * fr(ctx, x1, k) * y1
            + a * (x0 * fr(ctx, y0, k) - e_tau * fr(ctx, x0, k) * y0)
        )
        second = fr(ctx, x0, l) * y1 + x1 * fr(ctx, y0, l)
        return pair(first, second)

    params = {"k": k, "l": l, "alpha": alpha, "eta": eta}
    return build(ctx, "new-family", mult, params, check, flags)
