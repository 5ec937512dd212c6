"""Bierbrauer's semifields in the normalized form delta = 1, gamma = 0, beta in {0, 1}.

    x o y = (x1 y1^sigma + beta x1 y0^sigma + alpha x0 y0^sigma
             + eta (x1^sigma y1 - beta x0^sigma y1 + alpha x0^sigma y0),
             x0 y1 + x1 y0)

Conditions: eta is not a (sigma - 1)-st power and X^(sigma+1) - beta X - alpha
has no root in L. The transpose is

    (alpha x0 y0^sigma + (eta (alpha x0 y0 - beta x0 y1))^(sigma^-1) + x1 y1,
     x0 y1^sigma + beta x0 y0^sigma + (eta x0 y1)^(sigma^-1) + x1 y0)

which is construction1 over the trivial family of T = [[0, alpha], [1, beta]]
with eta' = -1/eta, evaluated at ((y1, y0), (x1, -eta x0)).
"""

from __future__ import annotations

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.families.base import (
    FamilyParams,
    build,
    fr,
    pair,
    require_nontrivial,
    require_not_sigma_power,
    require_rootless,
    split,
)
from chuk_semifield.gf import FieldCtx


class BierbrauerParams(FamilyParams):
    k: int = Field(ge=1, description="sigma exponent")
    alpha: int = Field(ge=1)
    beta: int = Field(default=0, ge=0, le=1)
    eta: int = Field(ge=1)


def _validate(ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, name: str) -> None:
    if beta not in (0, 1):
        raise ParameterError(f"{name}: beta must be 0 or 1, got {beta}")
    require_nontrivial(ctx, k, name)
    require_rootless(ctx, k, alpha, beta, name)
    require_not_sigma_power(ctx, k, eta, name)


def bierbrauer(
    ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, check: bool = True
) -> PreSemifield:
    """Build Bierbrauer's semifield.

    Args:
        ctx: the field L
        k: sigma exponent
        alpha: X^(sigma+1) - beta X - alpha must have no roots in L
        beta: 0 or 1
        eta: not a (sigma - 1)-st power
        check: validate the parameter conditions and the absence of zero divisors

    Raises:
        ParameterError: a parameter condition fails
    """
    if check:
        _validate(ctx, k, alpha, beta, eta, "bierbrauer")
    a, b, e = ctx.el(alpha), ctx.el(beta), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        xs0, xs1 = fr(ctx, x0, k), fr(ctx, x1, k)
        ys0, ys1 = fr(ctx, y0, k), fr(ctx, y1, k)
        first = x1 * ys1 + b * x1 * ys0 + a * x0 * ys0 + e * (xs1 * y1 - b * xs0 * y1 + a * xs0 * y0)
        return pair(first, x0 * y1 + x1 * y0)

    params = {"k": k, "alpha": alpha, "beta": beta, "eta": eta}
    return build(ctx, "bierbrauer", mult, params, check)


def bierbrauer_transpose(
    ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, check: bool = True
) -> PreSemifield:
    if check:
        _validate(ctx, k, alpha, beta, eta, "bierbrauer-transpose")
    a, b, e = ctx.el(alpha), ctx.el(beta), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        first = a * x0 * fr(ctx, y0, k) + fr(ctx, e * (a * x0 * y0 - b * x0 * y1), -k) + x1 * y1
        second = (
            x0 * fr(ctx, y1, k) + b * x0 * fr(ctx, y0, k) + fr(ctx, e * x0 * y1, -k) + x1 * y0
        )
        return pair(first, second)

    params = {"k": k, "alpha": alpha, "beta": beta, "eta": eta}
    return build(ctx, "bierbrauer-transpose", mult, params, check)
