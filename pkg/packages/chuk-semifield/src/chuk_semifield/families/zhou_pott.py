"""Zhou-Pott commutative semifields and their transposes.

    x o y   = (x0^sigma y0 + x0 y0^sigma + alpha (x1^sigma y1 + x1 y1^sigma)^tau,  x0 y1 + x1 y0)
    x o^t y = ((x0 y0)^(sigma^-1) + x0 y0^sigma + x1 y1,
               (alpha x0)^((tau sigma)^-1) y1^(sigma^-1) + (alpha x0)^(tau^-1) y1^sigma + x1 y0)

for p odd, sigma of odd order and alpha a non-square.
"""

from __future__ import annotations

import math

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.families.base import (
    FamilyParams,
    build,
    fr,
    pair,
    require_nonsquare,
    require_odd,
    split,
)
from chuk_semifield.gf import FieldCtx


class ZhouPottParams(FamilyParams):
    k: int = Field(ge=0, description="sigma exponent")
    l: int = Field(default=0, ge=0, description="tau exponent")
    alpha: int = Field(ge=1)


def _validate(ctx: FieldCtx, k: int, alpha: int, name: str) -> None:
    require_odd(ctx, name)
    order = ctx.m // math.gcd(k % ctx.m, ctx.m)
    if order % 2 == 0:
        raise ParameterError(f"{name}: sigma must have odd order, it has order {order}")
    require_nonsquare(ctx, alpha, name)


def zhou_pott(ctx: FieldCtx, k: int, l: int, alpha: int, check: bool = True) -> PreSemifield:
    if check:
        _validate(ctx, k, alpha, "zhou-pott")
    a = ctx.el(alpha)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        inner = fr(ctx, x1, k) * y1 + x1 * fr(ctx, y1, k)
        first = fr(ctx, x0, k) * y0 + x0 * fr(ctx, y0, k) + a * fr(ctx, inner, l)
        return pair(first, x0 * y1 + x1 * y0)

    return build(ctx, "zhou-pott", mult, {"k": k, "l": l, "alpha": alpha}, check)


def zhou_pott_transpose(
    ctx: FieldCtx, k: int, l: int, alpha: int, check: bool = True
) -> PreSemifield:
    if check:
        _validate(ctx, k, alpha, "zhou-pott-transpose")
    a = ctx.el(alpha)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        ax0 = a * x0
        first = fr(ctx, x0 * y0, -k) + x0 * fr(ctx, y0, k) + x1 * y1
        second = (
            fr(ctx, ax0, -(k + l)) * fr(ctx, y1, -k) + fr(ctx, ax0, -l) * fr(ctx, y1, k) + x1 * y0
        )
        return pair(first, second)

    return build(ctx, "zhou-pott-transpose", mult, {"k": k, "l": l, "alpha": alpha}, check)
