"""Dickson semifields and their transposes.

    x o y   = (x0 y0 + alpha x1^rho y1^tau,  x0^sigma y1 + x1 y0)
    x o^t y = (x0 y0 + (x1 y1)^(sigma^-1),  (alpha x0)^(rho^-1) y1^(tau rho^-1) + x1 y0)

with sigma, tau, rho the automorphisms x -> x^(p^k), x^(p^l), x^(p^r).
The classical commutative semifields take sigma = id and rho = tau.
"""

from __future__ import annotations

import math

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.families.base import (
    FamilyParams,
    build,
    fr,
    pair,
    require_non_power,
    require_nonsquare,
    split,
)
from chuk_semifield.gf import FieldCtx


class DicksonParams(FamilyParams):
    k: int = Field(default=0, ge=0, description="sigma exponent")
    l: int = Field(ge=0, description="tau exponent")
    r: int = Field(ge=0, description="rho exponent")
    alpha: int = Field(ge=1)


class DicksonBiprojectiveParams(FamilyParams):
    l: int = Field(ge=1, description="tau exponent")
    alpha: int = Field(ge=1)


def dickson_exponent(ctx: FieldCtx, k: int, l: int, r: int) -> int:
    """e with L^(p^r+1) L^(p^k+1) L^(p^l-1) equal to the e-th powers of L*."""
    p = ctx.p
    e = math.gcd(p**r + 1, p**k + 1)
    e = math.gcd(e, p ** (l % ctx.m) - 1)
    return math.gcd(e, ctx.order - 1)


def dickson(ctx: FieldCtx, k: int, l: int, r: int, alpha: int, check: bool = True) -> PreSemifield:
    """alpha must avoid the product of the (p^r+1)-, (p^k+1)- and (p^l-1)-th powers."""
    if check:
        e = dickson_exponent(ctx, k, l, r)
        require_non_power(ctx, alpha, e, f"{e}-th power", "dickson")
    a = ctx.el(alpha)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        return pair(x0 * y0 + a * fr(ctx, x1, r) * fr(ctx, y1, l), fr(ctx, x0, k) * y1 + x1 * y0)

    params = {"k": k, "l": l, "r": r, "alpha": alpha}
    return build(ctx, "dickson", mult, params, check)


def dickson_transpose(
    ctx: FieldCtx, k: int, l: int, r: int, alpha: int, check: bool = True
) -> PreSemifield:
    if check:
        e = dickson_exponent(ctx, k, l, r)
        require_non_power(ctx, alpha, e, f"{e}-th power", "dickson-transpose")
    a = ctx.el(alpha)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        first = x0 * y0 + fr(ctx, x1 * y1, -k)
        second = fr(ctx, a * x0, -r) * fr(ctx, y1, l - r) + x1 * y0
        return pair(first, second)

    params = {"k": k, "l": l, "r": r, "alpha": alpha}
    return build(ctx, "dickson-transpose", mult, params, check)


def dickson_biprojective(ctx: FieldCtx, l: int, alpha: int, check: bool = True) -> PreSemifield:
    """(x0 y0 + alpha x1 y1, x0^tau y1 + x1 y0^tau): commutative Dickson, biprojective pair (id, tau).

    Maps onto dickson(0, l, l, alpha^tau) by (phi, phi, phi), phi(v) = (v0^tau, v1).
    """
    if check:
        require_nonsquare(ctx, alpha, "dickson-biprojective")
    a = ctx.el(alpha)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        return pair(x0 * y0 + a * x1 * y1, fr(ctx, x0, l) * y1 + x1 * fr(ctx, y0, l))

    return build(ctx, "dickson-biprojective", mult, {"l": l, "alpha": alpha}, check)
