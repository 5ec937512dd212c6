"""Taniguchi's semifields and the chain linking them to construction1.

With eta not a (sigma - 1)-st power and X^(sigma+1) - beta' X - alpha'
rootless:

    T(x, y) = ((x0^sigma y0 - eta x0 y0^sigma)^(sigma^2)
               + beta' (x0^sigma y1 + eta y0^sigma x1)^sigma
               + alpha' (x1^sigma y1 - eta x1 y1^sigma),
               x1 y0 + x0 y1)

The chain, with alpha = alpha'^(sigma^-2), beta = beta'^(sigma^-2) and
Y = (y1, y0):

    T'     first component of T raised to sigma^-2
    T'^t   x1 Y + eta [[0, -x0], [-(alpha x0)^(sigma^2), (beta x0)^sigma]] Y^sigma
                + [[beta x0, x0^(sigma^-1)], [(alpha x0)^sigma, 0]] Y^(sigma^-1)
    star   T'^t evaluated at (-x0/alpha, x1)

and star(x, y) is construction1 over triang(sigma, 1/alpha, -(beta/alpha)^sigma)
evaluated at ((y1, y0), (x1, x0)).
"""

from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
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


class TaniguchiParams(FamilyParams):
    k: int = Field(ge=1, description="sigma exponent")
    alpha: int = Field(ge=1, description="alpha'")
    beta: int = Field(default=0, ge=0, description="beta'")
    eta: int = Field(ge=1)


def _validate(ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, name: str) -> None:
    require_nontrivial(ctx, k, name)
    require_rootless(ctx, k, alpha, beta, name)
    require_not_sigma_power(ctx, k, eta, name)


def unprimed(ctx: FieldCtx, k: int, alpha: int, beta: int) -> tuple[int, int]:
    """(alpha'^(sigma^-2), beta'^(sigma^-2))."""
    return int(ctx.frob(alpha, -2 * k)), int(ctx.frob(beta, -2 * k))


def taniguchi(
    ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, check: bool = True
) -> PreSemifield:
    if check:
        _validate(ctx, k, alpha, beta, eta, "taniguchi")
    a, b, e = ctx.el(alpha), ctx.el(beta), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        xs0, xs1 = fr(ctx, x0, k), fr(ctx, x1, k)
        ys0, ys1 = fr(ctx, y0, k), fr(ctx, y1, k)
        first = (
            fr(ctx, xs0 * y0 - e * x0 * ys0, 2 * k)
            + b * fr(ctx, xs0 * y1 + e * ys0 * x1, k)
            + a * (xs1 * y1 - e * x1 * ys1)
        )
        return pair(first, x1 * y0 + x0 * y1)

    params = {"k": k, "alpha": alpha, "beta": beta, "eta": eta}
    return build(ctx, "taniguchi", mult, params, check)


def taniguchi_prime(
    ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, check: bool = True
) -> PreSemifield:
    """T' written out with the unprimed alpha, beta."""
    if check:
        _validate(ctx, k, alpha, beta, eta, "taniguchi-prime")
    alpha_u, beta_u = unprimed(ctx, k, alpha, beta)
    a, b, e = ctx.el(alpha_u), ctx.el(beta_u), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        xs0, xs1 = fr(ctx, x0, k), fr(ctx, x1, k)
        ys0, ys1 = fr(ctx, y0, k), fr(ctx, y1, k)
        first = (
            xs0 * y0
            - e * x0 * ys0
            + b * fr(ctx, xs0 * y1 + e * ys0 * x1, -k)
            + a * fr(ctx, xs1 * y1 - e * x1 * ys1, -2 * k)
        )
        return pair(first, x1 * y0 + x0 * y1)

    params = {"k": k, "alpha": alpha, "beta": beta, "eta": eta}
    return build(ctx, "taniguchi-prime", mult, params, check)


def _transpose_formula(
    ctx: FieldCtx, k: int, a: Any, b: Any, e: Any, x0: Any, x1: Any, y0: Any, y1: Any
) -> np.ndarray:
    first = fr(ctx, x0 * y0, -k) - e * x0 * fr(ctx, y0, k) + b * x0 * fr(ctx, y1, -k) + x1 * y1
    second = (
        e * fr(ctx, b * x0, k) * fr(ctx, y0, k)
        + fr(ctx, a * x0, k) * fr(ctx, y1, -k)
        - e * fr(ctx, a * x0, 2 * k) * fr(ctx, y1, k)
        + x1 * y0
    )
    return pair(first, second)


def taniguchi_transpose(
    ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, check: bool = True
) -> PreSemifield:
    """Transpose of T'."""
    if check:
        _validate(ctx, k, alpha, beta, eta, "taniguchi-transpose")
    alpha_u, beta_u = unprimed(ctx, k, alpha, beta)
    a, b, e = ctx.el(alpha_u), ctx.el(beta_u), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        return _transpose_formula(ctx, k, a, b, e, x0, x1, y0, y1)

    params = {"k": k, "alpha": alpha, "beta": beta, "eta": eta}
    return build(ctx, "taniguchi-transpose", mult, params, check)


def taniguchi_star(
    ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int, check: bool = True
) -> PreSemifield:
    """T'^t((-x0/alpha, x1), y)."""
    if check:
        _validate(ctx, k, alpha, beta, eta, "taniguchi-star")
    alpha_u, beta_u = unprimed(ctx, k, alpha, beta)
    a, b, e = ctx.el(alpha_u), ctx.el(beta_u), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        return _transpose_formula(ctx, k, a, b, e, -x0 / a, x1, y0, y1)

    params = {"k": k, "alpha": alpha, "beta": beta, "eta": eta}
    return build(ctx, "taniguchi-star", mult, params, check)
