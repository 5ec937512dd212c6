"""Knuth's four semifields of order q^2.

With sigma: x -> x^(p^k) != id and P(X) = X^(sigma+1) - beta X - alpha
rootless in L:

    I    (x0 y0 + alpha x1^sigma y1^(sigma^-2),  x1 y0 + x0^sigma y1 + beta x1^sigma y1^(sigma^-1))
    II   (x0 y0 + alpha x1^sigma y1,             x1 y0 + x0^sigma y1 + beta x1^sigma y1)
    III  (x0 y0 + alpha x1^(sigma^-1) y1^(sigma^-2), x1 y0 + x0^sigma y1 + beta x1 y1^(sigma^-1))
    IV   (x0 y0 + alpha x1^(sigma^-1) y1,        x1 y0 + x0^sigma y1 + beta x1 y1)

Knuth II is the Hughes-Kleinfeld semifield, the cyclic semifield
y0 x + y1 T(x) for T = [[0, alpha], [1, beta]] x^sigma.
"""

from __future__ import annotations

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.families.base import (
    FamilyParams,
    build,
    fr,
    pair,
    require_nontrivial,
    require_rootless,
    split,
)
from chuk_semifield.gf import FieldCtx


class KnuthParams(FamilyParams):
    k: int = Field(ge=1, description="sigma exponent")
    alpha: int = Field(ge=1)
    beta: int = Field(default=0, ge=0)


def _validate(ctx: FieldCtx, k: int, alpha: int, beta: int, name: str, check: bool) -> None:
    if check:
        require_nontrivial(ctx, k, name)
        require_rootless(ctx, k, alpha, beta, name)


def _knuth(
    ctx: FieldCtx,
    name: str,
    k: int,
    alpha: int,
    beta: int,
    check: bool,
    shape: tuple[int, int, int, int],
    twist_y0: bool = False,
) -> PreSemifield:
    """Common skeleton; ``shape`` holds the exponents (x1, y1) of the alpha and beta terms.

    ``twist_y0`` replaces y0 by y0^sigma throughout.
    """
    _validate(ctx, k, alpha, beta, name, check)
    a, b = ctx.el(alpha), ctx.el(beta)
    ax, ay, bx, by = shape

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        if twist_y0:
            y0 = fr(ctx, y0, k)
        first = x0 * y0 + a * fr(ctx, x1, ax) * fr(ctx, y1, ay)
        second = x1 * y0 + fr(ctx, x0, k) * y1 + b * fr(ctx, x1, bx) * fr(ctx, y1, by)
        return pair(first, second)

    return build(ctx, name, mult, {"k": k, "alpha": alpha, "beta": beta}, check)


def knuth1(ctx: FieldCtx, k: int, alpha: int, beta: int = 0, check: bool = True) -> PreSemifield:
    """Knuth I; composed with y1 -> y1^(sigma^2) it is construction2 over the triang family."""
    return _knuth(ctx, "knuth1", k, alpha, beta, check, (k, -2 * k, k, -k))


def knuth2(ctx: FieldCtx, k: int, alpha: int, beta: int = 0, check: bool = True) -> PreSemifield:
    return _knuth(ctx, "knuth2", k, alpha, beta, check, (k, 0, k, 0))


def knuth3(ctx: FieldCtx, k: int, alpha: int, beta: int = 0, check: bool = True) -> PreSemifield:
    return _knuth(ctx, "knuth3", k, alpha, beta, check, (-k, -2 * k, 0, -k))


def knuth4(ctx: FieldCtx, k: int, alpha: int, beta: int = 0, check: bool = True) -> PreSemifield:
    return _knuth(ctx, "knuth4", k, alpha, beta, check, (-k, 0, 0, 0))


def knuth2_biprojective(
    ctx: FieldCtx, k: int, alpha: int, beta: int = 0, check: bool = True
) -> PreSemifield:
    """Knuth II evaluated at (y0^sigma, y1); biprojective with pair (sigma, sigma)."""
    return _knuth(ctx, "knuth2-biprojective", k, alpha, beta, check, (k, 0, k, 0), twist_y0=True)
