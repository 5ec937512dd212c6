"""Dempwolff's semifields.

The explicit multiplication, for p odd, alpha a non-square, N_(L:K)(eta) != 1
and Fix(tau) inside K = Fix(sigma):

    (x0 y0 + x1 y1^sigma - eta x1^tau y1^(sigma^-1),
     x0 y1 + alpha (x1 y0^sigma - eta x1^tau y0^(sigma^-1)))

The operator form uses T(y) = [[0, 1], [alpha, 0]] y^sigma:

    x o y = x0 y + x1 T(y) + eta x1^tau T^-1(y)

Its dual is the twisted cyclic semifield of T^-1 with twist tau, evaluated
at (T(x), (y1, y0)); validity is irreducibility of T plus the twisted cyclic
norm condition, neither of which depends on p, so the operator form also
builds the even-characteristic analogue.
"""

from __future__ import annotations

import numpy as np
from pydantic import Field

from chuk_semifield.construct import twisted_cyclic_condition
from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.families.base import (
    FamilyParams,
    build,
    fr,
    pair,
    require_norm_not_one,
    require_nonsquare,
    require_odd,
    require_subfield,
    split,
)
from chuk_semifield.gf import FieldCtx
from chuk_semifield.semilinear import SemilinearMap


class DempwolffParams(FamilyParams):
    k: int = Field(ge=1, description="sigma exponent")
    l: int = Field(ge=0, description="tau exponent")
    alpha: int = Field(ge=1)
    eta: int = Field(ge=0)


def dempwolff_map(ctx: FieldCtx, k: int, alpha: int) -> SemilinearMap:
    """T(y) = (y1^sigma, alpha y0^sigma)."""
    return SemilinearMap.from_rows(ctx, [[0, 1], [alpha, 0]], k)


def dempwolff(
    ctx: FieldCtx, k: int, l: int, alpha: int, eta: int, check: bool = True
) -> PreSemifield:
    """Build Dempwolff's semifield from the explicit multiplication.

    Args:
        ctx: the field L, of odd characteristic
        k: sigma exponent
        l: tau exponent, with Fix(tau) inside Fix(sigma)
        alpha: a nonsquare of L
        eta: N_(L:K)(eta) != 1
        check: validate the parameter conditions and the absence of zero divisors

    Raises:
        ParameterError: p is even or a parameter condition fails
    """
    if check:
        require_odd(ctx, "dempwolff")
        require_nonsquare(ctx, alpha, "dempwolff")
        require_norm_not_one(ctx, k, eta, "dempwolff")
        require_subfield(ctx, k, l, "dempwolff")
    a, e = ctx.el(alpha), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        xt1 = fr(ctx, x1, l)
        first = x0 * y0 + x1 * fr(ctx, y1, k) - e * xt1 * fr(ctx, y1, -k)
        second = x0 * y1 + a * (x1 * fr(ctx, y0, k) - e * xt1 * fr(ctx, y0, -k))
        return pair(first, second)

    params = {"k": k, "l": l, "alpha": alpha, "eta": eta}
    return build(ctx, "dempwolff", mult, params, check)


def dempwolff_operator_form(
    ctx: FieldCtx, k: int, l: int, alpha: int, eta: int, check: bool = True
) -> PreSemifield:
    """Build the operator form x0 y + x1 T(y) + eta x1^tau T^-1(y), any p.

    Args:
        ctx: the field L
        k: sigma exponent of T
        l: tau exponent
        alpha: T(y) = (y1^sigma, alpha y0^sigma) must be irreducible
        eta: must satisfy the twisted cyclic norm condition of T^-1
        check: validate irreducibility, the norm condition and the axioms

    Raises:
        ParameterError: T is reducible or eta fails the norm condition
    """
    T = dempwolff_map(ctx, k, alpha)
    if check:
        require_subfield(ctx, k, l, "dempwolff-operator")
        if not T.is_irreducible_oracle():
            raise ParameterError(f"dempwolff-operator: T = {T.to_dict()} must be irreducible")
        if not twisted_cyclic_condition(T.inverse(), 2, l, eta):
            raise ParameterError(
                f"dempwolff-operator: eta = {eta} violates the twisted cyclic norm condition of T^-1"
            )
    a, e = ctx.el(alpha), ctx.el(eta)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        xt1 = fr(ctx, x1, l)
        # T^-1(y) = ((y1 / alpha)^(sigma^-1), y0^(sigma^-1))
        first = x0 * y0 + x1 * fr(ctx, y1, k) + e * xt1 * fr(ctx, y1 / a, -k)
        second = x0 * y1 + a * x1 * fr(ctx, y0, k) + e * xt1 * fr(ctx, y0, -k)
        return pair(first, second)

    params = {"k": k, "l": l, "alpha": alpha, "eta": eta}
    return build(ctx, "dempwolff-operator", mult, params, check)
