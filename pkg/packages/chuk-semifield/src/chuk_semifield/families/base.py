"""Shared plumbing for the named families.

Every family multiplication is written on galois arrays: ``split`` lifts the
(N, 2) integer vectors to the two component arrays, ``fr`` applies
x -> x^(p^k), and ``pair`` packs the two output components back into plain
integers. Parameter checks raise ParameterError carrying the violated
condition.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.gf import FieldCtx, _out
from chuk_semifield.semilinear import projective_polynomial_roots
from chuk_semifield.types import FLAG_UNCHECKED, ConstructionKind

# (N, 2) x (N, 2) -> (N, 2)
FamilyMultiplication = Callable[[np.ndarray, np.ndarray], np.ndarray]


class FamilyParams(BaseModel):
    """Base schema for family parameters; elements are encoded integers."""

    model_config = ConfigDict(extra="forbid")

    check: bool = Field(default=True, description="Validate the family's parameter conditions")


# ============================================================================
# Formula helpers
# ============================================================================


def split(ctx: FieldCtx, V: np.ndarray) -> tuple[Any, Any]:
    arr = ctx.el(np.asarray(V, dtype=np.int64))
    return arr[..., 0], arr[..., 1]


def fr(ctx: FieldCtx, x: Any, k: int) -> Any:
    """x^(p^k) on galois arrays; negative k gives the inverse automorphism."""
    return x ** (ctx.p ** (k % ctx.m))


def pair(first: Any, second: Any) -> np.ndarray:
    return np.stack(
        [np.asarray(_out(first), dtype=np.int64), np.asarray(_out(second), dtype=np.int64)],
        axis=-1,
    )


def build(
    ctx: FieldCtx,
    name: str,
    mult: FamilyMultiplication,
    params: dict[str, Any],
    check: bool,
    flags: Sequence[str] = (),
) -> PreSemifield:
    meta = {
        "construction": ConstructionKind.FAMILY.value,
        "family": name,
        "params": params,
        "flags": list(flags) + ([] if check else [FLAG_UNCHECKED]),
    }
    return PreSemifield.from_multiplication(ctx, mult, d=2, metadata=meta)


# ============================================================================
# Parameter conditions
# ============================================================================


def require_odd(ctx: FieldCtx, family: str) -> None:
    if ctx.p == 2:
        raise ParameterError(f"{family}: p must be odd")


def require_nontrivial(ctx: FieldCtx, k: int, family: str) -> None:
    if k % ctx.m == 0:
        raise ParameterError(f"{family}: sigma must not be the identity (k = {k})")


def require_rootless(ctx: FieldCtx, k: int, alpha: int, beta: int, family: str) -> None:
    roots = projective_polynomial_roots(ctx, k, alpha, beta)
    if roots.size:
        raise ParameterError(
            f"{family}: X^(sigma+1) - beta X - alpha must have no roots in L; "
            f"X = {int(roots[0])} is one"
        )


def require_non_power(ctx: FieldCtx, x: int, d: int, what: str, family: str) -> None:
    """x must be nonzero and outside the d-th powers."""
    d = math.gcd(d, ctx.order - 1)
    if d == 1:
        raise ParameterError(f"{family}: every element of L is a {what}, no valid choice exists")
    if x == 0 or ctx.is_dth_power(x, d):
        raise ParameterError(f"{family}: {x} must not be a {what}")


def require_nonsquare(ctx: FieldCtx, x: int, family: str) -> None:
    require_non_power(ctx, x, 2, "square", family)


def require_not_sigma_power(ctx: FieldCtx, k: int, eta: int, family: str) -> None:
    """eta must not be a (sigma - 1)-st power; these are the (p^gcd(k, m) - 1)-th powers."""
    d = ctx.p ** math.gcd(k % ctx.m, ctx.m) - 1
    require_non_power(ctx, eta, d, "(sigma-1)-st power", family)


def require_norm_not_one(ctx: FieldCtx, k: int, eta: int, family: str) -> None:
    if ctx.norm(eta, k) == 1:
        raise ParameterError(f"{family}: N_(L:K)(eta) must differ from 1 (eta = {eta})")


def require_subfield(ctx: FieldCtx, k: int, l: int, family: str) -> None:
    """Fix(x -> x^(p^l)) must lie inside Fix(x -> x^(p^k))."""
    if math.gcd(k % ctx.m, ctx.m) % math.gcd(l % ctx.m, ctx.m):
        raise ParameterError(f"{family}: the fixed field of tau must be a subfield of K = Fix(sigma)")
