"""GF(q^2) as L^2: x o y = (x0 y0 + a x1 y1, x0 y1 + x1 y0 + b x1 y1).

This is multiplication in L[t]/(t^2 - b t - a), a field exactly when
t^2 - b t - a has no root in L.
"""

from __future__ import annotations

import itertools

import numpy as np
from pydantic import Field

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ParameterError
from chuk_semifield.families.base import FamilyParams, pair, split
from chuk_semifield.gf import FieldCtx, _out
from chuk_semifield.types import ConstructionKind


class QuadraticFieldParams(FamilyParams):
    a: int = Field(ge=1)
    b: int = Field(default=0, ge=0)


def _has_root(ctx: FieldCtx, a: int, b: int) -> bool:
    t = ctx.el(ctx.elements())
    values = np.asarray(_out(t * t - ctx.el(b) * t - ctx.el(a)))
    return bool(np.any(values == 0))


def quadratic_extension_field(ctx: FieldCtx, a: int, b: int = 0, check: bool = True) -> PreSemifield:
    if check and _has_root(ctx, a, b):
        raise ParameterError(f"quadratic-field: t^2 - {b} t - {a} must have no root in L")
    A, B = ctx.el(a), ctx.el(b)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        x0, x1 = split(ctx, X)
        y0, y1 = split(ctx, Y)
        return pair(x0 * y0 + A * x1 * y1, x0 * y1 + x1 * y0 + B * x1 * y1)

    meta = {
        "construction": ConstructionKind.FIELD.value,
        "family": "quadratic-field",
        "params": {"a": a, "b": b},
        "flags": [],
    }
    return PreSemifield.from_multiplication(ctx, mult, d=2, metadata=meta)


def field_multiplication(ctx: FieldCtx) -> PreSemifield:
    """GF(q^2) through the first irreducible t^2 - b t - a in encoding order of (a, b)."""
    for a, b in itertools.product(ctx.nonzero(), ctx.elements()):
        if not _has_root(ctx, int(a), int(b)):
            return quadratic_extension_field(ctx, int(a), int(b), check=False)
    raise ParameterError(f"no irreducible quadratic over GF({ctx.p}^{ctx.m})")
