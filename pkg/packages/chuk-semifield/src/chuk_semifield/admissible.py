"""Admissible mappings a -> T_a into semilinear maps of L^2.

A mapping is admissible when it is additive in a and every T_a with a != 0
is irreducible. Three shapes carry closed-form admissibility conditions:

    trivial  T_a = a T                         (T irreducible)
    diag     M_a = [[0, a alpha], [a^tau, 0]]  (alpha not a d-th power)
    triang   M_a = [[0, a alpha], [a^(sigma^2), a^sigma beta]]
                                                (X^(sigma+1) - beta X - alpha rootless)

A fourth shape, ``composed``, applies P(u) = u^sigma - eta u entrywise to the
negated diag matrices. It appears when a Construction 1 semifield with
sigma^2 = id is rewritten as a Construction 2 semifield.

Usage:
    from chuk_semifield.admissible import diag_family, is_admissible

    F = diag_family(L, k=0, l=1, alpha=4)
    verdict = is_admissible(F)
    verdict.admissible
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from chuk_semifield.config import get_settings
from chuk_semifield.errors import ConsistencyError, ParameterError
from chuk_semifield.gf import FieldCtx, admissible_degree
from chuk_semifield.semilinear import SemilinearMap
from chuk_semifield.types import FLAG_TRIVIAL_EQUIVALENT, FamilyVariant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissibleFamily:
    """a -> T_a with common automorphism sigma: x -> x^(p^k)."""

    ctx: FieldCtx
    k: int
    variant: FamilyVariant
    T: SemilinearMap | None = None
    l: int = 0
    alpha: int = 0
    beta: int = 0
    eta: int = 0
    flags: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % self.ctx.m)
        object.__setattr__(self, "l", self.l % self.ctx.m)

    def matrices(self, a: int | np.ndarray) -> np.ndarray:
        """Matrices M_a, shape (..., 2, 2), vectorized over a."""
        ctx = self.ctx
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape + (2, 2), dtype=np.int64)
        if self.variant == FamilyVariant.TRIVIAL:
            assert self.T is not None
            out[...] = ctx.mul(a[..., None, None], self.T.M)
        elif self.variant == FamilyVariant.DIAG:
            out[..., 0, 1] = ctx.mul(a, self.alpha)
            out[..., 1, 0] = ctx.frob(a, self.l)
        elif self.variant == FamilyVariant.TRIANG:
            out[..., 0, 1] = ctx.mul(a, self.alpha)
            out[..., 1, 0] = ctx.frob(a, 2 * self.k)
            out[..., 1, 1] = ctx.mul(ctx.frob(a, self.k), self.beta)
        else:
            out[..., 0, 1] = self._p_map(ctx.neg(ctx.mul(a, self.alpha)))
            out[..., 1, 0] = self._p_map(ctx.neg(ctx.frob(a, self.l)))
        return out

    def _p_map(self, u: Any) -> Any:
        ctx = self.ctx
        return ctx.sub(ctx.frob(u, self.k), ctx.mul(self.eta, u))

    def eval_at(self, a: int) -> SemilinearMap:
        return SemilinearMap.from_rows(self.ctx, self.matrices(int(a)), self.k)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"variant": self.variant.value, "k": self.k}
        if self.variant == FamilyVariant.TRIVIAL:
            assert self.T is not None
            out["T"] = self.T.to_dict()
        elif self.variant == FamilyVariant.TRIANG:
            out.update(alpha=self.alpha, beta=self.beta)
        else:
            out.update(l=self.l, alpha=self.alpha)
            if self.variant == FamilyVariant.COMPOSED:
                out["eta"] = self.eta
        if self.flags:
            out["flags"] = list(self.flags)
        return out


# ============================================================================
# Constructors
# ============================================================================


def trivial_family(T: SemilinearMap) -> AdmissibleFamily:
    """a -> a T for a fixed irreducible T."""
    if T.d != 2:
        raise ParameterError(f"trivial family needs a map of L^2, got d={T.d}")
    if not (T.is_invertible and T.is_irreducible_oracle()):
        raise ParameterError(f"T = {T.to_dict()} is reducible")
    return AdmissibleFamily(T.ctx, T.k, FamilyVariant.TRIVIAL, T=T)


def diag_family(ctx: FieldCtx, k: int, l: int, alpha: int) -> AdmissibleFamily:
    flags: tuple[str, ...] = ()
    if l % ctx.m == 0:
        logger.warning("diag family with tau = id is a trivial family in disguise")
        flags = (FLAG_TRIVIAL_EQUIVALENT,)
    return AdmissibleFamily(ctx, k, FamilyVariant.DIAG, l=l, alpha=int(alpha), flags=flags)


def triang_family(ctx: FieldCtx, k: int, alpha: int, beta: int) -> AdmissibleFamily:
    return AdmissibleFamily(ctx, k, FamilyVariant.TRIANG, alpha=int(alpha), beta=int(beta))


def composed_family(ctx: FieldCtx, k: int, l: int, alpha: int, eta: int) -> AdmissibleFamily:
    """Entrywise P(u) = u^sigma - eta u applied to the negated diag matrices."""
    return AdmissibleFamily(ctx, k, FamilyVariant.COMPOSED, l=l, alpha=int(alpha), eta=int(eta))


# ============================================================================
# Admissibility
# ============================================================================


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Closed-form verdict next to the exhaustive one, when either ran."""

    admissible: bool
    reason: str
    closed_form: bool | None = None
    oracle: bool | None = None
    witness: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "admissible": self.admissible,
            "reason": self.reason,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "witness": self.witness,
        }


def _closed_form(F: AdmissibleFamily) -> tuple[bool | None, str]:
    ctx = F.ctx
    if F.variant == FamilyVariant.TRIVIAL:
        return True, "T is irreducible"
    if F.variant == FamilyVariant.TRIANG:
        T = SemilinearMap.from_rows(ctx, [[0, F.alpha], [1, F.beta]], F.k)
        ok = T.is_irreducible_criterion()
        return ok, "X^(sigma+1) - beta X - alpha " + ("has no root" if ok else "has a root")

    d = admissible_degree(ctx.p, F.k, F.l, ctx.m)
    if F.alpha == 0:
        diag_ok, reason = False, "alpha = 0"
    elif d == 1:
        diag_ok, reason = False, "every element is a d-th power (d = 1)"
    else:
        diag_ok = not ctx.is_dth_power(F.alpha, d)
        reason = f"alpha {'is not' if diag_ok else 'is'} a {d}-th power"
    if F.variant == FamilyVariant.DIAG:
        return diag_ok, reason

    # composed: sigma^2 = id gives a sufficient condition; N(eta) = 1 makes P
    # singular, so some T_a has a zero entry off the diagonal
    if (2 * F.k) % ctx.m:
        return None, "no closed form for sigma^2 != id"
    if ctx.norm(F.eta, F.k) == 1:
        return False, "N(eta) = 1"
    if diag_ok:
        return True, reason + ", N(eta) != 1"
    return None, reason + "; no closed form decides the composed shape"


def _member_reducible(T: SemilinearMap) -> bool:
    return not T.is_invertible or not T.is_irreducible_oracle()


def oracle_witness(F: AdmissibleFamily) -> int | None:
    """First a != 0 with T_a reducible, or None."""
    for a in F.ctx.nonzero():
        if _member_reducible(F.eval_at(int(a))):
            return int(a)
    return None


def is_additive(F: AdmissibleFamily) -> bool:
    """M_a + M_b == M_(a+b) over all pairs."""
    ctx = F.ctx
    a = ctx.elements()[:, None]
    b = ctx.elements()[None, :]
    lhs = ctx.add(F.matrices(a), F.matrices(b))
    rhs = F.matrices(ctx.add(a, b))
    return bool(np.array_equal(lhs, rhs)) and not np.any(F.matrices(0))


def is_admissible(F: AdmissibleFamily, oracle: bool | None = None) -> AdmissibilityVerdict:
    """Closed-form condition, cross-checked exhaustively on small fields.

    ``oracle=None`` runs the exhaustive check when |L| <= oracle_limit.
    The exhaustive check also confirms a -> M_a is additive. Disagreement or a
    non-additive mapping raises ConsistencyError.
    """
    closed, reason = _closed_form(F)
    run_oracle = F.ctx.order <= get_settings().oracle_limit if oracle is None else oracle
    if closed is None and not run_oracle:
        raise ParameterError(f"cannot decide admissibility of {F.to_dict()}: {reason}")

    oracle_ok: bool | None = None
    witness: int | None = None
    if run_oracle:
        if not is_additive(F):
            raise ConsistencyError(f"family {F.to_dict()} is not additive in a")
        witness = oracle_witness(F)
        oracle_ok = witness is None
        if closed is not None and closed != oracle_ok:
            raise ConsistencyError(
                f"admissibility of {F.to_dict()}: closed form says {closed}, "
                f"exhaustive scan says {oracle_ok} (witness a={witness})"
            )
    verdict = closed if closed is not None else oracle_ok
    assert verdict is not None
    if closed is None:
        reason = "exhaustive scan " + ("passed" if verdict else f"found reducible T_{witness}")
    logger.debug("admissibility of %s: %s (%s)", F.variant.value, verdict, reason)
    return AdmissibilityVerdict(verdict, reason, closed, oracle_ok, witness)


def require_admissible(F: AdmissibleFamily) -> None:
    verdict = is_admissible(F)
    if not verdict.admissible:
        raise ParameterError(f"family {F.to_dict()} is not admissible: {verdict.reason}")
