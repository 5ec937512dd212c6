"""The two constructions over admissible mappings, and twisted cyclic semifields.

    construction1:  x o y = y0 x + eta T_y1(x) + det(M_y1)^(sigma^-1) T_y1^-1(x)
    construction2:  x o y = y0 x + T_y1(x)
    twisted_cyclic: x o y = sum_{i<d} y_i T^i(x) + eta y0^rho T^d(x)

For 2x2 matrices det(M)^(sigma^-1) T^-1(x) = adj(M)^(sigma^-1) x^(sigma^-1), so
the third term of construction1 never inverts anything and vanishes at
y1 = 0.

Usage:
    from chuk_semifield.admissible import diag_family
    from chuk_semifield.construct import construction1

    S = construction1(diag_family(L, k=1, l=1, alpha=4), eta=3)
    S.verify_axioms().ok
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from chuk_semifield.admissible import AdmissibleFamily, require_admissible
from chuk_semifield.config import get_settings
from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ConsistencyError, ParameterError
from chuk_semifield.gf import FieldCtx, _out
from chuk_semifield.linalg import batch_rank
from chuk_semifield.semilinear import SemilinearMap, vector_basis, vectors_to_digits
from chuk_semifield.types import FLAG_ETA_ZERO, FLAG_UNCHECKED, ConstructionKind

logger = logging.getLogger(__name__)


def apply_batched(ctx: FieldCtx, M: np.ndarray, X: np.ndarray, k: int) -> np.ndarray:
    """Row-wise M[i] X[i]^sigma for M of shape (N, d, d) and X of shape (N, d)."""
    twisted = ctx.el(X) ** (ctx.p ** (k % ctx.m))
    prod = ctx.el(M) * twisted[:, None, :]
    return np.asarray(_out(np.sum(prod, axis=-1)), dtype=np.int64).reshape(X.shape)


def adjugate(ctx: FieldCtx, M: np.ndarray) -> np.ndarray:
    """adj [[a, b], [c, d]] = [[d, -b], [-c, a]], batched."""
    out = np.empty_like(M)
    out[..., 0, 0] = M[..., 1, 1]
    out[..., 1, 1] = M[..., 0, 0]
    out[..., 0, 1] = ctx.neg(M[..., 0, 1])
    out[..., 1, 0] = ctx.neg(M[..., 1, 0])
    return out


def _scale_rows(ctx: FieldCtx, a: np.ndarray, X: np.ndarray) -> np.ndarray:
    return np.asarray(ctx.mul(np.asarray(a)[:, None], X), dtype=np.int64)


def _add(ctx: FieldCtx, *terms: np.ndarray) -> np.ndarray:
    total = terms[0]
    for term in terms[1:]:
        total = ctx.add(total, term)
    return np.asarray(total, dtype=np.int64)


def _check_eta_norm(ctx: FieldCtx, k: int, eta: int) -> None:
    if ctx.norm(eta, k) == 1:
        raise ParameterError(f"N_(L:K)(eta) = 1 for eta={eta}; need N(eta) != 1")


# ============================================================================
# Constructions over admissible mappings
# ============================================================================


def construction1(F: AdmissibleFamily, eta: int, check: bool = True) -> PreSemifield:
    """y0 x + eta T_y1(x) + det(M_y1)^(sigma^-1) T_y1^-1(x), with T_0 = T_0^-1 = 0.

    Args:
        F: admissible family a -> T_a
        eta: encoded element with N_(L:K)(eta) != 1; 0 is allowed and flagged
        check: require admissibility of F and the norm condition on eta

    Returns:
        The presemifield on L^2, its metadata recording F and eta

    Raises:
        ParameterError: F is not admissible or N(eta) = 1
    """
    ctx = F.ctx
    eta = int(eta)
    flags: list[str] = []
    if check:
        require_admissible(F)
        _check_eta_norm(ctx, F.k, eta)
    else:
        flags.append(FLAG_UNCHECKED)
    if eta == 0:
        flags.append(FLAG_ETA_ZERO)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        M = F.matrices(Y[:, 1])
        back = ctx.frob(adjugate(ctx, M), -F.k)
        return _add(
            ctx,
            _scale_rows(ctx, Y[:, 0], X),
            _scale_rows(ctx, np.full(len(X), eta), apply_batched(ctx, M, X, F.k)),
            apply_batched(ctx, np.asarray(back), X, -F.k),
        )

    meta = {
        "construction": ConstructionKind.C1.value,
        "admissible": F.to_dict(),
        "eta": eta,
        "flags": flags + list(F.flags),
    }
    return PreSemifield.from_multiplication(ctx, mult, d=2, metadata=meta)


def construction2(F: AdmissibleFamily, check: bool = True) -> PreSemifield:
    """y0 x + T_y1(x)."""
    ctx = F.ctx
    flags: list[str] = []
    if check:
        require_admissible(F)
    else:
        flags.append(FLAG_UNCHECKED)

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        M = F.matrices(Y[:, 1])
        return _add(ctx, _scale_rows(ctx, Y[:, 0], X), apply_batched(ctx, M, X, F.k))

    meta = {
        "construction": ConstructionKind.C2.value,
        "admissible": F.to_dict(),
        "flags": flags + list(F.flags),
    }
    return PreSemifield.from_multiplication(ctx, mult, d=2, metadata=meta)


# ============================================================================
# Twisted cyclic semifields
# ============================================================================


def _sign(ctx: FieldCtx, d: int, t: int) -> int:
    """(-1)^(d(t-1)) as an element of L."""
    return 1 if (d * (t - 1)) % 2 == 0 else int(ctx.neg(1))


def _sigma_order(ctx: FieldCtx, k: int) -> int:
    return ctx.m // math.gcd(k % ctx.m, ctx.m)


def _norm_between(ctx: FieldCtx, x: Any, big: int, small: int) -> Any:
    """N_{GF(p^big) : GF(p^small)} of x lying in GF(p^big)."""
    exponent = (ctx.p**big - 1) // (ctx.p**small - 1)
    return ctx.power(x, exponent)


def twisted_cyclic_condition(T: SemilinearMap, d: int, r: int, eta: int) -> bool:
    """N_(L:K')(eta) * N_(K:K')((-1)^(d(t-1)) N_(L:K)(det M_T)) != 1.

    rho: x -> x^(p^r) must fix a subfield K' of K = Fix(sigma).
    """
    ctx = T.ctx
    k_deg = math.gcd(T.k, ctx.m)
    kp_deg = math.gcd(r % ctx.m, ctx.m)
    if k_deg % kp_deg:
        raise ParameterError(
            f"Fix(rho) = GF(p^{kp_deg}) is not a subfield of Fix(sigma) = GF(p^{k_deg})"
        )
    t = _sigma_order(ctx, T.k)
    c = ctx.mul(_sign(ctx, d, t), ctx.norm(T.det(), T.k))
    lhs = ctx.mul(
        _norm_between(ctx, eta, ctx.m, kp_deg),
        _norm_between(ctx, c, k_deg, kp_deg),
    )
    return int(lhs) != 1


def _require_irreducible(T: SemilinearMap) -> None:
    if not T.is_invertible:
        raise ParameterError("T is singular")
    witness = T.find_invariant_subspace()
    if witness is not None:
        raise ParameterError(f"T is reducible: invariant subspace spanned by {witness.tolist()}")


def twisted_cyclic(
    T: SemilinearMap,
    d: int | None = None,
    r: int | None = None,
    eta: int = 0,
    check: bool = True,
) -> PreSemifield:
    """sum_{i<d} y_i T^i(x) + eta y0^rho T^d(x) on L^d, rho: x -> x^(p^r).

    ``r`` defaults to the exponent of sigma. eta = 0 gives a cyclic semifield.
    """
    ctx = T.ctx
    d = T.d if d is None else d
    if d != T.d:
        raise ParameterError(f"T acts on L^{T.d}, not L^{d}")
    if d > 3:
        raise ParameterError("twisted cyclic semifields supported for d <= 3")
    r = T.k if r is None else r % ctx.m
    eta = int(eta)
    flags: list[str] = []
    if check:
        _require_irreducible(T)
        if not twisted_cyclic_condition(T, d, r, eta):
            raise ParameterError(f"eta = {eta} violates the twisted cyclic norm condition")
    else:
        flags.append(FLAG_UNCHECKED)
    powers = [T.power(i) for i in range(d + 1)]

    def mult(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        terms = [_scale_rows(ctx, Y[:, i], powers[i].apply(X)) for i in range(d)]
        if eta:
            coeff = ctx.mul(eta, ctx.frob(Y[:, 0], r))
            terms.append(_scale_rows(ctx, coeff, powers[d].apply(X)))
        return _add(ctx, *terms)

    meta = {
        "construction": ConstructionKind.TWISTED_CYCLIC.value,
        "T": T.to_dict(),
        "d": d,
        "rho": r,
        "eta": eta,
        "flags": flags,
    }
    return PreSemifield.from_multiplication(ctx, mult, d=d, metadata=meta)


# ============================================================================
# Nonsingularity of F_y = sum_{i<=d} y_i T^i
# ============================================================================


@dataclass(frozen=True)
class NonsingularityVerdict:
    """Closed-form verdict with the rank verdict when it was computed."""

    criterion: bool
    brute_force: bool | None = None

    @property
    def nonsingular(self) -> bool:
        return self.criterion

    def to_dict(self) -> dict[str, Any]:
        return {"criterion": self.criterion, "brute_force": self.brute_force}


def criterion_verdicts(T: SemilinearMap, ys: np.ndarray) -> np.ndarray:
    """Closed-form nonsingularity of F_y for each row y = (y_0, ..., y_d)."""
    ctx = T.ctx
    ys = np.atleast_2d(np.asarray(ys, dtype=np.int64))
    d = ys.shape[1] - 1
    t = _sigma_order(ctx, T.k)
    bound = ctx.mul(_sign(ctx, d, t), ctx.norm(T.det(), T.k))
    yd = ys[:, d]
    out = np.ones(len(ys), dtype=bool)
    out[~ys.any(axis=1)] = False
    live = yd != 0
    if live.any():
        ratio = ctx.div(ys[live, 0], yd[live])
        out[live] = np.asarray(ctx.norm(ratio, T.k)) != bound
    return out


def fp_power_basis(T: SemilinearMap, d: int) -> np.ndarray:
    """B[i, a] = F_p matrix of x -> xi^a T^i(x), shape (d+1, m, n, n)."""
    ctx = T.ctx
    basis = vector_basis(ctx, T.d)
    images = [T.power(i).apply(basis) for i in range(d + 1)]
    out = np.stack(
        [
            np.stack([vectors_to_digits(ctx, ctx.mul(int(xi), img)) for xi in ctx.basis()])
            for img in images
        ]
    )
    return out


def brute_force_verdicts(T: SemilinearMap, ys: np.ndarray) -> np.ndarray:
    """Rank test of F_y for each row y = (y_0, ..., y_d)."""
    ctx = T.ctx
    ys = np.atleast_2d(np.asarray(ys, dtype=np.int64))
    d = ys.shape[1] - 1
    B = fp_power_basis(T, d)
    mats = np.einsum("yia,iarc->yrc", ctx.digits(ys), B) % ctx.p
    return batch_rank(mats, ctx.p) == T.d * ctx.m


def nonsingular_criterion(
    T: SemilinearMap, y: list[int] | np.ndarray, brute_force: bool | None = None
) -> NonsingularityVerdict:
    """F_y nonsingular iff y_d = 0 or N(y0/y_d) != (-1)^(d(t-1)) N(det M_T).

    The rank test also runs when p^(dm) <= brute_force_limit; a disagreement
    raises ConsistencyError.
    """
    ctx = T.ctx
    y = np.asarray(y, dtype=np.int64)
    if y.shape != (T.d + 1,):
        raise ParameterError(f"need d+1 = {T.d + 1} coefficients, got {y.shape}")
    criterion = bool(criterion_verdicts(T, y)[0])
    run = ctx.order**T.d <= get_settings().brute_force_limit if brute_force is None else brute_force
    rank_ok: bool | None = None
    if run:
        rank_ok = bool(brute_force_verdicts(T, y)[0])
        if rank_ok != criterion:
            raise ConsistencyError(
                f"nonsingularity of F_y for y={y.tolist()}: criterion {criterion}, rank {rank_ok}"
            )
    return NonsingularityVerdict(criterion, rank_ok)
