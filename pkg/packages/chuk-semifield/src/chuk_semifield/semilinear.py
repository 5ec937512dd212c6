"""Semilinear maps x -> M x^sigma on L^d and their irreducibility.

Vectors of L^d are int64 arrays whose last axis has length d. The F_p
coordinates of a vector list the digits of x_0, then x_1, and so on, so
basis vector c*m + a is the element p^a placed in component c.

Usage:
    from chuk_semifield.gf import field_new
    from chuk_semifield.semilinear import SemilinearMap

    L = field_new(2, 2)
    T = SemilinearMap.from_rows(L, [[0, 2], [1, 0]], k=1)
    T.apply([1, 2])
    T.is_irreducible_criterion()
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from chuk_semifield.errors import ParameterError
from chuk_semifield.gf import FieldCtx, _out

logger = logging.getLogger(__name__)


# ============================================================================
# Vector helpers
# ============================================================================


def vector_basis(ctx: FieldCtx, d: int) -> np.ndarray:
    """The n = d*m F_p-basis vectors of L^d, shape (n, d)."""
    n = d * ctx.m
    out = np.zeros((n, d), dtype=np.int64)
    for c in range(d):
        out[c * ctx.m : (c + 1) * ctx.m, c] = ctx.basis()
    return out


def vectors_to_digits(ctx: FieldCtx, vecs: np.ndarray) -> np.ndarray:
    """(..., d) elements -> (..., d*m) F_p coordinates."""
    digits = ctx.digits(np.asarray(vecs, dtype=np.int64))
    return digits.reshape(digits.shape[:-2] + (-1,))


def digits_to_vectors(ctx: FieldCtx, digits: np.ndarray) -> np.ndarray:
    """(..., d*m) F_p coordinates -> (..., d) elements."""
    digits = np.asarray(digits, dtype=np.int64)
    shaped = digits.reshape(digits.shape[:-1] + (-1, ctx.m))
    return np.asarray(ctx.from_digits(shaped), dtype=np.int64)


def all_vectors(ctx: FieldCtx, d: int) -> np.ndarray:
    """Every vector of L^d in encoding order, shape (q^d, d)."""
    grid = np.indices((ctx.order,) * d).reshape(d, -1).T
    return np.ascontiguousarray(grid[:, ::-1], dtype=np.int64)


def projective_points(ctx: FieldCtx, d: int) -> Iterator[np.ndarray]:
    """Normalized representatives: last nonzero coordinate equals 1.

    For d = 2 the order is (1, 0) first, then (z, 1) for z in encoding order.
    """
    for lead in range(d):
        for head in itertools.product(range(ctx.order), repeat=lead):
            v = np.zeros(d, dtype=np.int64)
            v[:lead] = head
            v[lead] = 1
            yield v


# ============================================================================
# Semilinear maps
# ============================================================================


@dataclass(frozen=True)
class SemilinearMap:
    """x -> M x^sigma with sigma: x -> x^(p^k), M a d x d matrix over L."""

    ctx: FieldCtx
    matrix: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % self.ctx.m)

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence[int]] | np.ndarray, k: int) -> SemilinearMap:
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ParameterError(f"semilinear matrix must be square, got shape {arr.shape}")
        ctx.el(arr)
        return cls(ctx, tuple(tuple(int(v) for v in row) for row in arr), k)

    @classmethod
    def identity(cls, ctx: FieldCtx, d: int = 2, k: int = 0) -> SemilinearMap:
        return cls.from_rows(ctx, np.eye(d, dtype=np.int64), k)

    @property
    def M(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    @property
    def d(self) -> int:
        return len(self.matrix)

    # ------------------------------------------------------------------ #
    # Algebra
    # ------------------------------------------------------------------ #

    def apply(self, vecs: Sequence[int] | np.ndarray) -> Any:
        """M (v_0^sigma, ..., v_{d-1}^sigma) for each vector on the last axis."""
        ctx = self.ctx
        arr = np.asarray(vecs, dtype=np.int64)
        flat = arr.reshape(-1, self.d)
        twisted = ctx.el(flat) ** (ctx.p**self.k)
        out = np.asarray(_out(twisted @ ctx.el(self.M).T), dtype=np.int64)
        return out.reshape(arr.shape)

    def compose(self, other: SemilinearMap) -> SemilinearMap:
        """self after other."""
        ctx = self.ctx
        twisted = ctx.el(other.M) ** (ctx.p**self.k)
        product = _out(ctx.el(self.M) @ twisted)
        return SemilinearMap.from_rows(ctx, product, self.k + other.k)

    def inverse(self) -> SemilinearMap:
        ctx = self.ctx
        inv = np.linalg.inv(ctx.el(self.M))
        back = (-self.k) % ctx.m
        return SemilinearMap.from_rows(ctx, ctx.frob(_out(inv), back), back)

    def power(self, i: int) -> SemilinearMap:
        if i < 0:
            return self.inverse().power(-i)
        result = SemilinearMap.identity(self.ctx, self.d)
        for _ in range(i):
            result = result.compose(self)
        return result

    def scaled(self, a: int) -> SemilinearMap:
        """The map a*T: matrix a*M, same automorphism."""
        return SemilinearMap.from_rows(self.ctx, self.ctx.mul(a, self.M), self.k)

    def det(self) -> int:
        return int(np.linalg.det(self.ctx.el(self.M)))

    @property
    def is_invertible(self) -> bool:
        return self.det() != 0

    def fp_matrix(self) -> np.ndarray:
        """Row-convention F_p matrix: row i is the image of basis vector i."""
        images = self.apply(vector_basis(self.ctx, self.d))
        return vectors_to_digits(self.ctx, images)

    def to_dict(self) -> dict[str, Any]:
        return {"M": [v for row in self.matrix for v in row], "sigma": self.k}

    # ------------------------------------------------------------------ #
    # Irreducibility
    # ------------------------------------------------------------------ #

    def companion_parameters(self) -> tuple[int, int]:
        """(alpha, beta) of a companion matrix [[0, alpha], [1, beta]]."""
        M = self.M
        if M.shape != (2, 2) or M[0, 0] != 0 or M[1, 0] != 1:
            raise ParameterError(f"expected companion form [[0, a], [1, b]], got {M.tolist()}")
        return int(M[0, 1]), int(M[1, 1])

    def is_irreducible_criterion(self) -> bool:
        """X^(p^k+1) - beta X - alpha has no root in L."""
        alpha, beta = self.companion_parameters()
        return not projective_polynomial_roots(self.ctx, self.k, alpha, beta).size

    def find_invariant_subspace(self) -> np.ndarray | None:
        """A basis (rows) of a proper nonzero invariant subspace, or None.

        Points are scanned first, then (d = 3) lines; the first hit in scan
        order is returned.
        """
        if self.d > 3:
            raise ParameterError("invariant-subspace search supports d <= 3")
        if not self.is_invertible:
            raise ParameterError("semilinear map must be invertible")
        ctx = self.ctx
        points = np.array(list(projective_points(ctx, self.d)), dtype=np.int64)
        images = self.apply(points)
        if self.d == 1:
            return None
        hits = np.nonzero(~_parallel_defect(ctx, points, images).any(axis=1))[0]
        if hits.size:
            return points[hits[0]][None, :]
        if self.d == 3:
            for u in points:
                plane = np.asarray(_out(ctx.el(u[None, :]).null_space()), dtype=np.int64)
                pairing = ctx.el(self.apply(plane)) @ ctx.el(u)
                if not np.any(np.asarray(_out(pairing))):
                    return plane
        return None

    def is_irreducible_oracle(self) -> bool:
        return self.find_invariant_subspace() is None


def _parallel_defect(ctx: FieldCtx, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """All 2x2 minors u_i v_j - u_j v_i; zero rows mark parallel pairs."""
    U, V = ctx.el(u), ctx.el(v)
    d = u.shape[-1]
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    minors = [U[:, i] * V[:, j] - U[:, j] * V[:, i] for i, j in pairs]
    return np.stack([np.asarray(_out(mn), dtype=np.int64).reshape(-1) for mn in minors], axis=1)


def projective_polynomial_roots(ctx: FieldCtx, k: int, alpha: int, beta: int) -> np.ndarray:
    """All X in L with X^(p^k+1) - beta X - alpha = 0."""
    xs = ctx.el(ctx.elements())
    values = xs ** (ctx.p ** (k % ctx.m) + 1) - ctx.el(beta) * xs - ctx.el(alpha)
    return ctx.elements()[np.asarray(_out(values)) == 0]


def find_irreducible(ctx: FieldCtx, d: int = 2, k: int = 1) -> SemilinearMap:
    """First irreducible companion-form map in encoding order."""
    if d == 2:
        for alpha, beta in itertools.product(ctx.nonzero(), ctx.elements()):
            T = SemilinearMap.from_rows(ctx, [[0, alpha], [1, beta]], k)
            if T.is_irreducible_criterion():
                return T
    elif d == 3:
        for a, b, c in itertools.product(ctx.nonzero(), ctx.elements(), ctx.elements()):
            T = SemilinearMap.from_rows(ctx, [[0, 0, a], [1, 0, b], [0, 1, c]], k)
            if T.is_irreducible_oracle():
                return T
    else:
        raise ParameterError("find_irreducible supports d in {2, 3}")
    raise ParameterError(f"no irreducible companion map for d={d}, k={k} over GF({ctx.p}^{ctx.m})")
