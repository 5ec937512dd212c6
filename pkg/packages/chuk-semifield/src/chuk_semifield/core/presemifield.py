"""Presemifields stored as F_p structure constants.

A presemifield of order p^n is the array C of shape (n, n, n) with
C[i, j, :] = e_i o e_j. Vectors are row vectors of F_p digits and

    x o y = x R_y,    R_y = sum_j y_j C[:, j, :]
    x o y = y L_x,    L_x = sum_i x_i C[i, :, :]

Elements are also addressed by integer index: the digits of x read base p,
which for L-coordinates is x_0 + q x_1 + q^2 x_2 + ...

Usage:
    from chuk_semifield.core.presemifield import PreSemifield

    S = PreSemifield.from_multiplication(L, lambda x, y: ..., d=2)
    S.verify_axioms().ok
    S.dual().is_commutative()
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from chuk_semifield.config import get_settings
from chuk_semifield.errors import BiadditivityError, ParameterError
from chuk_semifield.gf import FieldCtx
from chuk_semifield.linalg import batch_rank, inverse_mod_p, left_null_space_mod_p
from chuk_semifield.semilinear import digits_to_vectors, vector_basis, vectors_to_digits
from chuk_semifield.types import ConstructionKind

logger = logging.getLogger(__name__)

# (N, d) x (N, d) -> (N, d), elements of L encoded as ints
Multiplication = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the zero-divisor scan."""

    ok: bool
    checked: int
    witness: tuple[int, int] | None = None
    side: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "checked": self.checked, "witness": self.witness, "side": self.side}

    def summary(self) -> str:
        if self.ok:
            return f"no zero divisors ({self.checked} multiplication maps checked)"
        assert self.witness is not None
        x, y = self.witness
        return f"zero divisor: x={x}, y={y} ({self.side} multiplication singular)"


@dataclass(frozen=True, eq=False)
class PreSemifield:
    """Bi-additive multiplication on F_p^n, n = d*m, with provenance metadata."""

    ctx: FieldCtx
    d: int
    C: np.ndarray
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        C = np.asarray(self.C, dtype=np.int64) % self.ctx.p
        n = self.d * self.ctx.m
        if C.shape != (n, n, n):
            raise ParameterError(f"structure constants must have shape {(n, n, n)}, got {C.shape}")
        C.setflags(write=False)
        object.__setattr__(self, "C", C)

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #

    @classmethod
    def from_multiplication(
        cls,
        ctx: FieldCtx,
        mult: Multiplication,
        d: int = 2,
        metadata: dict[str, Any] | None = None,
        samples: int | None = None,
    ) -> PreSemifield:
        """Tabulate mult on basis pairs, then spot-check bi-additivity."""
        basis = vector_basis(ctx, d)
        n = basis.shape[0]
        xs = np.repeat(basis, n, axis=0)
        ys = np.tile(basis, (n, 1))
        products = np.asarray(mult(xs, ys), dtype=np.int64).reshape(n * n, d)
        C = vectors_to_digits(ctx, products).reshape(n, n, n)
        S = cls(ctx, d, C, dict(metadata or {}))
        S._spot_check(mult, get_settings().spot_check_samples if samples is None else samples)
        return S

    def _spot_check(self, mult: Multiplication, samples: int) -> None:
        if samples <= 0:
            return
        rng = np.random.default_rng(get_settings().seed)
        xd = rng.integers(0, self.p, size=(samples, self.n))
        yd = rng.integers(0, self.p, size=(samples, self.n))
        direct = vectors_to_digits(
            self.ctx,
            mult(digits_to_vectors(self.ctx, xd), digits_to_vectors(self.ctx, yd)),
        )
        tabulated = self.multiply_digits(xd, yd)
        bad = np.nonzero(np.any(direct != tabulated, axis=1))[0]
        if bad.size:
            i = int(bad[0])
            raise BiadditivityError(
                f"multiplication is not bi-additive: x={self.index_of(xd[i])}, "
                f"y={self.index_of(yd[i])} differs from the basis expansion"
            )

    def derive(self, C: np.ndarray, op: str, **extra: Any) -> PreSemifield:
        meta = {"construction": ConstructionKind.DERIVED.value, "op": op, "source": self.label}
        meta.update(extra)
        return PreSemifield(self.ctx, self.d, C, meta)

    # ------------------------------------------------------------------ #
    # Shape
    # ------------------------------------------------------------------ #

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def n(self) -> int:
        return self.d * self.ctx.m

    @property
    def order(self) -> int:
        return int(self.p**self.n)

    @property
    def label(self) -> str:
        meta = self.metadata
        if "family" in meta:
            return str(meta["family"])
        if meta.get("construction") == ConstructionKind.DERIVED.value:
            return f"{meta.get('op')}({meta.get('source')})"
        return str(meta.get("construction", "presemifield"))

    def digits_of(self, index: int | np.ndarray) -> np.ndarray:
        idx = np.asarray(index, dtype=np.int64)
        return (idx[..., None] // self.p ** np.arange(self.n, dtype=np.int64)) % self.p

    def index_of(self, digits: np.ndarray) -> Any:
        out = np.asarray(digits, dtype=np.int64) @ (self.p ** np.arange(self.n, dtype=np.int64))
        return int(out) if np.ndim(out) == 0 else out

    def all_digits(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        stop = self.order if stop is None else stop
        return self.digits_of(np.arange(start, stop, dtype=np.int64))

    def index_chunks(self, chunk: int | None = None) -> Iterator[tuple[int, int]]:
        chunk = chunk or get_settings().search_chunk
        for start in range(0, self.order, chunk):
            yield start, min(start + chunk, self.order)

    # ------------------------------------------------------------------ #
    # Multiplication
    # ------------------------------------------------------------------ #

    def multiply_digits(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("...i,...j,ijk->...k", x, y, self.C) % self.p

    def multiply(self, x: np.ndarray | list[int], y: np.ndarray | list[int]) -> np.ndarray:
        """x o y for L-coordinate vectors (last axis of length d)."""
        xd = vectors_to_digits(self.ctx, np.asarray(x, dtype=np.int64))
        yd = vectors_to_digits(self.ctx, np.asarray(y, dtype=np.int64))
        return digits_to_vectors(self.ctx, self.multiply_digits(xd, yd))

    def right_matrix(self, y: np.ndarray) -> np.ndarray:
        """R_y for digit vector(s) y, shape (..., n, n)."""
        return np.einsum("...j,ijk->...ik", y, self.C) % self.p

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """L_x for digit vector(s) x, shape (..., n, n)."""
        return np.einsum("...i,ijk->...jk", x, self.C) % self.p

    def spread_basis(self) -> np.ndarray:
        """R_{e_j} for j = 0..n-1, shape (n, n, n)."""
        return np.ascontiguousarray(self.C.transpose(1, 0, 2))

    # ------------------------------------------------------------------ #
    # Axioms
    # ------------------------------------------------------------------ #

    def _first_singular(self, side: str) -> tuple[int, int] | None:
        matrices = self.right_matrix if side == "right" else self.left_matrix
        for start, stop in self.index_chunks():
            start = max(start, 1)
            if start >= stop:
                continue
            mats = matrices(self.all_digits(start, stop))
            ranks = batch_rank(mats, self.p)
            bad = np.nonzero(ranks < self.n)[0]
            if bad.size:
                fixed = start + int(bad[0])
                kernel = left_null_space_mod_p(mats[bad[0]], self.p)[0]
                other = self.index_of(kernel)
                return (other, fixed) if side == "right" else (fixed, other)
        return None

    def verify_axioms(self) -> AxiomReport:
        """Every R_y (y != 0) and every L_x (x != 0) has full rank."""
        for side in ("right", "left"):
            witness = self._first_singular(side)
            if witness is not None:
                logger.info("%s: zero divisor %s", self.label, witness)
                return AxiomReport(False, 2 * (self.order - 1), witness, side)
        return AxiomReport(True, 2 * (self.order - 1))

    def identity_index(self) -> int | None:
        """Index of a two-sided identity, if there is one."""
        eye = np.eye(self.n, dtype=np.int64)
        # e is an identity iff R_e = I and L_e = I
        for start, stop in self.index_chunks():
            digits = self.all_digits(start, stop)
            right = np.all(self.right_matrix(digits) == eye, axis=(1, 2))
            left = np.all(self.left_matrix(digits) == eye, axis=(1, 2))
            hits = np.nonzero(right & left)[0]
            if hits.size:
                return start + int(hits[0])
        return None

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.C, self.C.transpose(1, 0, 2)))

    def same_constants(self, other: PreSemifield) -> bool:
        return self.p == other.p and bool(np.array_equal(self.C, other.C))

    # ------------------------------------------------------------------ #
    # Isotopes
    # ------------------------------------------------------------------ #

    def isotope(
        self,
        out: np.ndarray | None = None,
        left: np.ndarray | None = None,
        right: np.ndarray | None = None,
        op: str = "isotope",
    ) -> PreSemifield:
        """x * y = ((x B) o (y C)) A with A = out, B = left, C = right."""
        eye = np.eye(self.n, dtype=np.int64)
        A = eye if out is None else np.asarray(out, dtype=np.int64)
        B = eye if left is None else np.asarray(left, dtype=np.int64)
        Cr = eye if right is None else np.asarray(right, dtype=np.int64)
        C = np.einsum("ia,jb,abk,kl->ijl", B, Cr, self.C, A) % self.p
        return self.derive(C, op)

    def dual(self) -> PreSemifield:
        """x * y = y o x."""
        return self.derive(self.C.transpose(1, 0, 2), "dual")

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "m": self.ctx.m,
            "d": self.d,
            "n": self.n,
            "modulus": list(self.ctx.modulus),
            "structure_constants": self.C.reshape(-1).tolist(),
            "metadata": self.metadata,
        }

    def __repr__(self) -> str:
        return f"PreSemifield({self.label!r}, order={self.p}^{self.n})"


@dataclass(frozen=True, eq=False)
class IsotopismTriple:
    """(N1, N2, N3) with (x o1 y) N1 = (x N2) o2 (y N3), row convention."""

    p: int
    N1: np.ndarray
    N2: np.ndarray
    N3: np.ndarray

    def __post_init__(self) -> None:
        for name in ("N1", "N2", "N3"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=np.int64) % self.p)

    @classmethod
    def identity(cls, p: int, n: int) -> IsotopismTriple:
        eye = np.eye(n, dtype=np.int64)
        return cls(p, eye, eye, eye)

    def then(self, other: IsotopismTriple) -> IsotopismTriple:
        """self: S1 -> S2 followed by other: S2 -> S3."""
        p = self.p
        return IsotopismTriple(
            p, self.N1 @ other.N1 % p, self.N2 @ other.N2 % p, self.N3 @ other.N3 % p
        )

    def inverse(self) -> IsotopismTriple:
        return IsotopismTriple(
            self.p,
            inverse_mod_p(self.N1, self.p),
            inverse_mod_p(self.N2, self.p),
            inverse_mod_p(self.N3, self.p),
        )

    def is_invertible(self) -> bool:
        n = self.N1.shape[0]
        ranks = batch_rank(np.stack([self.N1, self.N2, self.N3]), self.p)
        return bool(np.all(ranks == n))

    def to_dict(self) -> dict[str, Any]:
        return {"N1": self.N1.tolist(), "N2": self.N2.tolist(), "N3": self.N3.tolist()}
