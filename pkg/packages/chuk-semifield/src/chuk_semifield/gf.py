"""Arithmetic in L = GF(p^m).

Elements are plain integers: the polynomial sum c_i x^i (0 <= c_i < p) is
encoded as sum c_i p^i. All heavy lifting is delegated to ``galois``; this
module fixes the modulus, the encoding and the Frobenius/norm conventions
used everywhere else.

Usage:
    from chuk_semifield.gf import field_new

    L = field_new(3, 2)
    L.mul(4, 4)
    L.norm(4, k=1)
    L.power_class_index(4, 2)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import galois
import numpy as np

from chuk_semifield.config import get_settings
from chuk_semifield.errors import FieldError
from chuk_semifield.types import (
    MAX_DEGREE,
    MAX_ORDER,
    MAX_TABLE_DEGREE,
    SUPPORTED_PRIMES,
    ArithOp,
    GcdKind,
)

logger = logging.getLogger(__name__)

IntLike = int | np.ndarray


def _out(arr: Any) -> Any:
    """FieldArray -> int (0-d) or int64 ndarray."""
    plain = np.asarray(arr.view(np.ndarray), dtype=np.int64)
    if plain.ndim == 0:
        return int(plain)
    return plain


@dataclass(frozen=True)
class Frob:
    """The automorphism x -> x^(p^k) of GF(p^m)."""

    k: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % self.m)

    def then(self, other: Frob) -> Frob:
        """Composition: exponents add mod m."""
        return Frob(self.k + other.k, self.m)

    def inverse(self) -> Frob:
        return Frob(self.m - self.k, self.m)

    @property
    def is_identity(self) -> bool:
        return self.k == 0


class FieldCtx:
    """The field GF(p^m) with a fixed modulus and integer element encoding.

    Immutable after construction and safe to share between threads.
    """

    __slots__ = ("p", "m", "order", "modulus", "GF", "generator", "_exp", "_log", "_powers")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]) -> None:
        self.p = p
        self.m = m
        self.order = p**m
        # ascending coefficients c_0 .. c_m
        self.modulus = modulus
        if m == 1:
            self.GF = galois.GF(p)
        else:
            poly = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
            self.GF = galois.GF(p**m, irreducible_poly=poly)
        self.generator = int(self.GF.primitive_element)
        self._powers = np.array([p**a for a in range(m)], dtype=np.int64)
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        if self.order <= get_settings().eager_table_limit:
            exps = self.GF(self.generator) ** np.arange(self.order - 1)
            self._exp = np.atleast_1d(_out(exps))
            log = np.full(self.order, -1, dtype=np.int64)
            log[self._exp] = np.arange(self.order - 1)
            self._log = log

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # ------------------------------------------------------------------ #
    # Conversion
    # ------------------------------------------------------------------ #

    def el(self, x: IntLike) -> Any:
        """Integer encoding -> galois FieldArray."""
        arr = np.asarray(x, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise FieldError(f"element out of range for GF({self.p}^{self.m}): {x}")
        return self.GF(arr)

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.order, dtype=np.int64)

    def digits(self, x: IntLike) -> np.ndarray:
        """Coefficient vectors over F_p, shape (..., m)."""
        arr = np.asarray(x, dtype=np.int64)
        return (arr[..., None] // self._powers) % self.p

    def from_digits(self, d: np.ndarray) -> Any:
        total = (np.asarray(d, dtype=np.int64) % self.p) @ self._powers
        return int(total) if np.ndim(total) == 0 else total

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # ------------------------------------------------------------------ #
    # Arithmetic
    # ------------------------------------------------------------------ #

    def add(self, x: IntLike, y: IntLike) -> Any:
        return _out(self.el(x) + self.el(y))

    def sub(self, x: IntLike, y: IntLike) -> Any:
        return _out(self.el(x) - self.el(y))

    def neg(self, x: IntLike) -> Any:
        return _out(-self.el(x))

    def mul(self, x: IntLike, y: IntLike) -> Any:
        return _out(self.el(x) * self.el(y))

    def inv(self, x: IntLike) -> Any:
        arr = np.asarray(x)
        if np.any(arr == 0):
            raise FieldError("inversion of zero")
        return _out(self.el(x) ** -1)

    def div(self, x: IntLike, y: IntLike) -> Any:
        return self.mul(x, self.inv(y))

    def power(self, x: IntLike, e: int) -> Any:
        arr = np.asarray(x)
        if e < 0 and np.any(arr == 0):
            raise FieldError("negative power of zero")
        if e < 0:
            return _out(self.el(x) ** (e % (self.order - 1)))
        return _out(self.el(x) ** e)

    def arith(self, op: ArithOp | str, *operands: IntLike) -> Any:
        """Dispatch by operation name."""
        op = ArithOp(op)
        if op == ArithOp.ADD:
            return self.add(*operands)
        if op == ArithOp.SUB:
            return self.sub(*operands)
        if op == ArithOp.MUL:
            return self.mul(*operands)
        if op == ArithOp.INV:
            return self.inv(*operands)
        if op == ArithOp.NEG:
            return self.neg(*operands)
        base, exponent = operands
        return self.power(base, int(exponent))

    # ------------------------------------------------------------------ #
    # Automorphisms, norm, trace
    # ------------------------------------------------------------------ #

    def frob(self, x: IntLike, k: int) -> Any:
        """x -> x^(p^k); k is taken mod m so negative k gives the inverse."""
        return _out(self.el(x) ** (self.p ** (k % self.m)))

    def norm(self, x: IntLike, k: int) -> Any:
        """Norm from L onto the fixed field of x -> x^(p^k)."""
        t = math.gcd(k % self.m, self.m)
        exponent = (self.order - 1) // (self.p**t - 1)
        return _out(self.el(x) ** exponent)

    def trace(self, x: IntLike) -> Any:
        """Absolute trace into F_p."""
        if self.m == 1:
            return _out(self.el(x))
        return _out(self.el(x).field_trace())

    def fixed_field(self, k: int) -> np.ndarray:
        elems = self.elements()
        return elems[self.frob(elems, k) == elems]

    # ------------------------------------------------------------------ #
    # Logs and power classes
    # ------------------------------------------------------------------ #

    def log(self, x: IntLike) -> Any:
        arr = np.asarray(x, dtype=np.int64)
        if np.any(arr == 0):
            raise FieldError("discrete log of zero")
        if self._log is not None:
            out = self._log[arr]
            return int(out) if out.ndim == 0 else out
        return _out(self.el(arr).log(self.GF(self.generator)))

    def power_class_index(self, x: IntLike, d: int) -> Any:
        """Coset index of x in L* / (d-th powers); 0 means x is a d-th power."""
        if (self.order - 1) % d:
            raise FieldError(f"{d} does not divide {self.order - 1}")
        logs = self.log(x)
        return logs % d

    def is_dth_power(self, x: IntLike, d: int) -> bool:
        return bool(self.power_class_index(x, math.gcd(d, self.order - 1)) == 0)

    def smallest_non_power(self, d: int) -> int:
        """Smallest encoded element outside the d-th powers."""
        d = math.gcd(d, self.order - 1)
        if d == 1:
            raise FieldError(f"every element of GF({self.p}^{self.m}) is a {d}-th power")
        idx = self.power_class_index(self.nonzero(), d)
        return int(self.nonzero()[np.argmax(idx != 0)])

    def smallest_nonsquare(self) -> int:
        return self.smallest_non_power(2)

    # ------------------------------------------------------------------ #
    # F_p-linear maps of L
    # ------------------------------------------------------------------ #

    def basis(self) -> np.ndarray:
        """Polynomial basis 1, x, ..., x^(m-1) as encoded integers."""
        return self._powers.copy()

    def linear_matrix(self, images: IntLike) -> np.ndarray:
        """Row-convention matrix of an F_p-linear map given basis images."""
        return self.digits(np.asarray(images, dtype=np.int64))

    def mul_matrix(self, c: int) -> np.ndarray:
        """Matrix of x -> c x."""
        return self.linear_matrix(self.mul(c, self.basis()))

    def frob_matrix(self, k: int) -> np.ndarray:
        """Matrix of x -> x^(p^k)."""
        return self.linear_matrix(self.frob(self.basis(), k))

    def trace_gram(self) -> np.ndarray:
        """Gram matrix Tr(b_a b_b) of the polynomial basis."""
        b = self.basis()
        return np.asarray(self.trace(self.mul(b[:, None], b[None, :])), dtype=np.int64)


# ============================================================================
# Construction
# ============================================================================


def _check_bounds(p: int, m: int) -> None:
    if not galois.is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if not 1 <= m <= MAX_DEGREE:
        raise FieldError(f"extension degree must satisfy 1 <= m <= {MAX_DEGREE}, got {m}")
    if p**m > MAX_ORDER:
        raise FieldError(f"p^m = {p**m} exceeds 2^32")


@lru_cache(maxsize=64)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(p, m, modulus)


def field_new(p: int, m: int, modulus: list[int] | tuple[int, ...] | None = None) -> FieldCtx:
    """Field context with the Conway modulus, or an explicit irreducible one.

    Args:
        p: characteristic
        m: extension degree
        modulus: coefficients lowest degree first, monic of degree m. Without
            it, (p, m) must lie in the supported table.

    Returns:
        FieldCtx for GF(p^m)

    Raises:
        FieldError: (p, m) is unsupported or the modulus is invalid
    """
    _check_bounds(p, m)
    if modulus is None:
        if p not in SUPPORTED_PRIMES or m > MAX_TABLE_DEGREE:
            raise FieldError(f"no modulus table entry for GF({p}^{m})")
        if m == 1:
            coeffs: tuple[int, ...] = (p - 1, 1)  # x - 1, prime field
        else:
            conway = galois.conway_poly(p, m)
            coeffs = tuple(int(c) for c in reversed(conway.coeffs))
        return _field_cached(p, m, coeffs)

    coeffs = tuple(int(c) % p for c in modulus)
    if len(coeffs) != m + 1 or coeffs[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {m}: {list(modulus)}")
    poly = galois.Poly(list(reversed(coeffs)), field=galois.GF(p))
    if not poly.is_irreducible():
        raise FieldError(f"modulus {poly} is reducible over F_{p}")
    return _field_cached(p, m, coeffs)


# ============================================================================
# Integer gcd facts
# ============================================================================


@dataclass(frozen=True)
class GcdReport:
    """Euclid value of gcd(p^k±1, p^l±1) next to the lemma's printed case."""

    value: int
    predicted: int
    case: str
    agrees: bool


def gcd_formula(p: int, k: int, l: int, kind: GcdKind | str) -> GcdReport:
    """Integer gcd by Euclid, compared with the closed-form case split.

    For plus-minus with l/t even the printed case reads p^t - 1; Euclid gives
    p^t + 1. The Euclid value is always the one returned.
    """
    if k < 1 or l < 1:
        raise FieldError("gcd facts need k, l >= 1")
    kind = GcdKind(kind)
    t = math.gcd(k, l)
    if kind == GcdKind.MINUS_MINUS:
        value = math.gcd(p**k - 1, p**l - 1)
        predicted, case = p**t - 1, "always"
    elif kind == GcdKind.PLUS_MINUS:
        value = math.gcd(p**k + 1, p**l - 1)
        if (l // t) % 2 == 0:
            predicted, case = p**t - 1, "l/t even"
        elif p > 2:
            predicted, case = 2, "l/t odd, p>2"
        else:
            predicted, case = 1, "l/t odd, p=2"
    else:
        value = math.gcd(p**k + 1, p**l + 1)
        if (l // t) % 2 == 1 and (k // t) % 2 == 1:
            predicted, case = p**t + 1, "l/t odd and k/t odd"
        elif p > 2:
            predicted, case = 2, "l/t even or k/t even, p>2"
        else:
            predicted, case = 1, "l/t even or k/t even, p=2"
    report = GcdReport(value=value, predicted=predicted, case=case, agrees=value == predicted)
    if not report.agrees:
        logger.warning(
            "gcd lemma case %r predicts %d for (p=%d, k=%d, l=%d, %s); Euclid gives %d",
            case,
            predicted,
            p,
            k,
            l,
            kind.value,
            value,
        )
    return report


def admissible_degree(p: int, k: int, l: int, m: int) -> int:
    """d = gcd(p^k + 1, p^l - 1, p^m - 1), with gcd(x, 0) = x for l = 0."""
    return math.gcd(math.gcd(p**k + 1, p**l - 1), p**m - 1)
