"""Isotopisms: verification on basis pairs and exhaustive search at tiny orders.

Two presemifields are isotopic iff their spread sets satisfy C2 = A C1 B for
invertible A, B. The search runs A over GL(n, p); with R0 = R_(e_0) fixed in
C1 and Q_j = R_j R0^-1, a candidate pair (A, S in C2) works iff every
A Q_j A^-1 S lies in C2, and then B = R0^-1 A^-1 S. The isotopism triple is

    (N1, N2, N3) = (B, A^-1, phi),   R2_(e_j phi) = A R1_(e_j) B

Usage:
    from chuk_semifield.equivalence.isotopy import brute_force_isotopic, verify_isotopism

    witness = brute_force_isotopic(S1, S2)
    if witness is not None:
        verify_isotopism(S1, S2, witness.triple)
"""

from __future__ import annotations

import functools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from chuk_semifield.config import get_settings
from chuk_semifield.core.presemifield import IsotopismTriple, PreSemifield
from chuk_semifield.core.spread import spread_set
from chuk_semifield.errors import ConsistencyError, ParameterError, SearchRefused
from chuk_semifield.linalg import (
    batch_inverse,
    batch_rank,
    coordinates_in_span,
    inverse_mod_p,
    matrices_from_indices,
    null_space_mod_p,
    rank_mod_p,
)

logger = logging.getLogger(__name__)


def verify_isotopism(S1: PreSemifield, S2: PreSemifield, triple: IsotopismTriple) -> bool:
    """(e_i o1 e_j) N1 == (e_i N2) o2 (e_j N3) for all basis pairs."""
    if S1.p != S2.p or S1.n != S2.n or S1.p != triple.p:
        return False
    if not triple.is_invertible():
        return False
    p = S1.p
    lhs = S1.C @ triple.N1 % p
    rhs = np.einsum("ia,jb,abk->ijk", triple.N2, triple.N3, S2.C) % p
    return bool(np.array_equal(lhs, rhs))


def compose_isotopisms(*triples: IsotopismTriple) -> IsotopismTriple:
    """S1 -> S2 -> ... chained left to right."""
    if not triples:
        raise ParameterError("compose_isotopisms needs at least one triple")
    return functools.reduce(lambda acc, nxt: acc.then(nxt), triples)


# ============================================================================
# Exhaustive search
# ============================================================================


@dataclass(frozen=True, eq=False)
class IsotopyWitness:
    """Spread-set witness C2 = A C1 B and the triple it induces."""

    A: np.ndarray
    B: np.ndarray
    triple: IsotopismTriple
    examined: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "A": self.A.tolist(),
            "B": self.B.tolist(),
            "triple": self.triple.to_dict(),
            "examined": self.examined,
        }


def _check_searchable(S1: PreSemifield, S2: PreSemifield, slow: bool) -> None:
    if S1.p != S2.p or S1.n != S2.n:
        raise ParameterError(f"orders differ: {S1.p}^{S1.n} vs {S2.p}^{S2.n}")
    settings = get_settings()
    if S1.order <= settings.isotopy_order_limit:
        return
    if slow and S1.order <= settings.slow_isotopy_order_limit:
        logger.warning("exhaustive isotopy search at order %d; this sweeps GL(%d, %d)", S1.order, S1.n, S1.p)
        return
    limit = settings.slow_isotopy_order_limit if slow else settings.isotopy_order_limit
    hint = "" if slow else f" (up to {settings.slow_isotopy_order_limit} with slow=True)"
    raise SearchRefused(f"isotopy search refused at order {S1.order}: limit is {limit}{hint}")


class _Search:
    """Shared, read-only state of one sweep."""

    def __init__(self, S1: PreSemifield, S2: PreSemifield) -> None:
        p, n = S1.p, S1.n
        self.p, self.n = p, n
        self.B1 = S1.spread_basis()
        self.B2 = S2.spread_basis()
        R0 = self.B1[0]
        if rank_mod_p(R0, p) < n:
            raise ParameterError(f"{S1.label} has a singular R_(e_0); not a presemifield")
        self.R0_inv = inverse_mod_p(R0, p)
        self.Q = np.einsum("jab,bc->jac", self.B1, self.R0_inv) % p
        self.members = spread_set(S2).members(1)
        # M in span(C2) iff H vec(M) = 0
        self.H = null_space_mod_p(self.B2.reshape(n, n * n), p)

    def scan(self, A: np.ndarray) -> tuple[int, int] | None:
        """First (a, s) with A[a] Q_j A[a]^-1 members[s] in C2 for all j."""
        p, n = self.p, self.n
        if A.shape[0] == 0:
            return None
        A_inv = batch_inverse(A, p)
        conj = np.einsum("cab,jbd,cde->cjae", A, self.Q, A_inv) % p
        prod = np.einsum("cjab,sbd->csjad", conj, self.members) % p
        flat = prod.reshape(prod.shape[:3] + (n * n,))
        if self.H.shape[0]:
            inside = np.all((flat @ self.H.T) % p == 0, axis=(-1, -2))
        else:
            inside = np.ones(flat.shape[:2], dtype=bool)
        hits = np.argwhere(inside)
        if not hits.size:
            return None
        a, s = hits[0]
        return int(a), int(s)

    def witness(self, A: np.ndarray, S: np.ndarray, examined: int) -> IsotopyWitness:
        p, n = self.p, self.n
        A_inv = inverse_mod_p(A, p)
        B = self.R0_inv @ A_inv @ S % p
        images = np.einsum("ab,jbc,cd->jad", A, self.B1, B) % p
        phi = coordinates_in_span(self.B2.reshape(n, n * n), images.reshape(n, n * n), p)
        triple = IsotopismTriple(p, B, A_inv, phi)
        return IsotopyWitness(A % p, B, triple, examined)


def _invertible_chunk(n: int, p: int, start: int, stop: int) -> np.ndarray:
    mats = matrices_from_indices(np.arange(start, stop, dtype=np.int64), n, p)
    return mats[batch_rank(mats, p) == n]


def brute_force_isotopic(
    S1: PreSemifield,
    S2: PreSemifield,
    slow: bool = False,
    workers: int | None = None,
) -> IsotopyWitness | None:
    """Search GL(n, p) for A with A C1 B = C2; None when no A works.

    The identity is tried first, then every matrix in base-p code order.

    Args:
        S1: source presemifield
        S2: target presemifield of the same order
        slow: allow orders up to slow_isotopy_order_limit
        workers: thread count, defaulting to the ``workers`` setting

    Returns:
        IsotopyWitness with the re-verified triple, or None

    Raises:
        ParameterError: the orders differ
        SearchRefused: the order exceeds the applicable limit
    """
    _check_searchable(S1, S2, slow)
    settings = get_settings()
    search = _Search(S1, S2)
    p, n = search.p, search.n

    eye = np.eye(n, dtype=np.int64)[None]
    hit = search.scan(eye)
    examined = 1
    if hit is not None:
        found = search.witness(eye[0], search.members[hit[1]], examined)
        return _verified(S1, S2, found)

    total = p ** (n * n)
    chunk = settings.search_chunk
    starts = range(0, total, chunk)
    pool_size = workers or settings.workers

    def run(start: int) -> tuple[np.ndarray, tuple[int, int] | None]:
        A = _invertible_chunk(n, p, start, min(start + chunk, total))
        return A, search.scan(A)

    def results() -> Any:
        if pool_size > 1:
            with ThreadPoolExecutor(max_workers=pool_size) as pool:
                yield from pool.map(run, starts)
        else:
            yield from map(run, starts)

    for A, hit in results():
        examined += A.shape[0]
        if hit is not None:
            a, s = hit
            found = search.witness(A[a], search.members[s], examined)
            logger.info("isotopy witness after %d matrices: %s ~ %s", examined, S1.label, S2.label)
            return _verified(S1, S2, found)
    logger.info("no isotopy between %s and %s (%d matrices)", S1.label, S2.label, examined)
    return None


def _verified(S1: PreSemifield, S2: PreSemifield, found: IsotopyWitness) -> IsotopyWitness:
    if not verify_isotopism(S1, S2, found.triple):
        raise ConsistencyError(f"isotopy witness for {S1.label} ~ {S2.label} fails re-verification")
    return found
