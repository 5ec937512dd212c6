"""Kaplansky's trick and the Knuth orbit.

Usage:
    from chuk_semifield.core.knuth import kaplansky, knuth_orbit

    unital, triple = kaplansky(S)
    [member.label for member in knuth_orbit(S)]
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from chuk_semifield.core.presemifield import IsotopismTriple, PreSemifield
from chuk_semifield.core.spread import spread_equal, transpose
from chuk_semifield.errors import ParameterError
from chuk_semifield.linalg import inverse_mod_p, rank_mod_p
from chuk_semifield.types import KNUTH_ORBIT_LABELS

logger = logging.getLogger(__name__)


def kaplansky(S: PreSemifield, e: int = 1) -> tuple[PreSemifield, IsotopismTriple]:
    """Unital semifield x * y = (x R_e^-1) o (y L_e^-1) with identity e o e.

    ``e`` is an element index; the default is the first basis vector. The
    returned triple (I, R_e, L_e) maps S onto the result.
    """
    if not 0 < e < S.order:
        raise ParameterError(f"kaplansky needs a nonzero element index, got {e}")
    digits = S.digits_of(e)
    R_e = S.right_matrix(digits)
    L_e = S.left_matrix(digits)
    if rank_mod_p(R_e, S.p) < S.n or rank_mod_p(L_e, S.p) < S.n:
        raise ParameterError(f"e={e} is a zero divisor of {S.label}")
    C = np.einsum(
        "ia,jb,abk->ijk", inverse_mod_p(R_e, S.p), inverse_mod_p(L_e, S.p), S.C
    )
    unit = S.index_of(S.multiply_digits(digits, digits))
    unital = S.derive(C, "kaplansky", e=e, identity=int(unit))
    triple = IsotopismTriple(S.p, np.eye(S.n, dtype=np.int64), R_e, L_e)
    return unital, triple


@dataclass(frozen=True)
class OrbitMember:
    label: str
    semifield: PreSemifield


def knuth_orbit(S: PreSemifield) -> list[OrbitMember]:
    """S, dual, transpose, transpose.dual, dual.transpose, dual.transpose.dual.

    ``a.b`` applies b first. Members whose spread set equals an earlier
    member's are dropped.
    """
    dual = S.dual()
    trans = transpose(S)
    trans_dual = transpose(dual)
    dual_trans = trans.dual()
    dual_trans_dual = trans_dual.dual()
    generated = (S, dual, trans, trans_dual, dual_trans, dual_trans_dual)

    members: list[OrbitMember] = []
    for label, member in zip(KNUTH_ORBIT_LABELS, generated, strict=True):
        if any(spread_equal(member, kept.semifield) for kept in members):
            continue
        members.append(OrbitMember(label, member))
    logger.info("Knuth orbit of %s: %d distinct spread sets", S.label, len(members))
    return members
