"""Left, middle and right nuclei.

Nuclei are computed on the unital semifield given by Kaplansky's trick.
Because the associator (x * y) * z - x * (y * z) is additive in each
argument, membership only has to be tested against basis pairs, which
turns each nucleus into the null space of one F_p matrix.

The spread-set oracle derives the right and middle nucleus orders from
{A : C A subset C} and {A : A C subset C} instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from chuk_semifield.core.knuth import kaplansky
from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ConsistencyError
from chuk_semifield.linalg import left_null_space_mod_p, null_space_mod_p, rank_mod_p

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NucleiTriple:
    left: int
    middle: int
    right: int

    @property
    def multiset(self) -> tuple[int, int, int]:
        a, b, c = sorted((self.left, self.middle, self.right))
        return (a, b, c)

    def to_dict(self) -> dict[str, Any]:
        return {"left": self.left, "middle": self.middle, "right": self.right}


def associator(S: PreSemifield) -> np.ndarray:
    """A[i, j, l, :] = (e_i * e_j) * e_l - e_i * (e_j * e_l)."""
    C = S.C
    lhs = np.einsum("ijk,klo->ijlo", C, C)
    rhs = np.einsum("jlk,iko->ijlo", C, C)
    return (lhs - rhs) % S.p


def _nucleus_basis(S: PreSemifield, position: int) -> np.ndarray:
    """Row basis of the nucleus at argument ``position`` (0 left, 1 middle, 2 right)."""
    A = np.moveaxis(associator(S), position, 0)
    return left_null_space_mod_p(A.reshape(S.n, -1), S.p)


def _check_field(S: PreSemifield, basis: np.ndarray, name: str) -> None:
    if basis.shape[0] == 0:
        raise ConsistencyError(f"{name} nucleus of {S.label} is empty")
    products = S.multiply_digits(basis[:, None, :], basis[None, :, :]).reshape(-1, S.n)
    rank = rank_mod_p(basis, S.p)
    if rank_mod_p(np.vstack([basis, products]), S.p) != rank:
        raise ConsistencyError(f"{name} nucleus of {S.label} is not closed under multiplication")
    unit = S.digits_of(S.metadata["identity"])
    if rank_mod_p(np.vstack([basis, unit]), S.p) != rank:
        raise ConsistencyError(f"{name} nucleus of {S.label} misses the identity")


def nucleus_bases(S: PreSemifield) -> tuple[PreSemifield, dict[str, np.ndarray]]:
    """Unital isotope of S and the F_p-bases of its three nuclei."""
    unital, _ = kaplansky(S)
    bases = {
        name: _nucleus_basis(unital, pos)
        for pos, name in enumerate(("left", "middle", "right"))
    }
    for name, basis in bases.items():
        _check_field(unital, basis, name)
    return unital, bases


def nuclei(S: PreSemifield) -> NucleiTriple:
    """Orders of the left, middle and right nucleus, from associator null spaces."""
    _, bases = nucleus_bases(S)
    orders = {name: int(S.p ** basis.shape[0]) for name, basis in bases.items()}
    logger.debug("nuclei of %s: %s", S.label, orders)
    return NucleiTriple(**orders)


# ============================================================================
# Spread-set characterization
# ============================================================================


def stabilizer_dimension(S: PreSemifield, side: str) -> int:
    """dim {A : R A in C for all R in C} (side='right') or A R (side='left')."""
    p, n = S.p, S.n
    basis = S.spread_basis()
    flat = basis.reshape(n, n * n)
    # h . vec(M) = 0 for all h in H  <=>  M in span(C)
    H = null_space_mod_p(flat, p)
    rows = []
    for R in basis:
        for h in H:
            h_mat = h.reshape(n, n)
            if side == "left":
                # vec(A R)[a, c] = sum_b A[a, b] R[b, c]
                coeff = h_mat @ R.T
            else:
                # vec(R A)[a, c] = sum_b R[a, b] A[b, c]
                coeff = R.T @ h_mat
            rows.append(coeff.reshape(-1) % p)
    if not rows:
        return n * n
    return n * n - rank_mod_p(np.array(rows, dtype=np.int64), p)


def right_nucleus_from_spread(S: PreSemifield) -> int:
    """Order of the right nucleus from {A : C A subset C} on the unital isotope."""
    unital, _ = kaplansky(S)
    return int(S.p ** stabilizer_dimension(unital, "right"))


def middle_nucleus_from_spread(S: PreSemifield) -> int:
    unital, _ = kaplansky(S)
    return int(S.p ** stabilizer_dimension(unital, "left"))


def nuclei_agree_with_spread(S: PreSemifield) -> bool:
    found = nuclei(S)
    return (
        found.right == right_nucleus_from_spread(S)
        and found.middle == middle_nucleus_from_spread(S)
    )
