"""Cheap isotopy invariants, compared before any search."""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict

from chuk_semifield.core.nuclei import nuclei
from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.gf import admissible_degree

logger = logging.getLogger(__name__)


class InvariantRecord(BaseModel):
    """Order, nuclei sizes and, for new-family members, the classifier data."""

    model_config = ConfigDict(frozen=True)

    label: str
    order: int
    left_nucleus: int
    middle_nucleus: int
    right_nucleus: int
    commutative: bool
    eta_norm: int | None = None
    alpha_class: int | None = None

    @property
    def nuclei_multiset(self) -> tuple[int, ...]:
        return tuple(sorted((self.left_nucleus, self.middle_nucleus, self.right_nucleus)))

    def rules_out_isotopy(self, other: InvariantRecord) -> bool:
        """Isotopic presemifields share the order and each of the three nuclei."""
        mine = (self.order, self.left_nucleus, self.middle_nucleus, self.right_nucleus)
        theirs = (other.order, other.left_nucleus, other.middle_nucleus, other.right_nucleus)
        return mine != theirs


def invariants(S: PreSemifield) -> InvariantRecord:
    N = nuclei(S)
    eta_norm = alpha_class = None
    if S.metadata.get("family") == "new-family":
        params = S.metadata["params"]
        ctx = S.ctx
        k, l = params["k"] % ctx.m, params["l"] % ctx.m
        eta_norm = int(ctx.norm(params["eta"], k))
        d = admissible_degree(ctx.p, k, l, ctx.m)
        alpha_class = int(ctx.power_class_index(params["alpha"], d))
    record = InvariantRecord(
        label=S.label,
        order=S.order,
        left_nucleus=N.left,
        middle_nucleus=N.middle,
        right_nucleus=N.right,
        commutative=S.is_commutative(),
        eta_norm=eta_norm,
        alpha_class=alpha_class,
    )
    logger.debug("invariants of %s: %s", S.label, record)
    return record
