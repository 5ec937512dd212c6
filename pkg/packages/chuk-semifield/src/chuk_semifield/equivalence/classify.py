"""
Isotopism classification inside the new family S_(sigma, tau, alpha, eta).

With sigma: x -> x^(p^k), tau: x -> x^(p^l), K = Fix(sigma) and
d = gcd(p^k + 1, p^l - 1, p^m - 1), two members whose exponents are
normalized to 1 <= k, l < m/2 with k != l are isotopic iff they share
(sigma, tau) and some automorphism rho of L satisfies

    N_(L:K)(eta1)^rho = N_(L:K)(eta2),   alpha1^rho / alpha2 is a d-th power

Normalization uses two parameter-level isotopies:

    (sigma, tau, alpha, eta) ~ (sigma, tau^-1, 1/alpha, eta^(tau^-1))
    (sigma, tau, alpha, eta) ~ (sigma^-1, tau, alpha eta^(tau^-1 - 1), 1/eta)   eta != 0

Usage:
    from chuk_semifield.equivalence.classify import NewFamilyParams, new_family_isotopic

    a = NewFamilyParams(p=3, m=5, k=1, l=2, alpha=2, eta=2)
    b = a.model_copy(update={"eta": 4})
    new_family_isotopic(a, b)
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from chuk_semifield.config import require_budget
from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.errors import ClassifierInapplicable, ConsistencyError, ParameterError
from chuk_semifield.families.base import require_norm_not_one
from chuk_semifield.families.new_family import new_family, require_admissible_alpha
from chuk_semifield.gf import FieldCtx, admissible_degree, field_new
from chuk_semifield.types import FLAG_ETA_ZERO, FLAG_VACUOUS_ZP

logger = logging.getLogger(__name__)


class NewFamilyParams(BaseModel):
    """One member S_(sigma, tau, alpha, eta) of the new family over GF(p^m)."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    p: int = Field(ge=2)
    m: int = Field(ge=2)
    k: int = Field(description="sigma: x -> x^(p^k)")
    l: int = Field(description="tau: x -> x^(p^l)")
    alpha: int = Field(ge=1)
    eta: int = Field(default=0, ge=0)
    modulus: tuple[int, ...] | None = None

    @model_validator(mode="after")
    def _in_field(self) -> NewFamilyParams:
        order = self.p**self.m
        if self.alpha >= order or self.eta >= order:
            raise ValueError(f"alpha and eta must be encoded elements of GF({self.p}^{self.m})")
        return self

    def field(self) -> FieldCtx:
        return field_new(self.p, self.m, self.modulus)

    def build(self, check: bool = True) -> PreSemifield:
        return new_family(self.field(), self.k, self.l, self.alpha, self.eta, check=check)

    def validate_member(self) -> int:
        """Raise ParameterError unless alpha is admissible and N(eta) != 1; returns d."""
        ctx = self.field()
        d = require_admissible_alpha(ctx, self.k, self.l, self.alpha, "new-family")
        require_norm_not_one(ctx, self.k, self.eta, "new-family")
        return d


# ============================================================================
# Parameter-level isotopies
# ============================================================================


def invert_tau(params: NewFamilyParams) -> NewFamilyParams:
    """(sigma, tau^-1, 1/alpha, eta^(tau^-1))."""
    ctx = params.field()
    return params.model_copy(
        update={
            "l": (-params.l) % params.m,
            "alpha": int(ctx.inv(params.alpha)),
            "eta": int(ctx.frob(params.eta, -params.l)),
        }
    )


def invert_sigma(params: NewFamilyParams) -> NewFamilyParams:
    """(sigma^-1, tau, alpha eta^(tau^-1 - 1), 1/eta); needs eta != 0."""
    if params.eta == 0:
        raise ParameterError("sigma can only be inverted when eta != 0")
    ctx = params.field()
    twist = ctx.div(ctx.frob(params.eta, -params.l), params.eta)
    return params.model_copy(
        update={
            "k": (-params.k) % params.m,
            "alpha": int(ctx.mul(params.alpha, twist)),
            "eta": int(ctx.inv(params.eta)),
        }
    )


def _require_hypotheses(m: int, k: int, l: int) -> None:
    if not (1 <= k and 2 * k < m and 1 <= l and 2 * l < m):
        raise ClassifierInapplicable(
            f"classifier needs 1 <= k, l < m/2 after normalization; got k={k}, l={l}, m={m}"
        )
    if k == l:
        raise ClassifierInapplicable(f"classifier needs sigma != tau; got k = l = {k}")


def normalize(params: NewFamilyParams) -> NewFamilyParams:
    """Bring k and l into [1, m/2) via the parameter-level isotopies.

    Raises ClassifierInapplicable when the result still misses the hypotheses.
    """
    m = params.m
    out = params.model_copy(update={"k": params.k % m, "l": params.l % m})
    if 2 * out.k > m:
        if out.eta == 0:
            raise ClassifierInapplicable("eta = 0 with k > m/2 cannot be normalized")
        out = invert_sigma(out)
    if 2 * out.l > m:
        out = invert_tau(out)
    _require_hypotheses(m, out.k, out.l)
    return out


# ============================================================================
# Pairwise classification
# ============================================================================


@dataclass(frozen=True)
class ClassifierVerdict:
    isotopic: bool
    rho: int | None
    d: int
    first: NewFamilyParams
    second: NewFamilyParams
    flags: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        return {
            "isotopic": self.isotopic,
            "rho": self.rho,
            "d": self.d,
            "normalized": [self.first.model_dump(), self.second.model_dump()],
            "flags": list(self.flags),
        }


def classify_pair(first: NewFamilyParams, second: NewFamilyParams) -> ClassifierVerdict:
    """Decide isotopy of two new-family members from their parameters.

    Args:
        first: member over GF(p^m)
        second: member over the same field

    Returns:
        ClassifierVerdict with the verdict, the witnessing rho (if any), d and
        both normalized parameter sets

    Raises:
        ParameterError: the members live over different fields or are invalid
        ClassifierInapplicable: the normalized exponents miss 1 <= k != l < m/2
    """
    if (first.p, first.m, first.modulus) != (second.p, second.m, second.modulus):
        raise ParameterError("both parameter sets must live over the same field")
    for params in (first, second):
        params.validate_member()
    a, b = normalize(first), normalize(second)
    flags = (FLAG_ETA_ZERO,) if 0 in (a.eta, b.eta) else ()
    if flags:
        logger.warning("eta = 0 lies outside the counted family; verdict is recorded but flagged")
    ctx = a.field()
    d = admissible_degree(ctx.p, a.k, a.l, ctx.m)
    if (a.k, a.l) != (b.k, b.l):
        return ClassifierVerdict(False, None, d, a, b, flags)

    n1, n2 = int(ctx.norm(a.eta, a.k)), int(ctx.norm(b.eta, b.k))
    log1, log2 = int(ctx.log(a.alpha)), int(ctx.log(b.alpha))
    for r in range(ctx.m):
        if int(ctx.frob(n1, r)) != n2:
            continue
        if (ctx.p**r * log1 - log2) % d == 0:
            logger.debug("isotopic via rho = Frob^%d", r)
            return ClassifierVerdict(True, r, d, a, b, flags)
    return ClassifierVerdict(False, None, d, a, b, flags)


def new_family_isotopic(first: NewFamilyParams, second: NewFamilyParams) -> bool:
    """Shorthand for ``classify_pair(first, second).isotopic``."""
    return classify_pair(first, second).isotopic


# ============================================================================
# Counting isotopism classes
# ============================================================================


class CountReport(BaseModel):
    """Isotopism classes for fixed (p, m, k, l) and eta != 0, with its bounds."""

    model_config = ConfigDict(frozen=True)

    p: int
    m: int
    k: int
    l: int
    d: int
    norm_values: int = Field(description="|K| - 2 admissible values of N(eta)")
    lower: float
    upper: int
    exact: int
    eta_zero_classes: int = Field(description="extra classes with eta = 0, not in the count")


# Pair sets larger than this are counted by Burnside only.
ENUMERATION_LIMIT = 200_000


def _orbit_count(pairs: set[tuple[int, int]], step: Callable[[tuple[int, int]], tuple[int, int]]) -> int:
    """Orbits of the cyclic group generated by ``step``."""
    seen: set[tuple[int, int]] = set()
    orbits = 0
    for start in sorted(pairs):
        if start in seen:
            continue
        orbits += 1
        current = step(start)
        seen.add(start)
        while current not in seen:
            seen.add(current)
            current = step(current)
    return orbits


def _burnside(p: int, m: int, g: int, d: int, with_norms: bool) -> int:
    """(1/m) sum_r |Fix(Frob^r)| on (K minus {0, 1}) x (nontrivial cosets mod d)."""
    total = 0
    for r in range(m):
        fixed_cosets = math.gcd(d, p**r - 1) - 1
        fixed_norms = p ** math.gcd(r, g) - 2 if with_norms else 1
        total += fixed_norms * fixed_cosets
    if total % m:
        raise ConsistencyError(f"Burnside sum {total} is not divisible by m = {m}")
    return total // m


def new_family_count(p: int, m: int, k: int, l: int) -> CountReport:
    """Orbits of (N(eta), alpha mod d-th powers) under Aut(L); eta = 0 tallied apart.

    Small cases walk the orbits explicitly and must match the Burnside count.

    Args:
        p: characteristic
        m: degree of L over F_p
        k: sigma exponent
        l: tau exponent

    Returns:
        CountReport with lower, upper and exact, plus eta_zero_classes

    Raises:
        ClassifierInapplicable: (m, k, l) outside the classifier's hypotheses
        ConsistencyError: the orbit walk and the Burnside count disagree
    """
    _require_hypotheses(m, k, l)
    g = math.gcd(k, m)
    d = admissible_degree(p, k, l, m)
    norm_values = p**g - 2
    exact = _burnside(p, m, g, d, with_norms=True)
    eta_zero = _burnside(p, m, g, d, with_norms=False)

    if norm_values * (d - 1) <= ENUMERATION_LIMIT:
        K = field_new(p, g)
        values = [int(v) for v in K.elements() if v not in (0, 1)]
        # Frob^1 generates Aut(L); on K it acts as x -> x^p.
        frob = np.asarray(K.frob(K.elements(), 1), dtype=np.int64)

        def step(pair: tuple[int, int]) -> tuple[int, int]:
            value, c = pair
            return int(frob[value]), (p * c) % d

        walked = _orbit_count({(v, c) for v in values for c in range(1, d)}, step)
        if walked != exact:
            raise ConsistencyError(f"orbit walk gives {walked} classes, Burnside gives {exact}")

    lower = norm_values * (d - 1) / m
    upper = norm_values * (d - 1)
    if not lower <= exact <= upper:
        raise ConsistencyError(f"class count {exact} outside [{lower}, {upper}]")
    report = CountReport(
        p=p, m=m, k=k, l=l, d=d, norm_values=norm_values,
        lower=lower, upper=upper, exact=exact, eta_zero_classes=eta_zero,
    )
    logger.info("new family classes for (p=%d, m=%d, k=%d, l=%d): %d", p, m, k, l, exact)
    return report


# ============================================================================
# Centralizer of the gamma autotopisms
# ============================================================================


def centralizer_formula(p: int, m: int, k: int) -> int:
    q = p**m
    return (q - 1) * math.gcd(p**k + 1, q - 1) * (p ** math.gcd(k, m) - 1)


# Cells per enumeration chunk of the centralizer count
_CELLS = 1 << 22


def centralizer_count(p: int, m: int, k: int, l: int, *, slow: bool = False) -> int:
    """Count the centralizer of the gamma autotopisms.

    Counts quadruples (a2, d2, a3, d3) in (L*)^4 with

        a2^s a3 = a2 a3^s,  d2^s d3 = d2 d3^s,  a2 a3^s = d2 d3^s,  a2^t d3 = d2 a3^t

    for s = p^k, t = p^l, enumerated in discrete-log coordinates.

    Args:
        p: characteristic
        m: degree of L over F_p
        k: sigma exponent
        l: tau exponent
        slow: allow enumerations above ``cost_limit``

    Returns:
        The count, equal to (q - 1) gcd(p^k + 1, q - 1) (p^gcd(k, m) - 1).

    Raises:
        ParameterError: sigma = tau^(+-1) or sigma^2 = id
        SearchRefused: the enumeration exceeds ``cost_limit`` without ``slow``
        ConsistencyError: enumeration and formula disagree
    """
    ks, ls = k % m, l % m
    if ks in (ls, (-ls) % m) or (2 * ks) % m == 0:
        raise ParameterError("centralizer count needs sigma != tau^(+-1) and sigma^2 != id")
    N = p**m - 1
    s, t = pow(p, ks, N), pow(p, ls, N)
    # the first relation puts a3 / a2 in the kernel of x -> x^(s-1), of order g
    g = math.gcd(s - 1, N)
    require_budget(g * N * N, f"centralizer count over GF({p}^{m})", slow=slow)
    offsets = np.arange(g, dtype=np.int64) * (N // g)
    logs = np.arange(N, dtype=np.int64)
    rows = max(1, _CELLS // (g * N))

    count = 0
    for start in range(0, N, rows):
        A2 = np.repeat(logs[start : start + rows], g)
        A3 = (A2 + np.tile(offsets, A2.size // g)) % N
        # the fourth relation fixes d2 once d3 is chosen
        D2 = (logs[None, :] + ((t * (A2 - A3)) % N)[:, None]) % N
        ok = ((s - 1) * (D2 - logs[None, :])) % N == 0
        ok &= ((A2 + s * A3)[:, None] - (D2 + s * logs[None, :])) % N == 0
        count += int(np.count_nonzero(ok))

    expected = centralizer_formula(p, m, ks)
    if count != expected:
        raise ConsistencyError(f"centralizer enumeration gives {count}, formula gives {expected}")
    logger.debug("centralizer GF(%d^%d), k=%d, l=%d: %d", p, m, k, l, count)
    return count


# ============================================================================
# Zhou-Pott membership
# ============================================================================


def zhou_pott_member(params: NewFamilyParams) -> bool:
    """A member with N_(L:K)(eta) = -1 is isotopic to a Zhou-Pott semifield."""
    ctx = params.field()
    if ctx.p == 2:
        logger.warning("N(eta) = -1 = 1 is excluded in characteristic 2 [%s]", FLAG_VACUOUS_ZP)
        return False
    return int(ctx.norm(params.eta, params.k)) == int(ctx.neg(1))
