"""Explicit isotopisms between named constructions.

Every link is an ``ExplicitIsotopism`` carrying both presemifields and a
triple (N1, N2, N3) with (x o_src y) N1 = (x N2) o_dst (y N3). ``verify``
re-checks it on all basis pairs.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np

from chuk_semifield.admissible import (
    composed_family,
    diag_family,
    trivial_family,
    triang_family,
)
from chuk_semifield.construct import construction1, construction2, twisted_cyclic
from chuk_semifield.core.presemifield import IsotopismTriple, PreSemifield
from chuk_semifield.equivalence.classify import NewFamilyParams, invert_sigma, invert_tau
from chuk_semifield.equivalence.isotopy import verify_isotopism
from chuk_semifield.errors import ConsistencyError, ParameterError
from chuk_semifield.families.bierbrauer import bierbrauer_transpose
from chuk_semifield.families.dempwolff import dempwolff_map, dempwolff_operator_form
from chuk_semifield.families.dickson import dickson
from chuk_semifield.families.knuth import knuth1, knuth2
from chuk_semifield.families.new_family import new_family
from chuk_semifield.families.taniguchi import (
    taniguchi,
    taniguchi_prime,
    taniguchi_star,
    taniguchi_transpose,
    unprimed,
)
from chuk_semifield.families.zhou_pott import zhou_pott, zhou_pott_transpose
from chuk_semifield.gf import FieldCtx
from chuk_semifield.semilinear import SemilinearMap, vector_basis, vectors_to_digits

logger = logging.getLogger(__name__)

# (N, 2) encoded vectors -> (N, 2), additive
VectorMap = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class ExplicitIsotopism:
    name: str
    source: PreSemifield
    target: PreSemifield
    triple: IsotopismTriple

    def verify(self) -> bool:
        return verify_isotopism(self.source, self.target, self.triple)

    def require(self) -> ExplicitIsotopism:
        if not self.verify():
            raise ConsistencyError(f"explicit isotopism {self.name!r} fails on a basis pair")
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "source": self.source.label,
            "target": self.target.label,
            "triple": self.triple.to_dict(),
        }


# ============================================================================
# F_p matrices of maps of L^2
# ============================================================================


def fp_map(ctx: FieldCtx, fn: VectorMap) -> np.ndarray:
    """Row-convention F_p matrix of an additive map of L^2."""
    return vectors_to_digits(ctx, fn(vector_basis(ctx, 2)))


def _identity(ctx: FieldCtx) -> np.ndarray:
    return np.eye(2 * ctx.m, dtype=np.int64)


def _swap(ctx: FieldCtx) -> np.ndarray:
    return fp_map(ctx, lambda v: v[:, ::-1])


def _components(
    ctx: FieldCtx,
    first: Callable[[np.ndarray, np.ndarray], Any],
    second: Callable[[np.ndarray, np.ndarray], Any],
) -> np.ndarray:
    """Matrix of (v0, v1) -> (first(v0, v1), second(v0, v1))."""

    def fn(v: np.ndarray) -> np.ndarray:
        return np.stack(
            [np.asarray(first(v[:, 0], v[:, 1]), dtype=np.int64),
             np.asarray(second(v[:, 0], v[:, 1]), dtype=np.int64)],
            axis=-1,
        )

    return fp_map(ctx, fn)


def _triple(ctx: FieldCtx, N1: Any = None, N2: Any = None, N3: Any = None) -> IsotopismTriple:
    eye = _identity(ctx)
    return IsotopismTriple(
        ctx.p,
        eye if N1 is None else N1,
        eye if N2 is None else N2,
        eye if N3 is None else N3,
    )


# ============================================================================
# The new family
# ============================================================================


def prop_isotopies(params: NewFamilyParams) -> list[ExplicitIsotopism]:
    """The two parameter-level isotopies of a new-family member, as triples.

    (sigma, tau^-1, 1/alpha, eta^(tau^-1)) through (N, P, P) with
    N(v) = (v0/alpha, v1^(tau^-1)) and P the coordinate swap; when eta != 0
    also (sigma^-1, tau, alpha eta^(tau^-1 - 1), 1/eta) through (N', F, F)
    with N'(v) = (-v0/eta, v1^sigma) and F = sigma on both coordinates.
    """
    ctx = params.field()
    k, l, alpha, eta = params.k, params.l, params.alpha, params.eta
    source = params.build()
    links: list[ExplicitIsotopism] = []

    swapped = invert_tau(params)
    N = _components(ctx, lambda v0, v1: ctx.div(v0, alpha), lambda v0, v1: ctx.frob(v1, -l))
    P = _swap(ctx)
    links.append(
        ExplicitIsotopism("invert-tau", source, swapped.build(), _triple(ctx, N, P, P))
    )

    if eta != 0:
        inverted = invert_sigma(params)
        N_prime = _components(
            ctx, lambda v0, v1: ctx.neg(ctx.div(v0, eta)), lambda v0, v1: ctx.frob(v1, k)
        )
        F = _components(ctx, lambda v0, v1: ctx.frob(v0, k), lambda v0, v1: ctx.frob(v1, k))
        links.append(
            ExplicitIsotopism("invert-sigma", source, inverted.build(), _triple(ctx, N_prime, F, F))
        )
    return links


def halbecase_isotopism(ctx: FieldCtx, k: int, l: int, alpha: int, eta: int) -> ExplicitIsotopism:
    """Construction 1 on the diagonal family with sigma^2 = id, as a Construction 2.

    For sigma = id the target is Construction 2 on the same family, via
    (1/(1 - eta), I, y -> (y0/(1 - eta), -y1)). For sigma of order two it is
    Construction 2 on the composed family with P(u) = u^sigma - eta u,
    through the identity triple. P must be a permutation of L.
    """
    if (2 * k) % ctx.m:
        raise ParameterError(f"sigma^2 must be the identity, got k = {k} with m = {ctx.m}")
    L = ctx.elements()
    kernel = L[(ctx.sub(ctx.frob(L, k), ctx.mul(eta, L)) == 0) & (L != 0)]
    if kernel.size:
        raise ParameterError(f"P(u) = u^sigma - {eta} u vanishes at u = {int(kernel[0])}")

    F = diag_family(ctx, k, l, alpha)
    source = construction1(F, eta)
    if k % ctx.m == 0:
        c = ctx.inv(ctx.sub(1, eta))
        target = construction2(F)
        N1 = np.kron(np.eye(2, dtype=np.int64), ctx.mul_matrix(int(c)))
        N3 = _components(ctx, lambda y0, y1: ctx.mul(c, y0), lambda y0, y1: ctx.neg(y1))
        triple = _triple(ctx, N1=N1, N3=N3)
    else:
        target = construction2(composed_family(ctx, k, l, alpha, eta))
        triple = _triple(ctx)
    return ExplicitIsotopism("halbecase", source, target, triple).require()


# ============================================================================
# Known families against the constructions
# ============================================================================


def twisted_cyclic_link(T: SemilinearMap, eta: int) -> ExplicitIsotopism:
    """Twisted cyclic on T with rho = sigma, eta/det T -> Construction 1 on a -> a T.

    TC(u, y) = C1(T u, (y1, y0^sigma / det T)).
    """
    ctx = T.ctx
    det = T.det()
    source = twisted_cyclic(T, r=T.k, eta=int(ctx.div(eta, det)))
    target = construction1(trivial_family(T), eta)
    N3 = _components(ctx, lambda y0, y1: y1, lambda y0, y1: ctx.div(ctx.frob(y0, T.k), det))
    return ExplicitIsotopism("twisted-cyclic", source, target, _triple(ctx, N2=T.fp_matrix(), N3=N3))


def knuth1_link(ctx: FieldCtx, k: int, alpha: int, beta: int) -> ExplicitIsotopism:
    """Construction 2 on the triangular family -> Knuth I, through y -> (y0, y1^(sigma^2))."""
    source = construction2(triang_family(ctx, k, alpha, beta))
    target = knuth1(ctx, k, alpha, beta)
    N3 = _components(ctx, lambda y0, y1: y0, lambda y0, y1: ctx.frob(y1, 2 * k))
    return ExplicitIsotopism("knuth1", source, target, _triple(ctx, N3=N3))


def knuth2_link(ctx: FieldCtx, k: int, alpha: int, beta: int) -> ExplicitIsotopism:
    """Cyclic semifield on [[0, alpha], [1, beta]] -> Knuth II, identity triple."""
    T = SemilinearMap.from_rows(ctx, [[0, alpha], [1, beta]], k)
    source = twisted_cyclic(T, eta=0)
    target = knuth2(ctx, k, alpha, beta)
    return ExplicitIsotopism("knuth2", source, target, _triple(ctx))


def dickson_link(ctx: FieldCtx, k: int, l: int, alpha: int) -> ExplicitIsotopism:
    """Construction 2 on Diag(sigma, tau^-1, alpha) -> Dickson with rho = sigma.

    C2(x, y) = D(x, (y0, y1^(tau^-1))).
    """
    source = construction2(diag_family(ctx, k, -l, alpha))
    target = dickson(ctx, k, l, k, alpha)
    N3 = _components(ctx, lambda y0, y1: y0, lambda y0, y1: ctx.frob(y1, -l))
    return ExplicitIsotopism("dickson", source, target, _triple(ctx, N3=N3))


def bierbrauer_link(ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int) -> ExplicitIsotopism:
    """Bierbrauer transpose -> dual of Construction 1 on a -> a[[0, alpha], [1, beta]].

    BB^t(x, y) = C1(y P, x Q) with Q(x) = (x1, -eta x0), eta' = -1/eta.
    """
    source = bierbrauer_transpose(ctx, k, alpha, beta, eta)
    T = SemilinearMap.from_rows(ctx, [[0, alpha], [1, beta]], k)
    eta_c1 = int(ctx.neg(ctx.inv(eta)))
    target = construction1(trivial_family(T), eta_c1, check=False).dual()
    Q = _components(ctx, lambda x0, x1: x1, lambda x0, x1: ctx.neg(ctx.mul(eta, x0)))
    return ExplicitIsotopism("bierbrauer", source, target, _triple(ctx, N2=Q, N3=_swap(ctx)))


def dempwolff_link(ctx: FieldCtx, k: int, l: int, alpha: int, eta: int) -> ExplicitIsotopism:
    """Dual of the operator form -> twisted cyclic on T^-1 with rho = tau.

    dual(De)(x, y) = TC(T x, P y) for T = [[0, 1], [alpha, 0]] with sigma.
    """
    T = dempwolff_map(ctx, k, alpha)
    source = dempwolff_operator_form(ctx, k, l, alpha, eta).dual()
    target = twisted_cyclic(T.inverse(), r=l, eta=eta)
    return ExplicitIsotopism(
        "dempwolff", source, target, _triple(ctx, N2=T.fp_matrix(), N3=_swap(ctx))
    )


def zhou_pott_links(ctx: FieldCtx, k: int, l: int, alpha: int) -> list[ExplicitIsotopism]:
    """Zhou-Pott against Construction 1 and against the new family with eta = -1.

    C1(Diag(sigma, tau, alpha^(tau^-1)), -1) -> dual(ZP^t) through
    (P, I, y -> (-y1^tau, y0)); ZP(sigma, tau^-1, alpha) -> S_(sigma, tau, alpha, -1)
    through (I, psi, psi) with psi(x) = (x1^(tau^-1), x0).
    """
    minus_one = int(ctx.neg(1))
    c1 = construction1(diag_family(ctx, k, l, int(ctx.frob(alpha, -l))), minus_one)
    dual_t = zhou_pott_transpose(ctx, k, l, alpha).dual()
    phi_inv = _components(ctx, lambda y0, y1: ctx.neg(ctx.frob(y1, l)), lambda y0, y1: y0)
    first = ExplicitIsotopism("zhou-pott-c1", c1, dual_t, _triple(ctx, N1=_swap(ctx), N3=phi_inv))

    zp = zhou_pott(ctx, k, -l, alpha)
    nf = new_family(ctx, k, l, alpha, minus_one)
    psi = _components(ctx, lambda x0, x1: ctx.frob(x1, -l), lambda x0, x1: x0)
    second = ExplicitIsotopism("zhou-pott-new-family", zp, nf, _triple(ctx, N2=psi, N3=psi))
    return [first, second]


def taniguchi_links(ctx: FieldCtx, k: int, alpha: int, beta: int, eta: int) -> list[ExplicitIsotopism]:
    """Taniguchi -> T' -> ... and T* -> T'^t, T* -> dual C1 on the triangular family.

    The triangular family uses the unprimed parameters:
    C1(Triang(sigma, 1/alpha, -(beta/alpha)^sigma), eta), with T*(x, y) = C1(y P, x P).
    """
    tan = taniguchi(ctx, k, alpha, beta, eta)
    prime = taniguchi_prime(ctx, k, alpha, beta, eta)
    N1 = _components(ctx, lambda v0, v1: ctx.frob(v0, -2 * k), lambda v0, v1: v1)
    links = [ExplicitIsotopism("taniguchi-prime", tan, prime, _triple(ctx, N1=N1))]

    a, b = unprimed(ctx, k, alpha, beta)
    star = taniguchi_star(ctx, k, alpha, beta, eta)
    transpose = taniguchi_transpose(ctx, k, alpha, beta, eta)
    N2 = _components(ctx, lambda x0, x1: ctx.neg(ctx.div(x0, a)), lambda x0, x1: x1)
    links.append(ExplicitIsotopism("taniguchi-star", star, transpose, _triple(ctx, N2=N2)))

    triang = triang_family(ctx, k, int(ctx.inv(a)), int(ctx.neg(ctx.frob(ctx.div(b, a), k))))
    dual_c1 = construction1(triang, eta).dual()
    P = _swap(ctx)
    links.append(ExplicitIsotopism("taniguchi-c1", star, dual_c1, _triple(ctx, N2=P, N3=P)))
    return links
