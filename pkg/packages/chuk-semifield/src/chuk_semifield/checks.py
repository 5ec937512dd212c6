"""Crosscheck and selftest suites.

``crosscheck`` runs the correspondences between named families and the two
constructions; ``selftest`` runs the exhaustive property checks. Items above
``max_order`` are reported as skipped, never silently dropped.

Usage:
    from chuk_semifield.checks import crosscheck, selftest

    report = selftest(max_order=256)
    print(report.summary())
    assert report.passed
"""

from __future__ import annotations

import itertools
import logging
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from chuk_semifield.admissible import (
    AdmissibleFamily,
    diag_family,
    triang_family,
    trivial_family,
)
from chuk_semifield.construct import (
    brute_force_verdicts,
    construction1,
    construction2,
    criterion_verdicts,
)
from chuk_semifield.core.autotopism import verify_gamma_autotopism
from chuk_semifield.core.knuth import knuth_orbit
from chuk_semifield.core.nuclei import nuclei, nuclei_agree_with_spread
from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.core.spread import spread_equal, transpose
from chuk_semifield.equivalence.classify import (
    NewFamilyParams,
    centralizer_count,
    new_family_count,
)
from chuk_semifield.equivalence.explicit import (
    ExplicitIsotopism,
    bierbrauer_link,
    dempwolff_link,
    dickson_link,
    halbecase_isotopism,
    knuth1_link,
    knuth2_link,
    prop_isotopies,
    taniguchi_links,
    twisted_cyclic_link,
    zhou_pott_links,
)
from chuk_semifield.equivalence.isotopy import brute_force_isotopic
from chuk_semifield.errors import ConsistencyError, ParameterError, SemifieldError
from chuk_semifield.families.bierbrauer import bierbrauer, bierbrauer_transpose
from chuk_semifield.families.dempwolff import dempwolff
from chuk_semifield.families.dickson import dickson, dickson_biprojective, dickson_transpose
from chuk_semifield.families.fields import quadratic_extension_field
from chuk_semifield.families.knuth import knuth2, knuth2_biprojective, knuth3, knuth4
from chuk_semifield.families.new_family import new_family
from chuk_semifield.families.taniguchi import taniguchi_prime, taniguchi_transpose
from chuk_semifield.families.zhou_pott import zhou_pott, zhou_pott_transpose
from chuk_semifield.gf import FieldCtx, admissible_degree, field_new
from chuk_semifield.semilinear import SemilinearMap, all_vectors, find_irreducible
from chuk_semifield.types import CheckStatus

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    status: CheckStatus
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "detail": self.detail,
        }


@dataclass
class CheckReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != CheckStatus.FAILED for r in self.results)

    def counts(self) -> dict[str, int]:
        return {s.value: sum(r.status == s for r in self.results) for s in CheckStatus}

    def summary(self) -> str:
        c = self.counts()
        lines = [f"{self.suite}: {c['passed']} passed, {c['failed']} failed, {c['skipped']} skipped"]
        lines += [f"  [{r.status.value}] {r.name}: {r.detail}" for r in self.results]
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "counts": self.counts(),
            "results": [r.to_dict() for r in self.results],
        }


# A check returns a detail string and raises ConsistencyError on failure.
Check = Callable[[], str]


class _Skip(Exception):
    pass


def _run(name: str, check: Check) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = check()
        status = CheckStatus.PASSED
    except _Skip as exc:
        detail, status = str(exc), CheckStatus.SKIPPED
    except SemifieldError as exc:
        detail, status = f"{type(exc).__name__}: {exc}", CheckStatus.FAILED
    elapsed = time.perf_counter() - start
    log = logger.warning if status == CheckStatus.FAILED else logger.info
    log("%s %s (%.2fs): %s", status.value, name, elapsed, detail)
    return CheckResult(name, status, detail)


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise ConsistencyError(message)


def _within(order: int, max_order: int) -> None:
    if order > max_order:
        raise _Skip(f"order {order} exceeds max_order {max_order}")


def _first(build: Callable[..., PreSemifield], candidates: Iterable[tuple[Any, ...]]) -> PreSemifield:
    """First candidate parameter tuple the builder accepts."""
    for args in candidates:
        try:
            return build(*args)
        except ParameterError:
            continue
    raise _Skip("no valid parameters in range")


def _links_hold(links: list[ExplicitIsotopism]) -> str:
    for link in links:
        _require(link.verify(), f"isotopism {link.name} fails on a basis pair")
    return ", ".join(f"{link.name} ok" for link in links)


def _axioms(S: PreSemifield) -> None:
    report = S.verify_axioms()
    _require(report.ok, f"{S.label}: {report.summary()}")


def _gf9() -> FieldCtx:
    return field_new(3, 2)


# ============================================================================
# Crosscheck: named families against the constructions
# ============================================================================


def _knuth2_cyclic() -> str:
    ctx = field_new(2, 2)
    link = knuth2_link(ctx, 1, 2, 0)
    _require(link.target.same_constants(link.source), "Knuth II differs from the cyclic semifield")
    witness = brute_force_isotopic(link.source, link.target)
    _require(witness is not None, "no isotopy witness at order 16")
    return "identical structure constants; witness found"


def _knuth1_c2() -> str:
    ctx = field_new(2, 2)
    link = knuth1_link(ctx, 1, 2, 0)
    _require(link.verify(), "Knuth I triple fails")
    _require(brute_force_isotopic(link.source, link.target) is not None, "no witness at order 16")
    return "triple verified; witness found at order 16"


def _dickson_c2() -> str:
    ctx = _gf9()
    alpha = ctx.smallest_nonsquare()
    return _links_hold([dickson_link(ctx, 1, 1, alpha)])


def _bierbrauer_c1() -> str:
    ctx = _gf9()
    alpha, eta = ctx.smallest_non_power(4), ctx.smallest_nonsquare()
    S = bierbrauer(ctx, 1, alpha, 0, eta)
    _require(
        transpose(S).same_constants(bierbrauer_transpose(ctx, 1, alpha, 0, eta)),
        "transpose of Bierbrauer differs from its transpose formula",
    )
    return _links_hold([bierbrauer_link(ctx, 1, alpha, 0, eta)])


def _dempwolff_twisted_cyclic() -> str:
    ctx = _gf9()
    candidates = itertools.product(ctx.nonzero(), ctx.nonzero())
    for alpha, eta in candidates:
        try:
            link = dempwolff_link(ctx, 1, 1, int(alpha), int(eta))
        except ParameterError:
            continue
        return _links_hold([link])
    raise _Skip("no valid Dempwolff parameters over GF(9)")


def _zhou_pott(max_order: int) -> str:
    ctx = field_new(3, 3)
    _within(ctx.order**2, max_order)
    alpha = ctx.smallest_nonsquare()
    S = zhou_pott(ctx, 1, 0, alpha)
    _require(
        transpose(S).same_constants(zhou_pott_transpose(ctx, 1, 0, alpha)),
        "transpose of Zhou-Pott differs from its transpose formula",
    )
    return _links_hold(zhou_pott_links(ctx, 1, 0, alpha))


def _taniguchi_chain() -> str:
    ctx = _gf9()
    alpha, eta = ctx.smallest_non_power(4), ctx.smallest_nonsquare()
    _require(
        transpose(taniguchi_prime(ctx, 1, alpha, 0, eta)).same_constants(
            taniguchi_transpose(ctx, 1, alpha, 0, eta)
        ),
        "transpose of T' differs from its transpose formula",
    )
    return _links_hold(taniguchi_links(ctx, 1, alpha, 0, eta))


def _twisted_cyclic_c1() -> str:
    ctx = _gf9()
    T = find_irreducible(ctx, 2, 1)
    return _links_hold([twisted_cyclic_link(T, ctx.smallest_nonsquare())])


def crosscheck(max_order: int = 256) -> CheckReport:
    report = CheckReport("crosscheck")
    items: list[tuple[str, Check]] = [
        ("knuth2 = cyclic (order 16)", _knuth2_cyclic),
        ("knuth1 ~ construction2 + triang (order 16)", _knuth1_c2),
        ("dickson ~ construction2 + diag (order 81)", _dickson_c2),
        ("bierbrauer transpose ~ construction1 + trivial (order 81)", _bierbrauer_c1),
        ("dempwolff ~ twisted cyclic (order 81)", _dempwolff_twisted_cyclic),
        ("twisted cyclic ~ construction1 + trivial (order 81)", _twisted_cyclic_c1),
        ("taniguchi chain (order 81)", _taniguchi_chain),
        ("zhou-pott ~ new family, eta = -1 (order 729)", lambda: _zhou_pott(max_order)),
    ]
    for name, check in items:
        report.results.append(_run(name, check))
    return report


# ============================================================================
# Selftest: exhaustive properties
# ============================================================================

_SWEEP_FIELDS: tuple[tuple[int, int], ...] = ((2, 2), (2, 3), (3, 2), (2, 4), (3, 3))


def _families(ctx: FieldCtx) -> list[AdmissibleFamily]:
    out: list[AdmissibleFamily] = []
    for k in range(ctx.m):
        try:
            out.append(trivial_family(find_irreducible(ctx, 2, k)))
        except ParameterError:
            pass
        for l in range(1, ctx.m):
            d = admissible_degree(ctx.p, k, l, ctx.m)
            if d > 1:
                out.append(diag_family(ctx, k, l, ctx.smallest_non_power(d)))
        if k:
            for alpha, beta in itertools.product(ctx.nonzero(), ctx.elements()):
                T = SemilinearMap.from_rows(ctx, [[0, alpha], [1, beta]], k)
                if T.is_irreducible_criterion():
                    out.append(triang_family(ctx, k, int(alpha), int(beta)))
                    break
    return out


def _valid_etas(ctx: FieldCtx, k: int, limit: int = 2) -> list[int]:
    etas = [0]
    for eta in ctx.nonzero():
        if len(etas) > limit:
            break
        if ctx.norm(eta, k) != 1:
            etas.append(int(eta))
    return etas


def _construction_soundness(max_order: int) -> str:
    built = 0
    for p, m in _SWEEP_FIELDS:
        if (p**m) ** 2 > max_order:
            continue
        ctx = field_new(p, m)
        for F in _families(ctx):
            _axioms(construction2(F))
            built += 1
            for eta in _valid_etas(ctx, F.k):
                _axioms(construction1(F, eta))
                built += 1
    if not built:
        raise _Skip("no sweep field within max_order")
    return f"{built} presemifields without zero divisors"


def _irreducibility_criterion() -> str:
    checked = 0
    for p, m in ((2, 2), (2, 3), (3, 2), (2, 4)):
        ctx = field_new(p, m)
        for k in range(m):
            for alpha, beta in itertools.product(ctx.nonzero(), ctx.elements()):
                T = SemilinearMap.from_rows(ctx, [[0, alpha], [1, beta]], k)
                _require(
                    T.is_irreducible_criterion() == T.is_irreducible_oracle(),
                    f"criterion and oracle disagree on {T.to_dict()} over GF({p}^{m})",
                )
                checked += 1
    return f"{checked} companion maps agree"


def _nonsingularity_criterion() -> str:
    checked = 0
    for p, m, d in ((2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)):
        ctx = field_new(p, m)
        T = find_irreducible(ctx, d, 1)
        ys = all_vectors(ctx, d + 1)
        criterion = criterion_verdicts(T, ys)
        rank = brute_force_verdicts(T, ys)
        bad = np.nonzero(criterion != rank)[0]
        if bad.size:
            raise ConsistencyError(f"GF({p}^{m}), d={d}: disagreement at y={ys[bad[0]].tolist()}")
        checked += len(ys)
    return f"{checked} coefficient tuples agree"


def _nuclei_new_family(max_order: int) -> str:
    details = []
    ctx = field_new(2, 4)
    if ctx.order**2 <= max_order:
        alpha = ctx.smallest_non_power(admissible_degree(2, 1, 2, 4))
        S = new_family(ctx, 1, 2, alpha, 0)
        _require(nuclei_agree_with_spread(S), "nuclei disagree with the spread-set oracle at (2,4,1,2)")
        details.append(f"(2,4,1,2) eta=0: {nuclei(S).to_dict()}")
    ctx = field_new(3, 4)
    if ctx.order**2 <= max_order:
        alpha = ctx.smallest_non_power(admissible_degree(3, 1, 2, 4))
        S = new_family(ctx, 1, 2, alpha, ctx.smallest_nonsquare())
        got = nuclei(S)
        _require((got.left, got.middle, got.right) == (3, 9, 3), f"(3,4,1,2): nuclei {got.to_dict()}")
        details.append("(3,4,1,2): (3, 9, 3)")
    if not details:
        raise _Skip("orders 256 and 6561 exceed max_order")
    return "; ".join(details)


def _transposes(max_order: int) -> str:
    ctx = _gf9()
    alpha = ctx.smallest_nonsquare()
    _require(
        transpose(dickson(ctx, 1, 1, 1, alpha)).same_constants(dickson_transpose(ctx, 1, 1, 1, alpha)),
        "Dickson transpose formula",
    )
    done = ["dickson 81", "bierbrauer 81 (no parameters exist at order 16)"]
    a4, eta = ctx.smallest_non_power(4), ctx.smallest_nonsquare()
    _require(
        transpose(bierbrauer(ctx, 1, a4, 0, eta)).same_constants(bierbrauer_transpose(ctx, 1, a4, 0, eta)),
        "Bierbrauer transpose formula",
    )
    _require(
        transpose(taniguchi_prime(ctx, 1, a4, 0, eta)).same_constants(
            taniguchi_transpose(ctx, 1, a4, 0, eta)
        ),
        "Taniguchi transpose formula",
    )
    done.append("taniguchi 81")
    gf27 = field_new(3, 3)
    if gf27.order**2 <= max_order:
        a = gf27.smallest_nonsquare()
        _require(
            transpose(zhou_pott(gf27, 1, 0, a)).same_constants(zhou_pott_transpose(gf27, 1, 0, a)),
            "Zhou-Pott transpose formula",
        )
        done.append("zhou-pott 729")
    return ", ".join(done)


def _centralizer() -> str:
    got = [centralizer_count(2, 5, 1, 2), centralizer_count(3, 4, 1, 2), centralizer_count(2, 5, 1, 3)]
    _require(got == [31, 640, 31], f"centralizer counts {got}")
    return "31, 640, 31"


def _explicit_isotopisms(max_order: int) -> str:
    ctx = _gf9()
    alpha, eta = ctx.smallest_nonsquare(), ctx.smallest_nonsquare()
    links = [halbecase_isotopism(ctx, 1, 1, alpha, eta), halbecase_isotopism(ctx, 0, 1, alpha, 2)]
    if 3**8 <= max_order:
        gf81 = field_new(3, 4)
        params = NewFamilyParams(
            p=3, m=4, k=1, l=2,
            alpha=gf81.smallest_non_power(4), eta=gf81.smallest_nonsquare(),
        )
        links += prop_isotopies(params)
    return _links_hold(links)


def _counting() -> str:
    expected = {(3, 5, 1, 2): 1, (5, 5, 1, 2): 3, (3, 10, 1, 2): 2}
    for key, value in expected.items():
        got = new_family_count(*key).exact
        _require(got == value, f"count{key} = {got}, expected {value}")
    swept = 0
    for p in (2, 3, 5):
        for m in range(3, 13):
            for k in range(1, (m + 1) // 2):
                for l in range(1, (m + 1) // 2):
                    if k != l and 2 * k < m and 2 * l < m:
                        new_family_count(p, m, k, l)
                        swept += 1
    return f"specific values match; {swept} parameter sets within bounds"


def _orbit_representatives(max_order: int) -> list[PreSemifield]:
    gf4, gf9 = field_new(2, 2), _gf9()
    reps = [
        knuth2(gf4, 1, 2, 0),
        knuth3(gf9, 1, gf9.smallest_non_power(4), 0),
        knuth4(gf9, 1, gf9.smallest_non_power(4), 0),
        dickson(gf9, 1, 1, 1, gf9.smallest_nonsquare()),
        bierbrauer(gf9, 1, gf9.smallest_non_power(4), 0, gf9.smallest_nonsquare()),
        _first(
            lambda a, e: dempwolff(gf9, 1, 1, int(a), int(e)),
            itertools.product(gf9.nonzero(), gf9.nonzero()),
        ),
    ]
    return [S for S in reps if S.order <= max_order]


def _knuth_orbits(max_order: int) -> str:
    sizes = []
    for S in _orbit_representatives(max_order):
        _require(spread_equal(transpose(transpose(S)), S), f"{S.label}: transpose is not an involution")
        _require(S.dual().dual().same_constants(S), f"{S.label}: dual is not an involution")
        orbit = knuth_orbit(S)
        multisets = {nuclei(member.semifield).multiset for member in orbit}
        _require(len(multisets) == 1, f"{S.label}: nuclei multisets vary across the orbit: {multisets}")
        sizes.append(f"{S.label}:{len(orbit)}")
    return ", ".join(sizes)


def _gamma_autotopisms() -> str:
    gf9 = _gf9()
    nonsquare = gf9.smallest_nonsquare()
    nf = new_family(gf9, 1, 1, nonsquare, nonsquare)
    _require(verify_gamma_autotopism(nf, 1, 1), "new family fails gamma with (sigma, tau)")
    kn = knuth2_biprojective(gf9, 1, gf9.smallest_non_power(4), 0)
    _require(verify_gamma_autotopism(kn, 1, 1), "Knuth II fails gamma with (sigma, sigma)")
    dk = dickson_biprojective(gf9, 1, nonsquare)
    _require(verify_gamma_autotopism(dk, 0, 1), "Dickson fails gamma with (id, tau)")
    field_ = quadratic_extension_field(gf9, nonsquare)
    _require(verify_gamma_autotopism(field_, 0, 0), "GF(81) fails gamma with (id, id)")
    _require(not verify_gamma_autotopism(field_, 1, 0), "GF(81) passes gamma with a wrong pair")
    return "representatives pass; wrong pair rejected"


def selftest(max_order: int = 256) -> CheckReport:
    report = CheckReport("selftest")
    items: list[tuple[str, Check]] = [
        ("construction soundness", lambda: _construction_soundness(max_order)),
        ("irreducibility criterion vs oracle", _irreducibility_criterion),
        ("nonsingularity criterion vs rank", _nonsingularity_criterion),
        ("new family nuclei", lambda: _nuclei_new_family(max_order)),
        ("transpose formulas", lambda: _transposes(max_order)),
        ("centralizer counts", _centralizer),
        ("explicit isotopisms", lambda: _explicit_isotopisms(max_order)),
        ("class counts within bounds", _counting),
        ("Knuth orbit involutions", lambda: _knuth_orbits(max_order)),
        ("gamma autotopisms", _gamma_autotopisms),
    ]
    for name, check in items:
        report.results.append(_run(name, check))
    logger.info("selftest: %s", report.counts())
    return report
