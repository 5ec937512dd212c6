"""Tests for isotopism verification, search, explicit links and classification."""

import itertools

import pytest

from chuk_semifield.config import SemifieldSettings, set_settings
from chuk_semifield.core import IsotopismTriple
from chuk_semifield.equivalence import (
    NewFamilyParams,
    bierbrauer_link,
    brute_force_isotopic,
    centralizer_count,
    centralizer_formula,
    classify_pair,
    compose_isotopisms,
    dempwolff_link,
    dickson_link,
    halbecase_isotopism,
    invariants,
    invert_sigma,
    invert_tau,
    knuth1_link,
    knuth2_link,
    new_family_count,
    new_family_isotopic,
    normalize,
    prop_isotopies,
    taniguchi_links,
    twisted_cyclic_link,
    verify_isotopism,
    zhou_pott_links,
    zhou_pott_member,
)
from chuk_semifield.errors import ClassifierInapplicable, ParameterError, SearchRefused
from chuk_semifield.families import field_multiplication, knuth2, new_family
from chuk_semifield.gf import field_new
from chuk_semifield.semilinear import find_irreducible
from chuk_semifield.types import FLAG_ETA_ZERO


@pytest.fixture
def gf243():
    return field_new(3, 5)


@pytest.fixture
def member(gf243):
    """S_(sigma, tau, alpha, eta) over GF(3^5) with k = 1, l = 2.

    K = F_3, so N(eta) = -1 exactly when eta is a nonsquare.
    """
    ns = gf243.smallest_nonsquare()
    return NewFamilyParams(p=3, m=5, k=1, l=2, alpha=ns, eta=ns)


class TestVerifyIsotopism:
    """Tests for checking a triple on basis pairs."""

    def test_identity(self, gf4):
        S = knuth2(gf4, 1, 2)
        assert verify_isotopism(S, S, IsotopismTriple.identity(2, 4))

    def test_wrong_characteristic(self, gf4):
        S = knuth2(gf4, 1, 2)
        assert not verify_isotopism(S, S, IsotopismTriple.identity(3, 4))

    def test_compose(self, gf4):
        link = knuth1_link(gf4, 1, 2, 0)
        back = IsotopismTriple.identity(2, 4)
        assert verify_isotopism(link.source, link.target, compose_isotopisms(link.triple, back))

    def test_compose_needs_a_triple(self):
        with pytest.raises(ParameterError, match="at least one"):
            compose_isotopisms()


class TestBruteForce:
    """Tests for the exhaustive GL(n, p) search."""

    def test_identical_found_first(self, gf4):
        link = knuth2_link(gf4, 1, 2, 0)
        witness = brute_force_isotopic(link.source, link.target)
        assert witness is not None
        assert witness.examined == 1

    def test_knuth1(self, gf4):
        link = knuth1_link(gf4, 1, 2, 0)
        witness = brute_force_isotopic(link.source, link.target)
        assert witness is not None
        assert verify_isotopism(link.source, link.target, witness.triple)

    def test_field_and_proper_semifield(self, gf4):
        assert brute_force_isotopic(field_multiplication(gf4), knuth2(gf4, 1, 2)) is None

    def test_workers(self, gf4):
        set_settings(SemifieldSettings(workers=2, search_chunk=1024))
        assert brute_force_isotopic(field_multiplication(gf4), knuth2(gf4, 1, 2)) is None

    def test_refused_above_limit(self, gf9):
        S = new_family(gf9, 1, 1, 4, 4)
        with pytest.raises(SearchRefused, match="slow=True"):
            brute_force_isotopic(S, S)

    def test_orders_differ(self, gf4, gf9):
        with pytest.raises(ParameterError, match="orders differ"):
            brute_force_isotopic(knuth2(gf4, 1, 2), new_family(gf9, 1, 1, 4, 4))

    def test_witness_to_dict(self, gf4):
        S = knuth2(gf4, 1, 2)
        data = brute_force_isotopic(S, S).to_dict()
        assert set(data) == {"A", "B", "triple", "examined"}


class TestExplicitLinks:
    """Each named family is isotopic to one of the constructions."""

    def test_knuth2_is_cyclic(self, gf4):
        link = knuth2_link(gf4, 1, 2, 0)
        assert link.target.same_constants(link.source)
        assert link.verify()

    def test_knuth1(self, gf4):
        assert knuth1_link(gf4, 1, 2, 0).verify()

    def test_dickson(self, gf9):
        assert dickson_link(gf9, 1, 1, 4).verify()

    def test_bierbrauer(self, gf9):
        assert bierbrauer_link(gf9, 1, 4, 0, 4).verify()

    def test_dempwolff(self, gf9):
        for alpha, eta in itertools.product(range(1, 9), range(1, 9)):
            try:
                link = dempwolff_link(gf9, 1, 1, alpha, eta)
            except ParameterError:
                continue
            assert link.verify()
            return
        pytest.fail("no valid Dempwolff parameters over GF(9)")

    def test_dempwolff_even_characteristic(self, gf4):
        assert dempwolff_link(gf4, 1, 1, 2, 0).verify()

    def test_zhou_pott(self, gf27):
        for link in zhou_pott_links(gf27, 1, 0, gf27.smallest_nonsquare()):
            assert link.verify(), link.name

    def test_taniguchi(self, gf9):
        links = taniguchi_links(gf9, 1, 4, 0, 4)
        assert [link.name for link in links] == ["taniguchi-prime", "taniguchi-star", "taniguchi-c1"]
        assert all(link.verify() for link in links)

    def test_twisted_cyclic(self, gf9):
        assert twisted_cyclic_link(find_irreducible(gf9, 2, 1), 4).verify()

    def test_halbecase(self, gf9):
        assert halbecase_isotopism(gf9, 1, 1, 4, 4).verify()
        assert halbecase_isotopism(gf9, 0, 1, 4, 2).verify()

    def test_halbecase_needs_involution(self, gf27):
        with pytest.raises(ParameterError, match="sigma\\^2"):
            halbecase_isotopism(gf27, 1, 1, 2, 2)

    def test_to_dict(self, gf9):
        data = dickson_link(gf9, 1, 1, 4).to_dict()
        assert data["name"] == "dickson"
        assert data["target"] == "dickson"


class TestParameterIsotopies:
    """Tests for invert_tau, invert_sigma and normalization."""

    def test_invert_tau_involution(self, member):
        assert invert_tau(invert_tau(member)) == member

    def test_invert_sigma_needs_eta(self, member):
        with pytest.raises(ParameterError, match="eta != 0"):
            invert_sigma(member.model_copy(update={"eta": 0}))

    def test_links_verify(self, member):
        links = prop_isotopies(member)
        assert [link.name for link in links] == ["invert-tau", "invert-sigma"]
        assert all(link.verify() for link in links)

    def test_normalize_large_exponents(self, member):
        far = invert_tau(invert_sigma(member))
        assert (far.k, far.l) == (4, 3)
        back = normalize(far)
        assert (back.k, back.l) == (1, 2)

    def test_normalize_rejects_equal_exponents(self, member):
        with pytest.raises(ClassifierInapplicable, match="sigma != tau"):
            normalize(member.model_copy(update={"l": 1}))

    def test_normalize_rejects_quadratic(self):
        with pytest.raises(ClassifierInapplicable):
            normalize(NewFamilyParams(p=3, m=2, k=1, l=1, alpha=4, eta=4))

    def test_alpha_must_be_in_field(self):
        with pytest.raises(ValueError, match="encoded elements"):
            NewFamilyParams(p=3, m=2, k=1, l=1, alpha=9)


class TestClassifyPair:
    """Tests for the isotopism criterion inside the new family."""

    def test_same_parameters(self, member):
        verdict = classify_pair(member, member)
        assert verdict.isotopic
        assert verdict.rho == 0
        assert verdict.d == 2

    def test_other_nonsquare_alpha(self, member, gf243):
        other = member.model_copy(update={"alpha": int(gf243.power(member.alpha, 3))})
        assert new_family_isotopic(member, other)

    def test_swapped_exponents(self, member):
        swapped = member.model_copy(update={"k": 2, "l": 1})
        verdict = classify_pair(member, swapped)
        assert not verdict.isotopic
        assert verdict.rho is None

    def test_across_normalization(self, member):
        assert new_family_isotopic(member, invert_tau(invert_sigma(member)))

    def test_different_fields(self, member):
        with pytest.raises(ParameterError, match="same field"):
            classify_pair(member, NewFamilyParams(p=3, m=7, k=1, l=2, alpha=2, eta=2))

    def test_invalid_member(self, member):
        with pytest.raises(ParameterError):
            classify_pair(member, member.model_copy(update={"eta": 1}))

    def test_eta_zero_flagged(self, member, caplog):
        zero = member.model_copy(update={"eta": 0})
        verdict = classify_pair(zero, zero)
        assert verdict.flags == (FLAG_ETA_ZERO,)
        assert "outside the counted family" in caplog.text

    def test_to_dict(self, member):
        data = classify_pair(member, member).to_dict()
        assert data["isotopic"] is True
        assert len(data["normalized"]) == 2

    def test_zhou_pott_member(self, member):
        assert zhou_pott_member(member)
        assert not zhou_pott_member(member.model_copy(update={"eta": 0}))

    def test_zhou_pott_vacuous_in_characteristic_2(self):
        params = NewFamilyParams(p=2, m=5, k=1, l=2, alpha=3, eta=3)
        assert not zhou_pott_member(params)


class TestCounting:
    """Tests for isotopism class counts and their bounds."""

    @pytest.mark.parametrize(
        ("p", "m", "k", "l", "expected"),
        [
            (3, 5, 1, 2, 1),
            (5, 5, 1, 2, 3),
            (3, 10, 1, 2, 2),
        ],
    )
    def test_known_values(self, p, m, k, l, expected):
        assert new_family_count(p, m, k, l).exact == expected

    def test_bounds(self):
        report = new_family_count(5, 5, 1, 2)
        assert report.lower <= report.exact <= report.upper
        assert report.norm_values == 3
        assert report.d == 2

    def test_eta_zero_tallied_apart(self):
        assert new_family_count(3, 5, 1, 2).eta_zero_classes == 1

    def test_sweep_within_bounds(self):
        for m in range(5, 9):
            report = new_family_count(3, m, 1, 2)
            assert report.lower <= report.exact <= report.upper

    def test_hypotheses(self):
        with pytest.raises(ClassifierInapplicable):
            new_family_count(3, 4, 1, 2)


class TestCentralizer:
    """Tests for the centralizer of the gamma autotopisms."""

    @pytest.mark.parametrize(
        ("p", "m", "k", "l", "expected"),
        [
            (2, 5, 1, 2, 31),
            (3, 4, 1, 2, 640),
            (2, 5, 1, 3, 31),
        ],
    )
    def test_known_values(self, p, m, k, l, expected):
        assert centralizer_count(p, m, k, l) == expected
        assert centralizer_formula(p, m, k) == expected

    def test_refused_above_cost_limit(self):
        with pytest.raises(SearchRefused, match="slow=True"):
            centralizer_count(3, 10, 1, 2)

    def test_slow_overrides_limit(self):
        set_settings(SemifieldSettings(cost_limit=100))
        with pytest.raises(SearchRefused):
            centralizer_count(3, 4, 1, 2)
        assert centralizer_count(3, 4, 1, 2, slow=True) == 640

    def test_sigma_equals_tau_inverse(self):
        with pytest.raises(ParameterError, match="tau"):
            centralizer_count(3, 4, 1, 3)


class TestInvariants:
    """Tests for the cheap invariants compared before any search."""

    def test_new_family_record(self, gf9):
        record = invariants(new_family(gf9, 1, 1, 4, 4))
        assert record.order == 81
        assert record.eta_norm == 2
        assert record.alpha_class == 1

    def test_new_family_order_6561(self):
        # (3, 4, 1, 2) with N(eta) = 2: nuclei multiset {3, 3, 9}
        gf81 = field_new(3, 4)
        S = new_family(gf81, 1, 2, gf81.smallest_non_power(4), gf81.smallest_nonsquare())
        record = invariants(S)
        assert record.order == 6561
        assert record.nuclei_multiset == (3, 3, 9)
        assert record.eta_norm == 2
        assert record.alpha_class != 0

    def test_other_families_have_no_classifier_data(self, gf4):
        record = invariants(knuth2(gf4, 1, 2))
        assert record.eta_norm is None
        assert not record.commutative

    def test_nuclei_rule_out_isotopy(self, gf4):
        field = invariants(field_multiplication(gf4))
        proper = invariants(knuth2(gf4, 1, 2))
        assert field.nuclei_multiset == (16, 16, 16)
        assert field.rules_out_isotopy(proper)
        assert not proper.rules_out_isotopy(proper)
