"""Tests for the named families and the family registry."""

import pytest
from pydantic import ValidationError

from chuk_semifield.core import spread_set, transpose, verify_gamma_autotopism
from chuk_semifield.errors import ParameterError
from chuk_semifield.families import (
    FamilyEntry,
    FamilyRegistry,
    bierbrauer,
    bierbrauer_transpose,
    dempwolff,
    dempwolff_operator_form,
    dickson,
    dickson_exponent,
    dickson_transpose,
    get_family_registry,
    knuth2,
    new_family,
    taniguchi_prime,
    taniguchi_transpose,
    unprimed,
    zhou_pott,
)
from chuk_semifield.families.knuth import KnuthParams
from chuk_semifield.types import FLAG_ETA_ZERO, FLAG_UNCHECKED

# In GF(9) = F_3[x]/(x^2 + 1): 4 = 1 + x is a nonsquare and not a 4th power.
VALID_GF9 = [
    ("dickson", {"k": 1, "l": 1, "r": 1, "alpha": 4}),
    ("dickson-transpose", {"k": 1, "l": 1, "r": 1, "alpha": 4}),
    ("dickson-biprojective", {"l": 1, "alpha": 4}),
    ("knuth1", {"k": 1, "alpha": 4}),
    ("knuth2", {"k": 1, "alpha": 4}),
    ("knuth3", {"k": 1, "alpha": 4}),
    ("knuth4", {"k": 1, "alpha": 4}),
    ("knuth2-biprojective", {"k": 1, "alpha": 4}),
    ("bierbrauer", {"k": 1, "alpha": 4, "eta": 4}),
    ("bierbrauer-transpose", {"k": 1, "alpha": 4, "eta": 4}),
    ("dempwolff", {"k": 1, "l": 1, "alpha": 4, "eta": 4}),
    ("zhou-pott", {"k": 0, "alpha": 4}),
    ("zhou-pott-transpose", {"k": 0, "alpha": 4}),
    ("taniguchi", {"k": 1, "alpha": 4, "eta": 4}),
    ("taniguchi-prime", {"k": 1, "alpha": 4, "eta": 4}),
    ("taniguchi-transpose", {"k": 1, "alpha": 4, "eta": 4}),
    ("taniguchi-star", {"k": 1, "alpha": 4, "eta": 4}),
    ("new-family", {"k": 1, "l": 1, "alpha": 4, "eta": 4}),
    ("quadratic-field", {"a": 4}),
]


class TestRegistry:
    """Tests for FamilyRegistry."""

    def test_builtins(self):
        registry = get_family_registry()
        assert len(registry) == 20
        assert "new-family" in registry
        assert registry.family_names[0] == "dickson"

    def test_singleton(self):
        assert get_family_registry() is get_family_registry()

    def test_unknown_family(self):
        with pytest.raises(KeyError, match="Unknown family"):
            get_family_registry().get("albert")

    def test_register_duplicate(self):
        registry = FamilyRegistry()
        entry = FamilyEntry(name="knuth2", builder=knuth2, params=KnuthParams)
        registry.register(entry)
        with pytest.raises(ValueError, match="already registered"):
            registry.register(entry)

    def test_register_wrong_type(self):
        with pytest.raises(TypeError, match="FamilyEntry"):
            FamilyRegistry().register("knuth2")

    def test_param_schema(self):
        schema = get_family_registry().param_schema("new-family")
        assert set(schema["properties"]) == {"k", "l", "alpha", "eta", "check"}

    def test_extra_params_rejected(self, gf9):
        with pytest.raises(ValidationError):
            get_family_registry().build("knuth2", gf9, {"k": 1, "alpha": 4, "gamma": 1})

    def test_bounds_enforced(self, gf9):
        with pytest.raises(ValidationError):
            get_family_registry().build("bierbrauer", gf9, {"k": 1, "alpha": 4, "beta": 2, "eta": 4})

    def test_items(self):
        names = [name for name, _ in get_family_registry().items()]
        assert names == get_family_registry().family_names


class TestEveryFamilyIsASemifield:
    """Every registered family with valid parameters over GF(9) has no zero divisors."""

    @pytest.mark.parametrize(("name", "params"), VALID_GF9)
    def test_axioms(self, gf9, name, params):
        S = get_family_registry().build(name, gf9, params)
        assert S.label == name
        assert S.verify_axioms().ok

    def test_knuth_over_gf4(self, gf4):
        for name in ("knuth1", "knuth2", "knuth3", "knuth4"):
            assert get_family_registry().build(name, gf4, {"k": 1, "alpha": 2}).verify_axioms().ok

    def test_unchecked_flag(self, gf9):
        S = knuth2(gf9, 1, 2, check=False)
        assert FLAG_UNCHECKED in S.metadata["flags"]


class TestParameterConditions:
    """Tests for the per-family parameter checks."""

    def test_knuth_rootless(self, gf9):
        # X^4 = 2 has a root in GF(9)
        with pytest.raises(ParameterError, match="no roots"):
            knuth2(gf9, 1, 2)

    def test_knuth_nontrivial_sigma(self, gf9):
        with pytest.raises(ParameterError, match="identity"):
            knuth2(gf9, 2, 4)

    def test_dickson_square_alpha(self, gf9):
        with pytest.raises(ParameterError, match="must not be"):
            dickson(gf9, 1, 1, 1, 2)

    def test_dickson_exponent(self, gf9):
        assert dickson_exponent(gf9, 1, 1, 1) == 2

    def test_bierbrauer_beta(self, gf9):
        with pytest.raises(ParameterError, match="beta must be 0 or 1"):
            bierbrauer(gf9, 1, 4, 2, 4)

    def test_bierbrauer_eta_square(self, gf9):
        with pytest.raises(ParameterError, match="sigma-1"):
            bierbrauer(gf9, 1, 4, 0, 2)

    def test_bierbrauer_has_no_parameters_at_order_16(self, gf4):
        # every element of GF(4) is a (sigma - 1)-st power
        for eta in range(1, 4):
            with pytest.raises(ParameterError, match="no valid choice"):
                bierbrauer(gf4, 1, 2, 0, eta)

    def test_dempwolff_needs_odd_p(self, gf4):
        with pytest.raises(ParameterError, match="odd"):
            dempwolff(gf4, 1, 1, 2, 0)

    @pytest.mark.parametrize("alpha", [2, 3])
    def test_dempwolff_operator_even_characteristic(self, gf4, alpha):
        S = get_family_registry().build("dempwolff-operator", gf4, {"k": 1, "l": 1, "alpha": alpha, "eta": 0})
        assert S.order == 16
        assert S.verify_axioms().ok

    @pytest.mark.parametrize("eta", [1, 2, 3])
    def test_dempwolff_operator_norm_condition_at_order_16(self, gf4, eta):
        with pytest.raises(ParameterError, match="norm condition"):
            dempwolff_operator_form(gf4, 1, 1, 2, eta)

    def test_dempwolff_norm(self, gf9):
        with pytest.raises(ParameterError, match="differ from 1"):
            dempwolff(gf9, 1, 1, 4, 1)

    def test_dempwolff_subfield(self, gf9):
        # tau = id fixes all of L, sigma fixes only F_3
        with pytest.raises(ParameterError, match="subfield"):
            dempwolff(gf9, 1, 0, 4, 4)

    def test_zhou_pott_odd_order(self, gf9):
        with pytest.raises(ParameterError, match="odd order"):
            zhou_pott(gf9, 1, 0, 4)

    def test_new_family_alpha(self, gf9):
        with pytest.raises(ParameterError, match="must not be a 2-th power"):
            new_family(gf9, 1, 1, 2, 4)

    def test_new_family_degree_one(self, gf8):
        with pytest.raises(ParameterError, match="d = 1"):
            new_family(gf8, 1, 1, 3, 0)

    def test_new_family_eta_zero_flag(self, gf9, caplog):
        S = new_family(gf9, 1, 1, 4, 0)
        assert FLAG_ETA_ZERO in S.metadata["flags"]
        assert "outside the counted family" in caplog.text


class TestStructure:
    """Tests for commutativity, transposes and biprojectivity."""

    def test_commutative_families(self, gf9, gf27):
        assert get_family_registry().build("dickson-biprojective", gf9, {"l": 1, "alpha": 4}).is_commutative()
        assert zhou_pott(gf27, 1, 0, gf27.smallest_nonsquare()).is_commutative()

    def test_dickson_transpose_formula(self, gf9):
        assert transpose(dickson(gf9, 1, 1, 1, 4)).same_constants(dickson_transpose(gf9, 1, 1, 1, 4))

    def test_bierbrauer_transpose_formula(self, gf9):
        assert transpose(bierbrauer(gf9, 1, 4, 0, 4)).same_constants(bierbrauer_transpose(gf9, 1, 4, 0, 4))

    def test_taniguchi_transpose_formula(self, gf9):
        assert transpose(taniguchi_prime(gf9, 1, 4, 0, 4)).same_constants(
            taniguchi_transpose(gf9, 1, 4, 0, 4)
        )

    def test_unprimed(self, gf9):
        # sigma^-2 = id on GF(9)
        assert unprimed(gf9, 1, 4, 3) == (4, 3)

    def test_new_family_biprojective(self, gf9):
        assert verify_gamma_autotopism(new_family(gf9, 1, 1, 4, 4), 1, 1)

    def test_dickson_biprojective_pair(self, gf9):
        S = get_family_registry().build("dickson-biprojective", gf9, {"l": 1, "alpha": 4})
        assert verify_gamma_autotopism(S, 0, 1)

    def test_spread_sets_valid(self, gf9):
        for name, params in VALID_GF9[:4]:
            assert spread_set(get_family_registry().build(name, gf9, params)).is_valid()

    def test_metadata(self, gf9):
        S = new_family(gf9, 1, 1, 4, 4)
        assert S.metadata["family"] == "new-family"
        assert S.metadata["params"] == {"k": 1, "l": 1, "alpha": 4, "eta": 4}

    def test_bierbrauer_transpose_builder(self, gf9):
        assert bierbrauer_transpose(gf9, 1, 4, 0, 4).label == "bierbrauer-transpose"
