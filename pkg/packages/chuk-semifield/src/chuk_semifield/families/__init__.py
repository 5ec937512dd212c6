"""Named semifield families and the registry that exposes them by name."""

from chuk_semifield.families.bierbrauer import bierbrauer, bierbrauer_transpose
from chuk_semifield.families.dempwolff import dempwolff, dempwolff_map, dempwolff_operator_form
from chuk_semifield.families.dickson import (
    dickson,
    dickson_biprojective,
    dickson_exponent,
    dickson_transpose,
)
from chuk_semifield.families.fields import field_multiplication, quadratic_extension_field
from chuk_semifield.families.knuth import knuth1, knuth2, knuth2_biprojective, knuth3, knuth4
from chuk_semifield.families.new_family import new_family, require_admissible_alpha
from chuk_semifield.families.registry import (
    FamilyEntry,
    FamilyRegistry,
    get_family_registry,
)
from chuk_semifield.families.taniguchi import (
    taniguchi,
    taniguchi_prime,
    taniguchi_star,
    taniguchi_transpose,
    unprimed,
)
from chuk_semifield.families.zhou_pott import zhou_pott, zhou_pott_transpose

__all__ = [
    # Registry
    "FamilyEntry",
    "FamilyRegistry",
    "get_family_registry",
    # Dickson
    "dickson",
    "dickson_transpose",
    "dickson_biprojective",
    "dickson_exponent",
    # Knuth
    "knuth1",
    "knuth2",
    "knuth3",
    "knuth4",
    "knuth2_biprojective",
    # Bierbrauer, Dempwolff
    "bierbrauer",
    "bierbrauer_transpose",
    "dempwolff",
    "dempwolff_map",
    "dempwolff_operator_form",
    # Zhou-Pott, Taniguchi
    "zhou_pott",
    "zhou_pott_transpose",
    "taniguchi",
    "taniguchi_prime",
    "taniguchi_transpose",
    "taniguchi_star",
    "unprimed",
    # New family
    "new_family",
    "require_admissible_alpha",
    # Fields
    "quadratic_extension_field",
    "field_multiplication",
]
