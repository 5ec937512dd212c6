"""Isotopism: verification, exhaustive search, explicit links and classification."""

from chuk_semifield.equivalence.classify import (
    ClassifierVerdict,
    CountReport,
    NewFamilyParams,
    centralizer_count,
    centralizer_formula,
    classify_pair,
    invert_sigma,
    invert_tau,
    new_family_count,
    new_family_isotopic,
    normalize,
    zhou_pott_member,
)
from chuk_semifield.equivalence.explicit import (
    ExplicitIsotopism,
    bierbrauer_link,
    dempwolff_link,
    dickson_link,
    fp_map,
    halbecase_isotopism,
    knuth1_link,
    knuth2_link,
    prop_isotopies,
    taniguchi_links,
    twisted_cyclic_link,
    zhou_pott_links,
)
from chuk_semifield.equivalence.invariants import InvariantRecord, invariants
from chuk_semifield.equivalence.isotopy import (
    IsotopyWitness,
    brute_force_isotopic,
    compose_isotopisms,
    verify_isotopism,
)

__all__ = [
    # Isotopisms
    "verify_isotopism",
    "compose_isotopisms",
    "brute_force_isotopic",
    "IsotopyWitness",
    # Explicit links
    "ExplicitIsotopism",
    "fp_map",
    "prop_isotopies",
    "halbecase_isotopism",
    "twisted_cyclic_link",
    "knuth1_link",
    "knuth2_link",
    "dickson_link",
    "bierbrauer_link",
    "dempwolff_link",
    "zhou_pott_links",
    "taniguchi_links",
    # Classification
    "NewFamilyParams",
    "ClassifierVerdict",
    "CountReport",
    "normalize",
    "invert_sigma",
    "invert_tau",
    "classify_pair",
    "new_family_isotopic",
    "new_family_count",
    "centralizer_count",
    "centralizer_formula",
    "zhou_pott_member",
    # Invariants
    "InvariantRecord",
    "invariants",
]
