"""
chuk-semifield: finite semifields of order p^2m.

Two constructions, parametrised by a pair of semilinear maps on GF(p^m),
cover a large share of the known semifields of order p^2m. This package
provides:

1. FieldCtx - GF(p^m) arithmetic with Frobenius powers and norms
2. SemilinearMap / construction1 / construction2 - the two constructions
3. PreSemifield - structure constants, spread sets, Knuth orbit, nuclei
4. FamilyRegistry - the named families, built by name from validated params
5. Isotopism tools - verification, exhaustive search, explicit links
6. Classifier - isotopism classes and counts for the new family

Example:
    from chuk_semifield import field_new, get_family_registry, nuclei

    ctx = field_new(2, 2)
    S = get_family_registry().build("knuth2", ctx, {"k": 1, "alpha": 2})
    print(nuclei(S))
"""

from chuk_semifield.admissible import AdmissibleFamily, is_admissible
from chuk_semifield.config import (
    SemifieldSettings,
    get_settings,
    load_settings,
    reset_settings,
    set_settings,
)
from chuk_semifield.construct import construction1, construction2, twisted_cyclic
from chuk_semifield.core import (
    IsotopismTriple,
    NucleiTriple,
    PreSemifield,
    knuth_orbit,
    nuclei,
    spread_set,
    transpose,
)
from chuk_semifield.equivalence import (
    NewFamilyParams,
    brute_force_isotopic,
    classify_pair,
    invariants,
    new_family_count,
    verify_isotopism,
)
from chuk_semifield.errors import (
    BiadditivityError,
    ClassifierInapplicable,
    ConsistencyError,
    FieldError,
    ParameterError,
    SearchRefused,
    SemifieldError,
)
from chuk_semifield.families import FamilyRegistry, get_family_registry
from chuk_semifield.gf import FieldCtx, field_new
from chuk_semifield.semilinear import SemilinearMap, find_irreducible

__version__ = "1.0.0"

__all__ = [
    "__version__",
    # Config
    "SemifieldSettings",
    "get_settings",
    "set_settings",
    "reset_settings",
    "load_settings",
    # Errors
    "SemifieldError",
    "ParameterError",
    "FieldError",
    "BiadditivityError",
    "ClassifierInapplicable",
    "SearchRefused",
    "ConsistencyError",
    # Fields
    "FieldCtx",
    "field_new",
    # Semilinear maps and constructions
    "SemilinearMap",
    "find_irreducible",
    "AdmissibleFamily",
    "is_admissible",
    "construction1",
    "construction2",
    "twisted_cyclic",
    # Presemifields
    "PreSemifield",
    "IsotopismTriple",
    "NucleiTriple",
    "spread_set",
    "transpose",
    "knuth_orbit",
    "nuclei",
    # Families
    "FamilyRegistry",
    "get_family_registry",
    # Equivalence
    "NewFamilyParams",
    "classify_pair",
    "invariants",
    "new_family_count",
    "verify_isotopism",
    "brute_force_isotopic",
]
