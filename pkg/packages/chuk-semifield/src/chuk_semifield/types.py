"""Shared enums and constants for chuk-semifield.

Everything that is referred to by name across modules lives here so that
string literals stay in one place.
"""

from __future__ import annotations

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__  # type: ignore[assignment]
from typing import Final

# =============================================================================
# FIELD TABLE
# =============================================================================

SUPPORTED_PRIMES: Final[tuple[int, ...]] = (2, 3, 5, 7)
MAX_TABLE_DEGREE: Final[int] = 10
MAX_DEGREE: Final[int] = 20
MAX_ORDER: Final[int] = 2**32


class ArithOp(StrEnum):
    """Field operations accepted by FieldCtx.arith."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    INV = "inv"
    NEG = "neg"
    POW = "pow"


class GcdKind(StrEnum):
    """The three integer gcd shapes p^k±1 vs p^l±1."""

    MINUS_MINUS = "minus-minus"
    PLUS_MINUS = "plus-minus"
    PLUS_PLUS = "plus-plus"


# =============================================================================
# ADMISSIBLE MAPPINGS AND CONSTRUCTIONS
# =============================================================================


class FamilyVariant(StrEnum):
    """Shapes of admissible mappings a -> T_a."""

    TRIVIAL = "trivial"
    DIAG = "diag"
    TRIANG = "triang"
    COMPOSED = "composed"


class ConstructionKind(StrEnum):
    """Provenance label of a presemifield."""

    C1 = "C1"
    C2 = "C2"
    TWISTED_CYCLIC = "twisted-cyclic"
    FAMILY = "family"
    FIELD = "field"
    DERIVED = "derived"
    IMPORTED = "imported"


class KnuthOp(StrEnum):
    """Operations generating the Knuth orbit."""

    DUAL = "dual"
    TRANSPOSE = "transpose"


# Labels of the six orbit members, in generation order.
KNUTH_ORBIT_LABELS: Final[tuple[str, ...]] = (
    "S",
    "dual",
    "transpose",
    "transpose.dual",
    "dual.transpose",
    "dual.transpose.dual",
)

# =============================================================================
# FLAGS RECORDED IN METADATA AND REPORTS
# =============================================================================

FLAG_TRIVIAL_EQUIVALENT: Final[str] = "trivial-equivalent"
FLAG_ETA_ZERO: Final[str] = "eta-zero-outside-counted-family"
FLAG_VACUOUS_ZP: Final[str] = "zhou-pott-membership-vacuous-in-char-2"
FLAG_UNCHECKED: Final[str] = "parameters-unchecked"


class CheckStatus(StrEnum):
    """Outcome of a single crosscheck/selftest item."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


# =============================================================================
# CLI
# =============================================================================


class Command(StrEnum):
    """Subcommands of the CLI, also the ``command`` field of a job file."""

    FIELD_INFO = "field-info"
    BUILD = "build"
    VERIFY = "verify"
    NUCLEI = "nuclei"
    ORBIT = "orbit"
    DUAL = "dual"
    TRANSPOSE = "transpose"
    SPREAD = "spread"
    ISOTOPIC = "isotopic"
    CLASSIFY = "classify"
    COUNT = "count"
    CENTRALIZER = "centralizer"
    CROSSCHECK = "crosscheck"
    SELFTEST = "selftest"


class ExitCode:
    """Process exit codes of the CLI."""

    OK: Final[int] = 0
    PARAMETER_ERROR: Final[int] = 1
    CONSISTENCY_ERROR: Final[int] = 2
