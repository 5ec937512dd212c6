"""Exception hierarchy.

ParameterError covers everything the caller can fix by choosing other
inputs. ConsistencyError means an identity that must hold did not: it is
raised instead of returning a wrong answer.
"""

from __future__ import annotations


class SemifieldError(Exception):
    """Base class for all chuk-semifield errors."""


class ParameterError(SemifieldError, ValueError):
    """A parameter condition is violated."""


class FieldError(ParameterError):
    """Unsupported field, bad modulus, or a field-domain error such as 1/0."""


class BiadditivityError(ParameterError):
    """A multiplication handed to from_multiplication is not bi-additive."""


class ClassifierInapplicable(ParameterError):
    """Parameters fall outside the hypotheses of the isotopy classifier."""


class SearchRefused(ParameterError):
    """Exhaustive work was requested above the allowed order or cost."""


class ConsistencyError(SemifieldError, AssertionError):
    """Two independent computations of the same fact disagree."""
