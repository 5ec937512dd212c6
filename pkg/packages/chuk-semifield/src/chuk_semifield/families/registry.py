"""
Registry of named semifield families.

Pydantic-native: each entry pairs a builder with the schema its parameters
are validated against before anything is computed.

Usage:
    from chuk_semifield.families.registry import get_family_registry

    registry = get_family_registry()
    S = registry.build("knuth2", L, {"k": 1, "alpha": 2})
    registry.param_schema("knuth2")
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.families.base import FamilyParams
from chuk_semifield.families.bierbrauer import BierbrauerParams, bierbrauer, bierbrauer_transpose
from chuk_semifield.families.dempwolff import (
    DempwolffParams,
    dempwolff,
    dempwolff_operator_form,
)
from chuk_semifield.families.dickson import (
    DicksonBiprojectiveParams,
    DicksonParams,
    dickson,
    dickson_biprojective,
    dickson_transpose,
)
from chuk_semifield.families.fields import QuadraticFieldParams, quadratic_extension_field
from chuk_semifield.families.knuth import (
    KnuthParams,
    knuth1,
    knuth2,
    knuth2_biprojective,
    knuth3,
    knuth4,
)
from chuk_semifield.families.new_family import NewFamilyBuildParams, new_family
from chuk_semifield.families.taniguchi import (
    TaniguchiParams,
    taniguchi,
    taniguchi_prime,
    taniguchi_star,
    taniguchi_transpose,
)
from chuk_semifield.families.zhou_pott import ZhouPottParams, zhou_pott, zhou_pott_transpose
from chuk_semifield.gf import FieldCtx

Builder = Callable[..., PreSemifield]


class FamilyEntry(BaseModel):
    """One named family."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    builder: Builder
    params: type[FamilyParams]
    description: str = ""

    def validate_params(self, raw: dict[str, Any]) -> FamilyParams:
        return self.params.model_validate(raw)


class FamilyRegistry(BaseModel):
    """
    Registry for semifield families.

    Example:
        registry = FamilyRegistry()
        registry.register(FamilyEntry(name="knuth2", builder=knuth2, params=KnuthParams))

        S = registry.build("knuth2", L, {"k": 1, "alpha": 2})
    """

    model_config = {"arbitrary_types_allowed": True}

    _families: dict[str, FamilyEntry] = PrivateAttr(default_factory=dict)

    def register(self, entry: FamilyEntry) -> None:
        """
        Register a family.

        Raises:
            TypeError: If entry is not a FamilyEntry
            ValueError: If a family with the same name is already registered
        """
        if not isinstance(entry, FamilyEntry):
            raise TypeError(f"Expected FamilyEntry, got {type(entry).__name__}")
        if entry.name in self._families:
            raise ValueError(f"Family '{entry.name}' is already registered")
        self._families[entry.name] = entry

    def get(self, name: str) -> FamilyEntry:
        """
        Look up a family by name.

        Raises:
            KeyError: If no family with that name exists
        """
        if name not in self._families:
            raise KeyError(f"Unknown family: {name!r}. Registered: {self.family_names}")
        return self._families[name]

    def param_schema(self, name: str) -> dict[str, Any]:
        """JSON schema of the family's parameters."""
        return self.get(name).params.model_json_schema()

    def build(self, name: str, ctx: FieldCtx, raw: dict[str, Any]) -> PreSemifield:
        """Validate ``raw`` against the family schema, then construct."""
        entry = self.get(name)
        params = entry.validate_params(raw)
        return entry.builder(ctx, **params.model_dump())

    @property
    def family_names(self) -> list[str]:
        return list(self._families.keys())

    def items(self) -> Iterator[tuple[str, FamilyEntry]]:
        return iter(self._families.items())

    def __len__(self) -> int:
        return len(self._families)

    def __contains__(self, name: str) -> bool:
        return name in self._families

    def __repr__(self) -> str:
        return f"FamilyRegistry(families={self.family_names})"


_BUILTIN: tuple[tuple[str, Builder, type[FamilyParams], str], ...] = (
    ("dickson", dickson, DicksonParams, "Dickson semifields"),
    ("dickson-transpose", dickson_transpose, DicksonParams, "transpose formula of Dickson"),
    ("dickson-biprojective", dickson_biprojective, DicksonBiprojectiveParams,
     "commutative Dickson in biprojective coordinates"),
    ("knuth1", knuth1, KnuthParams, "Knuth I"),
    ("knuth2", knuth2, KnuthParams, "Knuth II (Hughes-Kleinfeld)"),
    ("knuth3", knuth3, KnuthParams, "Knuth III"),
    ("knuth4", knuth4, KnuthParams, "Knuth IV"),
    ("knuth2-biprojective", knuth2_biprojective, KnuthParams, "Knuth II at (y0^sigma, y1)"),
    ("bierbrauer", bierbrauer, BierbrauerParams, "Bierbrauer, delta = 1, gamma = 0"),
    ("bierbrauer-transpose", bierbrauer_transpose, BierbrauerParams,
     "transpose formula of Bierbrauer"),
    ("dempwolff", dempwolff, DempwolffParams, "Dempwolff, explicit form"),
    ("dempwolff-operator", dempwolff_operator_form, DempwolffParams,
     "Dempwolff, x0 y + x1 T(y) + eta x1^tau T^-1(y)"),
    ("zhou-pott", zhou_pott, ZhouPottParams, "Zhou-Pott commutative semifields"),
    ("zhou-pott-transpose", zhou_pott_transpose, ZhouPottParams, "transpose formula of Zhou-Pott"),
    ("taniguchi", taniguchi, TaniguchiParams, "Taniguchi"),
    ("taniguchi-prime", taniguchi_prime, TaniguchiParams, "Taniguchi, first component at sigma^-2"),
    ("taniguchi-transpose", taniguchi_transpose, TaniguchiParams, "transpose of taniguchi-prime"),
    ("taniguchi-star", taniguchi_star, TaniguchiParams, "taniguchi-transpose at (-x0/alpha, x1)"),
    ("new-family", new_family, NewFamilyBuildParams, "S_(sigma, tau, alpha, eta)"),
    ("quadratic-field", quadratic_extension_field, QuadraticFieldParams, "GF(q^2) on L^2"),
)


_default_registry: FamilyRegistry | None = None


def get_family_registry() -> FamilyRegistry:
    """Default registry with every built-in family; created on first access."""
    global _default_registry
    if _default_registry is None:
        registry = FamilyRegistry()
        for name, builder, params, description in _BUILTIN:
            registry.register(
                FamilyEntry(name=name, builder=builder, params=params, description=description)
            )
        _default_registry = registry
    return _default_registry
