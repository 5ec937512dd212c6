"""Pydantic models for jobs and reports.

A ``JobSpec`` is what every CLI invocation turns into, whether it came from
argv or from a YAML job file; family parameters are validated against the
registry schema when the job is built, before anything is computed.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from chuk_semifield.families.registry import get_family_registry
from chuk_semifield.gf import FieldCtx, field_new
from chuk_semifield.types import Command


class FieldSpec(BaseModel):
    """GF(p^m), with an optional modulus listed lowest degree first."""

    model_config = ConfigDict(extra="forbid")

    p: int = Field(ge=2)
    m: int = Field(ge=1)
    modulus: list[int] | None = None

    def context(self) -> FieldCtx:
        return field_new(self.p, self.m, self.modulus)


# Commands that read one or two presemifield files
_NEEDS_INPUT: dict[Command, int] = {
    Command.VERIFY: 1,
    Command.NUCLEI: 1,
    Command.ORBIT: 1,
    Command.DUAL: 1,
    Command.TRANSPOSE: 1,
    Command.SPREAD: 1,
    Command.ISOTOPIC: 2,
}

_NEEDS_FIELD: frozenset[Command] = frozenset(
    {Command.FIELD_INFO, Command.BUILD, Command.CLASSIFY, Command.COUNT, Command.CENTRALIZER}
)


class JobSpec(BaseModel):
    """One unit of CLI work."""

    model_config = ConfigDict(extra="forbid")

    command: Command
    field: FieldSpec | None = None
    family: str | None = None
    params: dict[str, Any] = Field(default_factory=dict)
    inputs: list[Path] = Field(default_factory=list)
    output: Path | None = None
    slow: bool = False
    verbose: bool = False

    @model_validator(mode="after")
    def _check_shape(self) -> JobSpec:
        if self.command in _NEEDS_FIELD and self.field is None:
            raise ValueError(f"{self.command.value} needs a field (p, m)")
        needed = _NEEDS_INPUT.get(self.command, 0)
        if len(self.inputs) != needed:
            raise ValueError(f"{self.command.value} takes {needed} input file(s), got {len(self.inputs)}")
        if self.command == Command.BUILD:
            if self.family is None:
                raise ValueError("build needs a family name")
            registry = get_family_registry()
            if self.family not in registry:
                raise ValueError(f"unknown family {self.family!r}; registered: {registry.family_names}")
            registry.get(self.family).validate_params(self.params)
        return self


class ClassificationReport(BaseModel):
    """Classifier output for a pair of new-family members."""

    params: list[dict[str, Any]]
    verdict: dict[str, Any]
    witness: dict[str, Any] | None = None
    invariants: list[dict[str, Any]] = Field(default_factory=list)
    bounds: dict[str, Any] | None = None
