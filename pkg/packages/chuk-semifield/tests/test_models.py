"""Tests for job specs."""

import pytest
from pydantic import ValidationError

from chuk_semifield.models import ClassificationReport, FieldSpec, JobSpec
from chuk_semifield.types import Command


class TestFieldSpec:
    """Tests for FieldSpec."""

    def test_context(self):
        ctx = FieldSpec(p=3, m=2, modulus=[1, 0, 1]).context()
        assert ctx.order == 9
        assert ctx.modulus == (1, 0, 1)

    def test_bounds(self):
        with pytest.raises(ValidationError):
            FieldSpec(p=1, m=2)


class TestJobSpec:
    """Tests for the per-command shape checks."""

    def test_build(self):
        job = JobSpec(
            command=Command.BUILD,
            field=FieldSpec(p=2, m=2),
            family="knuth2",
            params={"k": 1, "alpha": 2},
        )
        assert job.family == "knuth2"
        assert job.inputs == []

    def test_command_from_string(self):
        job = JobSpec.model_validate({"command": "count", "field": {"p": 3, "m": 5}})
        assert job.command == Command.COUNT

    def test_field_required(self):
        with pytest.raises(ValidationError, match="needs a field"):
            JobSpec(command=Command.COUNT)

    def test_input_count(self, tmp_path):
        with pytest.raises(ValidationError, match="takes 2 input"):
            JobSpec(command=Command.ISOTOPIC, inputs=[tmp_path / "a.json"])

    def test_unknown_family(self):
        with pytest.raises(ValidationError, match="unknown family"):
            JobSpec(command=Command.BUILD, field=FieldSpec(p=2, m=2), family="albert")

    def test_family_params_validated(self):
        with pytest.raises(ValidationError):
            JobSpec(command=Command.BUILD, field=FieldSpec(p=2, m=2), family="knuth2", params={"k": 1})

    def test_extra_key(self):
        with pytest.raises(ValidationError):
            JobSpec.model_validate({"command": "selftest", "threads": 2})


class TestClassificationReport:
    """Tests for ClassificationReport defaults."""

    def test_defaults(self):
        report = ClassificationReport(params=[], verdict={"isotopic": True})
        assert report.witness is None
        assert report.invariants == []
