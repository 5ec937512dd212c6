"""Tests for presemifield JSON files and spread-set text."""

import json

import numpy as np
import pytest

from chuk_semifield.errors import ParameterError
from chuk_semifield.families import knuth2, new_family
from chuk_semifield.io import (
    dumps,
    export_spread_set,
    import_spread_set,
    load_presemifield,
    presemifield_from_dict,
    save_presemifield,
)


class TestJson:
    """Tests for the full JSON record."""

    def test_save_and_load(self, gf9, tmp_path):
        S = new_family(gf9, 1, 1, 4, 4)
        path = tmp_path / "s.json"
        save_presemifield(S, path)
        back = load_presemifield(path)
        assert back.same_constants(S)
        assert back.label == "new-family"
        assert back.ctx.modulus == gf9.modulus

    def test_dumps_sorted(self, gf4):
        text = dumps(knuth2(gf4, 1, 2).to_dict())
        assert text.endswith("\n")
        keys = list(json.loads(text))
        assert keys == sorted(keys)

    def test_dumps_numpy_values(self):
        assert json.loads(dumps({"g": np.int64(3), "v": np.arange(2)})) == {"g": 3, "v": [0, 1]}

    def test_dumps_rejects_objects(self):
        with pytest.raises(TypeError, match="cannot serialise"):
            dumps({"x": object()})

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ParameterError, match="not valid JSON"):
            load_presemifield(path)

    def test_not_an_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(ParameterError, match="JSON object"):
            load_presemifield(path)

    def test_missing_key(self):
        with pytest.raises(ParameterError, match="structure_constants"):
            presemifield_from_dict({"p": 2, "m": 2, "d": 2})

    @pytest.mark.parametrize("p", ["two", None, [2]])
    def test_non_integer_header(self, p):
        with pytest.raises(ParameterError, match="must be integers"):
            presemifield_from_dict({"p": p, "m": 2, "d": 2, "structure_constants": [0] * 64})

    @pytest.mark.parametrize("constants", [["x"] * 64, [[0, 1], [0]]])
    def test_non_integer_constants(self, constants):
        with pytest.raises(ParameterError, match="must be integers"):
            presemifield_from_dict({"p": 2, "m": 2, "d": 2, "structure_constants": constants})

    def test_zero_dimension(self):
        with pytest.raises(ParameterError, match="d must be positive"):
            presemifield_from_dict({"p": 2, "m": 2, "d": 0, "structure_constants": []})

    def test_wrong_size(self):
        with pytest.raises(ParameterError, match="expected 64"):
            presemifield_from_dict({"p": 2, "m": 2, "d": 2, "structure_constants": [0] * 8})

    def test_out_of_range(self):
        with pytest.raises(ParameterError, match="0..1"):
            presemifield_from_dict({"p": 2, "m": 2, "d": 2, "structure_constants": [2] * 64})

    def test_missing_metadata_marks_import(self, gf4):
        data = knuth2(gf4, 1, 2).to_dict()
        del data["metadata"]
        assert presemifield_from_dict(data).metadata["construction"] == "imported"


class TestSpreadText:
    """Tests for the spread-set text format."""

    def test_export_and_import(self, gf4, tmp_path):
        S = knuth2(gf4, 1, 2)
        path = tmp_path / "s.spread"
        export_spread_set(S, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "2 2 4"
        assert len(lines) == 17
        assert import_spread_set(path).same_constants(S)

    def test_empty(self, tmp_path):
        path = tmp_path / "empty.spread"
        path.write_text("")
        with pytest.raises(ParameterError, match="empty"):
            import_spread_set(path)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "h.spread"
        path.write_text("2 2\n")
        with pytest.raises(ParameterError, match="p m n"):
            import_spread_set(path)

    def test_wrong_line_count(self, gf4, tmp_path):
        path = tmp_path / "short.spread"
        export_spread_set(knuth2(gf4, 1, 2), path)
        path.write_text("\n".join(path.read_text().splitlines()[:-1]) + "\n")
        with pytest.raises(ParameterError, match="expected 16 lines"):
            import_spread_set(path)

    def test_not_additive(self, gf4, tmp_path):
        path = tmp_path / "broken.spread"
        export_spread_set(knuth2(gf4, 1, 2), path)
        lines = path.read_text().splitlines()
        # index 3 = e_0 + e_1
        lines[4] = "0 0 0 0"
        path.write_text("\n".join(lines) + "\n")
        with pytest.raises(ParameterError, match="line 5"):
            import_spread_set(path)
