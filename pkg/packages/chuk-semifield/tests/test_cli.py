"""Tests for the command-line front end."""

import json

import pytest

from chuk_semifield import cli
from chuk_semifield.errors import ConsistencyError
from chuk_semifield.gf import field_new
from chuk_semifield.io import load_presemifield

KNUTH2_GF4 = '{"k": 1, "alpha": 2}'


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 else None), err


@pytest.fixture
def hk16_file(tmp_path, capsys):
    path = tmp_path / "hk16.json"
    code, _, _ = run(capsys, "build", "--p", "2", "--m", "2", "--family", "knuth2", "--params", KNUTH2_GF4, "--out", str(path))
    assert code == 0
    return path


@pytest.fixture
def tight_settings(tmp_path):
    path = tmp_path / "tight.yaml"
    path.write_text("cost_limit: 100\n")
    return str(path)

class TestParser:
    """Tests for argument parsing."""

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["--version"])
        assert exc.value.code == 0
        assert "chuk-semifield" in capsys.readouterr().out

    def test_command_required(self):
        with pytest.raises(SystemExit):
            cli.main([])

    def test_job_from_args(self):
        args = cli.build_parser().parse_args(["count", "--p", "3", "--m", "5", "--k", "1", "--l", "2"])
        job = cli.job_from_args(args)
        assert job.params == {"k": 1, "l": 2}
        assert job.field.p == 3


class TestCommands:
    """Each subcommand prints a JSON payload and exits 0."""

    def test_field_info(self, capsys):
        code, payload, _ = run(capsys, "field-info", "--p", "3", "--m", "2", "--modulus", "1,0,1")
        assert code == 0
        assert payload["order"] == 9
        assert payload["modulus"] == [1, 0, 1]
        assert payload["smallest_nonsquare"] == 4

    def test_build(self, hk16_file):
        S = load_presemifield(hk16_file)
        assert S.label == "knuth2"
        assert S.order == 16

    def test_verify(self, capsys, hk16_file):
        code, payload, _ = run(capsys, "verify", "--in", str(hk16_file))
        assert code == 0
        assert payload["axioms"]["ok"] is True

    def test_nuclei(self, capsys, hk16_file):
        code, payload, _ = run(capsys, "nuclei", "--in", str(hk16_file))
        assert code == 0
        assert set(payload["nuclei"]) == {"left", "middle", "right"}

    def test_orbit(self, capsys, hk16_file):
        code, payload, _ = run(capsys, "orbit", "--in", str(hk16_file))
        assert code == 0
        assert payload["size"] == len(payload["members"])

    def test_dual_writes_file(self, capsys, hk16_file, tmp_path):
        out = tmp_path / "dual.json"
        code, payload, _ = run(capsys, "dual", "--in", str(hk16_file), "--out", str(out))
        assert code == 0
        assert payload["label"] == "dual(knuth2)"
        assert load_presemifield(out).same_constants(load_presemifield(hk16_file).dual())

    def test_transpose(self, capsys, hk16_file):
        code, payload, _ = run(capsys, "transpose", "--in", str(hk16_file))
        assert code == 0
        assert payload["label"] == "transpose(knuth2)"

    def test_spread(self, capsys, hk16_file, tmp_path):
        out = tmp_path / "hk16.spread"
        code, payload, _ = run(capsys, "spread", "--in", str(hk16_file), "--out", str(out))
        assert code == 0
        assert payload["members"] == 16
        assert out.read_text().startswith("2 2 4\n")

    def test_isotopic_same_file(self, capsys, hk16_file):
        code, payload, _ = run(capsys, "isotopic", "--in", str(hk16_file), "--in", str(hk16_file))
        assert code == 0
        assert payload["isotopic"] is True
        assert "witness" in payload

    def test_classify(self, capsys):
        ns = field_new(3, 5).smallest_nonsquare()
        member = json.dumps({"k": 1, "l": 2, "alpha": ns, "eta": ns})
        code, payload, _ = run(capsys, "classify", "--p", "3", "--m", "5", "--first", member, "--second", member)
        assert code == 0
        assert payload["verdict"]["isotopic"] is True
        assert payload["bounds"]["exact"] == 1
        assert payload["invariants"] == []

    def test_count_to_file(self, capsys, tmp_path):
        out = tmp_path / "count.json"
        code, payload, _ = run(capsys, "count", "--p", "5", "--m", "5", "--k", "1", "--l", "2", "--out", str(out))
        assert code == 0
        assert payload["exact"] == 3
        assert json.loads(out.read_text())["exact"] == 3

    def test_centralizer(self, capsys):
        code, payload, _ = run(capsys, "centralizer", "--p", "3", "--m", "4", "--k", "1", "--l", "2")
        assert code == 0
        assert payload == {"count": 640, "formula": 640}

    def test_run_job(self, capsys, tmp_path):
        job = tmp_path / "job.yaml"
        job.write_text("command: count\nfield:\n  p: 3\n  m: 10\nparams:\n  k: 1\n  l: 2\n")
        code, payload, _ = run(capsys, "run", "--job", str(job))
        assert code == 0
        assert payload["exact"] == 2


class TestExitCodes:
    """Parameter errors exit 1, consistency failures exit 2."""

    def test_invalid_family_parameters(self, capsys):
        # X^4 = 2 has a root in GF(9)
        code, _, err = run(capsys, "build", "--p", "3", "--m", "2", "--family", "knuth2", "--params", '{"k": 1, "alpha": 2}')
        assert code == 1
        assert "no roots" in err

    def test_malformed_params(self, capsys):
        code, _, err = run(capsys, "build", "--p", "2", "--m", "2", "--family", "knuth2", "--params", "{k: 1}")
        assert code == 1
        assert "malformed JSON" in err

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "build", "--p", "2", "--m", "2", "--family", "albert")
        assert code == 1
        assert "unknown family" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", "--in", str(tmp_path / "missing.json"))
        assert code == 1

    def test_classifier_inapplicable(self, capsys):
        member = json.dumps({"k": 1, "l": 1, "alpha": 2, "eta": 2})
        code, _, err = run(capsys, "classify", "--p", "3", "--m", "5", "--first", member, "--second", member)
        assert code == 1
        assert "classifier inapplicable" in err

    def test_classify_needs_both_members(self, capsys):
        job_cmd = ["classify", "--p", "3", "--m", "5", "--first", "{}", "--second", "{}"]
        code, _, _ = run(capsys, *job_cmd)
        assert code == 1

    def test_bad_settings_file(self, capsys, tmp_path):
        settings = tmp_path / "settings.yaml"
        settings.write_text("- 1\n")
        code, _, err = run(capsys, "--settings", str(settings), "centralizer", "--p", "2", "--m", "5", "--k", "1", "--l", "2")
        assert code == 1
        assert "mapping" in err

    def test_malformed_record(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"p": "two", "m": 2, "d": 2, "structure_constants": [0] * 64}))
        code, _, err = run(capsys, "verify", "--in", str(path))
        assert code == 1
        assert "parameter error" in err

    def test_consistency_error(self, capsys, monkeypatch):
        def broken(job):
            raise ConsistencyError("two computations disagree")

        monkeypatch.setattr(cli, "execute", broken)
        code, _, err = run(capsys, "centralizer", "--p", "2", "--m", "5", "--k", "1", "--l", "2")
        assert code == 2
        assert "consistency error" in err


class TestCostLimit:
    """Work estimated above cost_limit is refused unless --slow is given."""

    def test_centralizer_refused_by_default(self, capsys):
        # 2 (3^10 - 1)^2 cells, about 7e9
        code, _, err = run(capsys, "centralizer", "--p", "3", "--m", "10", "--k", "1", "--l", "2")
        assert code == 1
        assert "--slow" in err

    def test_centralizer_slow(self, capsys, tight_settings):
        argv = ["--settings", tight_settings, "centralizer", "--p", "3", "--m", "4", "--k", "1", "--l", "2"]
        code, _, err = run(capsys, *argv)
        assert code == 1
        assert "cost_limit" in err
        code, payload, _ = run(capsys, *argv, "--slow")
        assert code == 0
        assert payload["count"] == 640

    def test_build_refused(self, capsys, tight_settings):
        base = ["--settings", tight_settings, "build", "--p", "2", "--m", "2", "--family", "knuth2"]
        code, _, err = run(capsys, *base, "--params", KNUTH2_GF4)
        assert code == 1
        assert "axiom check of knuth2" in err
        unchecked = '{"k": 1, "alpha": 2, "check": false}'
        code, _, _ = run(capsys, *base, "--params", unchecked)
        assert code == 0

    @pytest.mark.parametrize("command", ["verify", "nuclei", "orbit"])
    def test_file_commands_refused(self, capsys, hk16_file, tight_settings, command):
        argv = ["--settings", tight_settings, command, "--in", str(hk16_file)]
        code, _, err = run(capsys, *argv)
        assert code == 1
        assert "cost_limit" in err
        code, _, _ = run(capsys, *argv, "--slow")
        assert code == 0


class TestReproducibility:
    """Identical jobs print identical bytes."""

    @pytest.mark.slow
    def test_crosscheck_twice(self, capsys):
        outputs = []
        for _ in range(2):
            assert cli.main(["crosscheck", "--max-order", "16"]) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert "seconds" not in outputs[0]
