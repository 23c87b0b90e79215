import importlib.resources
import io
import json

import pytest

from gradalg.cli import run_command

DATA = importlib.resources.files("gradalg") / "data"


def run(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--json", *argv)
    return code, json.loads(text)


def data(name):
    return str(DATA / name)


@pytest.mark.parametrize("command", [
    "check", "radical", "socle", "center", "grading-profile", "assoc-graded", "cartan", "ext",
    "regrade", "trivext", "gldim", "ext-vanishing", "cyclic", "hh1", "nakayama", "symform",
])
def test_every_command_runs_on_dual_numbers(command):
    code, out = run(command, data("kx2.json"))
    assert code in (0, 1), out
    assert out.strip()


def test_cartan_of_trivial_extension():
    code, out = run("cartan", "--graded", "--identity", data("tka2.json"))
    assert code == 0
    assert "C = [[1 + q, q], [1, 1 + q]]" in out
    assert "det = 1 + q + q^2" in out
    assert "identity PASS" in out


def test_json_output_is_parseable():
    code, doc = run_json("cartan", "--graded", data("tka2.json"))
    assert code == 0 and doc["exit_code"] == 0


def test_regrade_reports_witness():
    code, doc = run_json("regrade", data("kx2_negative.json"))
    assert code == 1
    assert doc["witness"]["weight"] < 0


def test_regrade_positive_shift():
    code, out = run("regrade", data("ka2_negative.json"))
    assert code == 0, out


def test_recognize_and_construct():
    assert run("recognize-trivext", data("tka2.json"))[0] == 0
    assert run("construct", data("exterior2_pm1.json"))[0] == 0
    assert run("construct", data("klein_z3.json"))[0] == 0


def test_lemmefonction_and_pairs():
    code, out = run("lemmefonction", data("distance_table.json"))
    assert code == 0, out
    code, out = run("pairs-check")
    assert code == 0, out


def test_field_override():
    code, out = run("--field", "F2", "hh1", data("kx2.json"))
    assert code == 0 and "F2" in out


def write(tmp_path, text, name="in.json"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_error_has_position(tmp_path):
    code, out = run("check", write(tmp_path, '{"field": "Q",\n "presentation": {'))
    assert code == 2
    assert "line 2" in out and "column" in out


def test_unknown_key_has_location(tmp_path):
    code, doc = run_json("check", write(tmp_path, '{"field": "Q", "presentaton": {}}'))
    assert code == 2 and doc["error"] == "input"
    assert doc["message"].startswith("$")


def test_twist_is_unsupported(tmp_path):
    code, out = run("check", write(tmp_path, '{"field": "Q", "construct": "exterior", "n": 2, '
                                             '"twist": [1]}'))
    assert code == 2
    assert "Unsupported" in out


def test_usage_errors():
    assert run("--field", "R", "check", data("kx2.json"))[0] == 2
    assert run("no-such-command")[0] == 2
    assert run("check", "/nonexistent/file.json")[0] == 2


def test_domain_error_exit_code():
    # the path algebra kA2 is not self-injective
    code, out = run("nakayama", data("ka2.json"))
    assert code == 1 and "NotSelfInjective" in out
