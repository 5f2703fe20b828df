import json
from pathlib import Path

import jsonschema
import pytest

from ramac import cli
from ramac.catalog import CATALOG
from ramac.errors import CriterionViolated

DEMO = Path(__file__).resolve().parent.parent / "demo"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def spec(name):
    return DEMO / f"{name}.json"


def test_demo_files_match_catalog():
    for name, data in CATALOG.items():
        assert json.loads(spec(name).read_text()) == data


def test_ramify_table(capsys):
    code, out, _ = run(capsys, "ramify", "--spec", spec("p2b1"))
    assert code == 0
    assert "lower breaks b = [1]" in out
    assert "different d = 2" in out
    assert "upper breaks u = [1]" in out
    assert "criterion residue r* = 1" in out


def test_check_line(capsys):
    code, out, _ = run(capsys, "check", "t*x1", "--spec", spec("p2b1"))
    assert code == 0
    assert out == "v_L=1, class 1 = r*, generator: yes\n"
    code, out, _ = run(capsys, "check", "1", "--spec", spec("p2b1"))
    assert out == "v_L=0, class 0 != r* = 1, generator: no\n"


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--spec", spec("p2b1b3"), "--trials", 50, "--seed", 7)
    assert code == 0
    assert "50/50" in out and "result: PASS" in out


def test_byte_identical(capsys, tmp_path):
    args = ["verify", "--spec", spec("p3b1"), "--trials", 10, "--seed", 3, "--format", "json"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    _, c, _ = run(capsys, *args[:-4], "--seed", 4, "--format", "json")
    assert c != a


COMMANDS = [
    ["ramify", "--spec", "p3b1b2"],
    ["euler", "--spec", "p2b1b3"],
    ["check", "t^-1*x1 + x2", "--spec", "p2b1b3"],
    ["verify", "--spec", "p5b2", "--trials", "6"],
    ["trace-ideal", "--spec", "p3b2", "--k-min", "-1", "--k-max", "1"],
    ["counterexample", "tame"],
    ["counterexample", "unramified", "--q", "3", "--f", "2"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0] + "-" + a[-1])
def test_json_output_validates(capsys, tmp_path, argv):
    argv = [str(spec(a)) if a in CATALOG else a for a in argv]
    out_path = tmp_path / "out.json"
    code, out, _ = run(capsys, *argv, "--format", "json", "--json", out_path)
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, cli.load_schema("output"))
    assert out_path.read_text() == out
    assert payload["ok"] is True


def test_catalog_fallback_without_file(capsys, tmp_path):
    code, out, _ = run(capsys, "ramify", "--spec", tmp_path / "p2b3.json")
    assert code == 0 and "b = [3]" in out


@pytest.mark.parametrize(
    "payload",
    [{"p": 7, "rhs": ["t^-1"]}, {"p": 2, "rhs": []}, {"p": 2, "rhs": ["t^-1"], "extra": 1}, {"p": 2, "rhs": ["t^"]},
     {"p": 2, "rhs": ["t^-1", "t^-1"]}, {"p": 3, "rhs": ["t^2"]}],
)
def test_bad_spec_exit_two(capsys, tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    code, _, err = run(capsys, "ramify", "--spec", path)
    assert code == 2 and "ramac: error" in err


def test_bad_input_exit_two(capsys, tmp_path):
    assert run(capsys, "ramify", "--spec", tmp_path / "missing.json")[0] == 2
    (tmp_path / "junk.json").write_text("{")
    assert run(capsys, "ramify", "--spec", tmp_path / "junk.json")[0] == 2
    code, _, err = run(capsys, "check", "t^", "--spec", spec("p2b1"))
    assert code == 2 and "offset 2" in err
    assert run(capsys, "check", "x3", "--spec", spec("p2b1"))[0] == 2
    assert run(capsys, "check", "(1+t)^-1", "--spec", spec("p2b1"))[0] == 2
    assert run(capsys, "verify", "--spec", spec("p2b1"), "--trials", 0)[0] == 2
    assert run(capsys, "trace-ideal", "--spec", spec("p2b1"), "--k-min", 2, "--k-max", 1)[0] == 2
    assert run(capsys, "counterexample", "tame", "--q", 4, "--e", 2)[0] == 2


def test_check_failure_exit_one(capsys, monkeypatch):
    def boom(*a, **k):
        raise CriterionViolated("forced")

    monkeypatch.setattr(cli, "verify_criterion", boom)
    code, _, err = run(capsys, "verify", "--spec", spec("p2b1"))
    assert code == 1 and "forced" in err
    monkeypatch.setattr(cli, "is_normal_generator", lambda *a: False)
    code, out, _ = run(capsys, "check", "x1", "--spec", spec("p2b1"))
    assert code == 1 and "generator: no" in out


def test_printed_elements_reparse(capsys):
    from ramac.catalog import catalog_tower
    from ramac.expr import parse_element

    _, out, _ = run(capsys, "verify", "--spec", spec("p2b1b3"), "--trials", 2, "--format", "json")
    T = catalog_tower("p2b1b3")
    for w in json.loads(out)["report"]["witnesses"].values():
        num = w["element"]["numerator"]
        assert str(parse_element(num, T)) == num
