import io
import json
import re
import subprocess
import sys

import pytest

from hwmod.cli import CliRequest, main, parse_request


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_examples():
    code, text = run("classify", "sp:6", "--", "-3,-3,-4,-4,-6,-7")
    assert code == 0 and text.splitlines()[-1] == "UnitaryDiscrete ℓ=1 (first reduction)"
    code, text = run("classify", "sp:3", "--", "-1/4,-1/4,-1/4")
    assert code == 10 and text.splitlines()[-1] == "NonUnitaryGap i=1"
    code, text = run("classify", "su:2,2", "--", "-1,-1,0,0")
    assert code == 0 and text.splitlines()[-1] == "UnitaryDiscrete i=2"


def test_classify_json():
    code, text = run("classify", "so*:4", "--format", "json", "--", "-3,-4,-4,-4")
    d = json.loads(text)
    assert code == 0
    assert d["outcome"] == "UnitaryContinuous" and d["shape"] == {"case": 1, "q": 4}
    assert d["weight"] == ["-3", "-4", "-4", "-4"] and set(d["line"]) == {"z", "a"}


def test_scan_examples():
    code, text = run("scan", "sp:6", "--level", "12", "--", "-4,-4,-5,-5,-7,-8")
    assert code == 0 and text.strip() == "AllStrictUpTo(12)"
    code, text = run("scan", "sp:3", "--level", "6", "--", "-1/4,-1/4,-1/4")
    assert code == 10 and text.startswith("FirstStrictFailure at level=2")
    code, text = run("scan", "sp:2", "--level", "4", "--format", "json", "--", "0,0")
    assert code == 0
    assert json.loads(text) == {"variant": "EqualityAt", "level": 1, "schmid_coeffs": [1, 0], "bound": 4}


def test_schmid():
    code, text = run("schmid", "sp:2", "--level", "2")
    assert code == 0 and len(text.splitlines()) == 4
    code, text = run("schmid", "so*:4", "--format", "json", "--", "2,2,1,1")
    assert code == 0 and json.loads(text) == {"level": 3, "coeffs": [1, 1]}


def test_prv_and_recipe():
    code, text = run("prv", "sp:6", "--", "-1,-1,-1,-1,-1,-4", "-1,-1,-1,-1,-1,-5")
    assert code == 0 and text.strip() == "-2,-2,-2,-2,-5,-6"
    code, text = run("recipe", "sp:6", "--", "-4,-4,-5,-5,-7,-8")
    assert code == 0
    assert text.splitlines() == ["((L[-4] . L[-5]) . W-^2) . W+^2", "continuous_region: true"]
    code, text = run("recipe", "so*:4", "--", "-1,-1,-1,-1")
    assert code == 0 and text.strip() == "L0^1"
    code, text = run("recipe", "so*:4", "--", "-3,-4,-4,-4")
    assert code == 11 and text == ""


def test_infchar_modes():
    code, text = run("infchar", "7,5,4,4,3,2,2,1,1,0", "--unitary")
    assert code == 0 and len(text.splitlines()) == 4
    code, text = run("infchar", "rho:3", "--cones", "--parity", "int")
    assert code == 0 and len(text.splitlines()) == 4
    code, text = run("infchar", "rho:2", "--all", "--format", "json")
    rows = json.loads(text)["parameters"]
    assert len(rows) == 4 and sum(r["unitary"] for r in rows) == 3


DOT_LINE = re.compile(r'^(digraph \w+ \{|\s+n\d+ \[label="[^"]*"\];|\s+n\d+ -> n\d+;|\})$')


def test_infchar_dot():
    code, text = run("infchar", "rho:3", "--hasse", "--format", "dot")
    lines = text.splitlines()
    assert code == 0
    assert all(DOT_LINE.match(line) for line in lines), lines
    assert sum("[label=" in line for line in lines) == 8
    assert sum("->" in line for line in lines) == 8


@pytest.mark.parametrize("argv", [
    ["classify", "sp:3", "--", "0,1,0"],
    ["classify", "sp:3", "--", "0,0"],
    ["classify", "xx:3", "--", "0"],
    ["classify", "sp:3"],
    ["bogus"],
    ["scan", "sp:2", "--level", "0", "--", "0,0"],
    ["infchar", "rho:3", "--cones", "--format", "dot"],
    ["infchar", "7,5,4", "--hasse"],
    ["infchar", "1,1,1"],
    ["infchar", "rho:2", "--parity", "half"],
    ["recipe", "sp:2", "--", "0,0", "0,0"],
])
def test_invalid_input_exits_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_max_rank(monkeypatch):
    monkeypatch.setenv("HWMOD_MAX_RANK", "3")
    assert run("classify", "sp:4", "--", "0,0,0,0")[0] == 2
    assert run("classify", "sp:3", "--", "0,0,0")[0] == 0
    monkeypatch.setenv("HWMOD_MAX_RANK", "abc")
    assert run("classify", "sp:3", "--", "0,0,0")[0] == 2
    monkeypatch.delenv("HWMOD_MAX_RANK")
    assert run("infchar", "rho:11")[0] == 2
    assert run("infchar", "rho:10", "--cones")[0] == 0


@pytest.mark.parametrize("req", [
    CliRequest("classify", "sp:6", ("-3,-3,-4,-4,-6,-7",)),
    CliRequest("scan", "su:2,2", ("-1,-1,0,0",), format="json", level=7),
    CliRequest("schmid", "so*:5", (), level=3),
    CliRequest("prv", "sp:2", ("0,0", "-1/2,-3/2")),
    CliRequest("infchar", "rho:3", (), format="dot", mode="hasse"),
    CliRequest("infchar", "rho:4", (), mode="cones", parity="half"),
    CliRequest("infchar", "7,5,4,4,3,2,2,1,1,0", (), mode="all"),
])
def test_request_roundtrip(req):
    assert parse_request(req.to_argv()) == req


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "hwmod", "classify", "sp:3", "--", "-1/4,-1/4,-1/4"],
        capture_output=True, text=True, encoding="utf-8",
    )
    assert res.returncode == 10 and "NonUnitaryGap i=1" in res.stdout
