import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from projstruct.cli import main

SCHEMA = json.loads(resources.files("projstruct").joinpath("schemas/cli_output.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc["result"]


def test_triangles_example(capsys):
    result = run_json(capsys, "orbifold", "triangles", "--ratio-min", "84")
    assert result["rows"] == [{"a": 2, "b": 3, "c": 7, "ratio": "84"}]


def test_hyperelliptic_example(capsys):
    result = run_json(capsys, "hyperelliptic", "invariants", "--genus", "3", "--group", "J")
    assert result["dimension"] == result["fixed_locus_dimension"] == 5


def test_torus_example(capsys):
    result = run_json(capsys, "torus", "classify", "--tau", "square", "--c", "1")
    rows = {r["automorphism"]: r for r in result["rows"]}
    assert rows["R_i"]["formula"] == rows["R_i"]["series"] == "NotProjective"
    assert rows["J"]["series"] == "ProjectiveNotAffine"
    assert not result["relatively_hurwitz_projective"]


@pytest.mark.parametrize(
    "argv",
    [
        ["schwarzian", "0 1 1", "--order", "8"],
        ["cocycle", "1 1 1/2 1/6 1/24", "0 1 1", "--order", "8"],
        ["cocycle", "--random", "3", "--seed", "7", "--order", "10"],
        ["hyperelliptic", "invariants", "--genus", "4", "--group", "J,R"],
        ["orbifold", "rh", "--order", "504", "--orders", "2,3,7"],
        ["orbifold", "dim", "--g0", "0", "--n", "8"],
        ["orbifold", "triangles", "--ratio-min", "5", "--c-max", "12"],
        ["orbifold", "quotient-order", "--s", "0", "--m", "2"],
        ["orbifold", "fermat", "--n", "5"],
        ["torus", "classify", "--tau", "hexagonal", "--c", "1+i", "--order", "8"],
        ["origami", "census", "--n-max", "3"],
        ["origami", "check", "--h", "(1 2 3)", "--v", "(1 2)"],
        ["origami", "check", "--h", "()", "--v", "()", "--n", "1"],
    ],
)
def test_every_json_output_validates(capsys, argv):
    run_json(capsys, *argv)


def test_schwarzian_values(capsys):
    result = run_json(capsys, "schwarzian", "0 1 1", "--order", "8")
    assert result["coefficients"][:4] == ["-6", "24", "-72", "192"]


def test_fixed_locus_from_exported_file(capsys, tmp_path):
    path = tmp_path / "g3.act"
    run_json(capsys, "hyperelliptic", "invariants", "--genus", "3", "--group", "J", "--export", str(path))
    result = run_json(capsys, "action", "fixed-locus", str(path))
    assert result["dimension"] == 5 and result["basepoint"] == ["0"] * 6


def test_census_csv(capsys):
    code, out, _ = run(capsys, "origami", "census", "--n-max", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "n,h,v,genus,trans_order,normal,tight",
        "1,(),(),1,1,true,false",
        "2,(),(1 2),1,2,true,false",
        "2,(1 2),(),1,2,true,false",
        "2,(1 2),(1 2),1,2,true,false",
    ]


def test_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PROJSTRUCT_FORMAT", "json")
    code, out, _ = run(capsys, "orbifold", "fermat", "--n", "4")
    assert code == 0 and json.loads(out)["result"]["genus"] == 3
    monkeypatch.setenv("PROJSTRUCT_FORMAT", "yaml")
    assert run(capsys, "orbifold", "fermat", "--n", "4")[0] == 2


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "orbifold", "dim", "--g0", "1", "--n", "0")
    assert code == 1 and out == ""
    assert json.loads(err)["error"]["code"] == "excluded_case"


@pytest.mark.parametrize(
    "argv,code",
    [
        (["orbifold", "triangles", "--ratio-min", "10"], "infinite_enumeration"),
        (["schwarzian", "0 0.5 1 1"], "parse_error"),
        (["schwarzian", "0 0 1 1"], "not_locally_injective"),
        (["origami", "check", "--h", "(1 2)", "--v", "()", "--n", "3"], "disconnected"),
        (["torus", "classify", "--c", "1.5"], "parse_error"),
    ],
)
def test_structured_domain_errors(capsys, argv, code):
    status, _, err = run(capsys, *argv)
    assert status == 1
    assert json.loads(err)["error"]["code"] == code


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["orbifold", "rh"], ["orbifold", "fermat", "--n", "4", "--unknown"], ["cocycle", "0 1 1"]],
)
def test_usage_errors(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2
    assert json.loads(err)["error"]["code"] == "usage_error"


def test_output_is_deterministic(capsys):
    argv = ["cocycle", "--random", "4", "--seed", "3", "--order", "10", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "projstruct", "orbifold", "rh", "--order", "168", "--orders", "2,3,7", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["result"]["genus"] == 3
