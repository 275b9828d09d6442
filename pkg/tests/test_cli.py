import json

import pytest

from gradual.cli import EXIT_INPUT, EXIT_MATH, EXIT_OK, RunConfig, build_parser, main, to_table
from gradual.errors import InputError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_validate_algebra(capsys):
    code, report = run(capsys, "validate", "-i", "nonabelian2")
    assert code == EXIT_OK
    assert report["valid"] is True
    assert report["unimodular"] is False
    assert report["kind"] == "algebra"


def test_validate_broken_algebra(capsys):
    code, report = run(capsys, "validate", "-i", "broken_jacobi")
    assert code == EXIT_INPUT
    assert report["valid"] is False
    assert {v["kind"] for v in report["violations"]} == {"jacobi"}


def test_validate_linfty(capsys):
    code, report = run(capsys, "validate", "-i", "square_zero_n3")
    assert code == EXIT_OK
    assert report["kind"] == "linfty"
    assert report["minimal"] is True
    assert report["hypothesis_h"] is False
    assert report["truncation"] == 12


def test_cohomology(capsys):
    code, report = run(capsys, "cohomology", "-i", "sl2", "-m", "adjoint")
    assert code == EXIT_OK
    assert report["dims"] == {"H0": 0, "H1": 0, "H2": 0, "H3": 0}
    code, report = run(capsys, "cohomology", "-i", "nonabelian2", "--twist", "divergence")
    assert report["dims"] == {"H0": 0, "H1": 1, "H2": 1}
    code, report = run(capsys, "cohomology", "-i", "nonabelian2", "--twist", "divergence", "--side", "right")
    assert report["dims"] == {"H0": 0, "H1": 0, "H2": 0}


def test_cohomology_with_odd_part_uses_default_truncation(capsys):
    code, report = run(capsys, "cohomology", "-i", "abelian2")
    assert code == EXIT_OK
    assert report["cohomology"]["truncation"] == 8
    assert report["dims"] == {"H0": 1, **{f"H{k}": 2 for k in range(1, 9)}}
    code, report = run(capsys, "cohomology", "-i", "abelian2", "--truncation", "3")
    assert report["dims"] == {"H0": 1, "H1": 2, "H2": 2, "H3": 2}


def test_cohomology_rejects_non_maurer_cartan_twist(capsys, tmp_path):
    path = tmp_path / "xi.json"
    path.write_text(json.dumps({"element": [{"monomial": {"e2*": 1}, "coeff": "1"}]}))
    code, _ = run(capsys, "cohomology", "-i", "nonabelian2", "--twist", f"file:{path}")
    assert code == EXIT_MATH


def test_character(capsys):
    code, report = run(capsys, "character", "-i", "nonabelian2")
    assert code == EXIT_OK
    assert report["match"] is True
    assert [c["r"] for c in report["character"]] == ["1", "0"]
    code, report = run(capsys, "character", "-i", "super_h_eps", "--samples", "5")
    assert code == EXIT_OK
    assert report["hodge"]["valid"] and report["perturbed_hodge"]["valid"]


def test_character_needs_an_algebra(capsys):
    code, _ = run(capsys, "character", "-i", "square_zero_n3")
    assert code == EXIT_INPUT


def test_hazewinkel(capsys):
    code, report = run(capsys, "hazewinkel", "-i", "nonabelian2")
    assert code == EXIT_OK
    assert [row["module"] for row in report["modules"]] == ["trivial", "adjoint", "dual-adjoint"]
    code, report = run(capsys, "hazewinkel", "-i", "nonabelian2", "-m", "trivial", "--untwisted")
    assert code == EXIT_MATH
    assert report["match"] is False
    code, _ = run(capsys, "hazewinkel", "-i", "super_h_eps")
    assert code == EXIT_INPUT


def test_divergence(capsys):
    code, report = run(capsys, "divergence", "-i", "nonabelian2")
    assert code == EXIT_OK
    assert report["divergence"] == "e1*"
    assert report["supertrace"] == {"e1": "1", "e2": "0"}
    code, report = run(capsys, "divergence", "-i", "projective_space_n2")
    assert report["unimodular"] is True
    assert report["total_dimension"] == 4


def test_linfty(capsys):
    code, report = run(capsys, "linfty", "-i", "square_zero_n3", "--twist", "divergence")
    assert code == EXIT_OK
    assert report["dims"] == {"H0": 0, "H1": 2}
    code, report = run(capsys, "linfty", "-i", "projective_space_n2", "--degree-window", "0", "4")
    assert report["dims"] == {"H0": 1, "H1": 0, "H2": 1, "H3": 0, "H4": 1}


def test_linfty_on_a_lie_algebra(capsys):
    code, report = run(capsys, "linfty", "-i", "sl2")
    assert code == EXIT_OK
    assert report["dims"] == {"H0": 1, "H1": 0, "H2": 0, "H3": 1}


def test_linfty_twist_file(capsys, tmp_path):
    path = tmp_path / "xi.json"
    path.write_text(json.dumps({"element": [{"monomial": {"x": 2, "y": 1}, "coeff": "3"}]}))
    code, report = run(capsys, "linfty", "-i", "square_zero_n3", "--twist", f"file:{path}")
    assert code == EXIT_OK
    assert report["dims"] == {"H0": 0, "H1": 2}


def test_conjecture(capsys):
    code, report = run(capsys, "conjecture", "-i", "square_zero_n3")
    assert code == EXIT_OK
    assert report["shift"] == 2
    assert report["symmetric"] is False
    code, report = run(capsys, "conjecture", "-i", "projective_space_n2")
    assert report["symmetric"] is True


def test_output_is_deterministic(capsys):
    main(["conjecture", "-i", "projective_space_n2"])
    first = capsys.readouterr().out
    main(["conjecture", "-i", "projective_space_n2"])
    assert capsys.readouterr().out == first


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    assert main(["validate", "-i", "sl2", "-o", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["valid"] is True


def test_table_format(capsys):
    code, text = run(capsys, "validate", "-i", "nonabelian2", "--format", "table")
    assert code == EXIT_OK
    assert "valid: yes" in text.splitlines()
    assert to_table({"rows": [{"i": 0, "dim": 1}, {"i": 1, "dim": 12}]}).splitlines() == [
        "rows:",
        "  i  dim",
        "  -  ---",
        "  0  1",
        "  1  12",
    ]


def test_input_from_path(capsys, tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"generators": [{"name": "t", "degree": 0}], "brackets": []}))
    code, report = run(capsys, "validate", "-i", str(path))
    assert code == EXIT_OK
    assert report["algebra"] == "line"


@pytest.mark.parametrize(
    "argv",
    [
        ["validate", "-i", "no_such_algebra"],
        ["validate", "-i", "sl2", "-i", "nonabelian2"],
        ["cohomology", "-i", "sl2", "--truncation", "0"],
        ["linfty", "-i", "square_zero_n3", "--degree-window", "3", "1"],
        ["linfty", "-i", "square_zero_n3", "--twist", "sideways"],
        ["cohomology", "-i", "sl2", "-m", "adjoint", "-m", "trivial"],
    ],
)
def test_bad_input_exits_with_1(capsys, argv):
    assert main(argv) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_malformed_json_exits_with_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"generators": [}')
    assert main(["validate", "-i", str(path)]) == EXIT_INPUT
    assert "bad.json:1" in capsys.readouterr().err


def test_parser_requires_input():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["validate"])


def test_run_config_validation():
    with pytest.raises(InputError):
        RunConfig("plot", ["sl2"])
    with pytest.raises(InputError):
        RunConfig("validate", ["sl2"], format="xml")
    assert RunConfig("cohomology", ["sl2"]).y_truncation == 8
