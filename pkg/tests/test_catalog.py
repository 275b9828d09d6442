import json
import random

import pytest

from gradual.catalog import (
    CATALOG_DIR,
    CATALOG_ENV,
    abelian_algebra,
    catalog_path,
    list_catalog,
    load_catalog_algebra,
    load_catalog_linfty,
    projective_space_model,
    random_solvable_algebra,
    solvable_algebra,
    square_zero_model,
)
from gradual.liealg import is_unimodular, validate
from gradual.linfty import linfty_to_dict
from gradual.errors import InputError


def test_bundled_catalog_kinds():
    catalog = list_catalog()
    assert catalog_path() == CATALOG_DIR
    assert catalog["sl2"] == "algebra"
    assert catalog["super_h_eps"] == "algebra"
    assert catalog["square_zero_n3"] == "linfty"
    assert {name for name, kind in catalog.items() if kind == "linfty"} == {
        "dg_acyclic",
        "projective_space_n2",
        "square_zero_n3",
        "weighted_kernel_n2",
    }


def test_loading_names_entries():
    assert load_catalog_algebra("heisenberg3").name == "heisenberg3"
    assert load_catalog_linfty("projective_space_n2").name == "projective_space_n2"


def test_unknown_entry():
    with pytest.raises(InputError):
        load_catalog_algebra("so5")


def test_catalog_override(tmp_path, monkeypatch):
    (tmp_path / "line.json").write_text(json.dumps({"generators": [{"name": "t", "degree": 0}], "brackets": []}))
    (tmp_path / "model.json").write_text(json.dumps(linfty_to_dict(square_zero_model(2))))
    monkeypatch.setenv(CATALOG_ENV, str(tmp_path))
    assert catalog_path() == tmp_path
    assert list_catalog() == {"line": "algebra", "model": "linfty"}
    assert load_catalog_algebra("line").dim == 1
    assert load_catalog_linfty("model").name == "square_zero_n2"
    with pytest.raises(InputError):
        load_catalog_algebra("sl2")


def test_builders_match_catalog_files():
    bundled = load_catalog_linfty("projective_space_n2")
    built = projective_space_model(2)
    assert built.algebra == bundled.algebra
    assert built.derivation.coefficient(1) == bundled.derivation.coefficient(1)
    assert solvable_algebra("1/2").structure_constants == load_catalog_algebra("solvable_half").structure_constants


def test_abelian_builder():
    alg = abelian_algebra([0, 1, 2])
    assert alg.basis.names == ("a1", "a3", "a2")
    assert validate(alg).valid
    assert is_unimodular(alg)


@pytest.mark.parametrize("builder", [projective_space_model, square_zero_model])
def test_models_reject_bad_n(builder):
    with pytest.raises(InputError):
        builder(0)


def test_random_solvable_algebras_are_lie_algebras():
    rng = random.Random(7)
    for _ in range(20):
        assert validate(random_solvable_algebra(rng)).valid
