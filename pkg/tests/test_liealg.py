import json

import pytest
from sympy.polys.domains import QQ

from gradual.catalog import load_catalog_algebra
from gradual.exact import SparseMatrix
from gradual.graded import GradedBasis, GradingMode
from gradual.liealg import (
    GradedLieAlgebra,
    LieModule,
    adjoint_matrix,
    adjoint_module,
    algebra_from_dict,
    algebra_to_dict,
    check_module,
    dual_module,
    hom_module,
    is_unimodular,
    load_algebra,
    module_from_dict,
    module_to_dict,
    module_violations,
    supertrace_character,
    tensor_module,
    trivial_module,
    twisted_dual_module,
    untwisted_dual,
    validate,
)
from gradual.errors import IndexOutOfRange, InputError, ModuleAxiomViolation, SchemaError

VALID = ["abelian1", "abelian2", "abelian3", "abelian4", "nonabelian2", "solvable_half", "heisenberg3", "sl2", "super_h_eps", "super3", "super3_graded"]


@pytest.mark.parametrize("name", VALID)
def test_catalog_algebras_are_valid(name):
    assert validate(load_catalog_algebra(name)).valid


def test_broken_jacobi_is_reported():
    report = validate(load_catalog_algebra("broken_jacobi"))
    assert not report.valid
    assert {v.kind for v in report.violations} == {"jacobi"}
    assert report.to_dict()["valid"] is False


def test_antisymmetry_and_homogeneity_violations():
    basis = GradedBasis(("a", "b"), (0, 1))
    alg = GradedLieAlgebra(basis, {(0, 1, 0): QQ(1), (1, 0, 0): QQ(1)})
    kinds = {v.kind for v in validate(alg).violations}
    assert "antisymmetry" in kinds
    assert "homogeneity" in kinds


def test_contradictory_brackets():
    basis = GradedBasis(("a", "b"), (0, 0))
    with pytest.raises(InputError):
        GradedLieAlgebra.from_brackets(basis, [(0, 1, {0: 1}), (1, 0, {0: 1})])


def test_from_brackets_completes_antisymmetry():
    basis = GradedBasis(("h", "eps"), (0, 1), GradingMode.Z2)
    alg = GradedLieAlgebra.from_brackets(basis, [(0, 1, {1: 1})])
    assert alg.bracket_basis(1, 0) == {1: -1}
    odd = GradedLieAlgebra.from_brackets(basis, [(1, 1, {0: 2})])
    assert odd.bracket_basis(1, 1) == {0: 2}
    assert validate(odd).valid


def test_adjoint_matrices(nonabelian2, sl2):
    ad = adjoint_matrix(nonabelian2, 0)
    assert ad.to_rows() == [[0, 0], [0, 1]]
    assert adjoint_matrix(nonabelian2, 1).to_rows() == [[0, 0], [-1, 0]]
    h = sl2.basis.index("h")
    diag = [adjoint_matrix(sl2, h)[(k, k)] for k in range(3)]
    assert sorted(diag) == [-2, 0, 2]
    with pytest.raises(IndexOutOfRange):
        adjoint_matrix(sl2, 3)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("abelian3", [0, 0, 0]),
        ("nonabelian2", [1, 0]),
        ("solvable_half", [QQ(1, 2), 0]),
        ("heisenberg3", [0, 0, 0]),
        ("sl2", [0, 0, 0]),
        ("super_h_eps", [-1, 0]),
        ("super3", [1, 0, 0]),
    ],
)
def test_supertrace_character(name, expected):
    assert supertrace_character(load_catalog_algebra(name)) == expected


@pytest.mark.parametrize("name", VALID)
def test_character_kills_brackets_and_odd_part(name):
    alg = load_catalog_algebra(name)
    chi = supertrace_character(alg)
    assert all(chi[i] == 0 for i in alg.basis.odd_indices)
    for i in range(alg.dim):
        for j in range(alg.dim):
            assert sum(c * chi[k] for k, c in alg.bracket_basis(i, j).items()) == 0


@pytest.mark.parametrize(
    "name, expected",
    [("abelian2", True), ("nonabelian2", False), ("sl2", True), ("heisenberg3", True), ("super_h_eps", False)],
)
def test_is_unimodular(name, expected):
    assert is_unimodular(load_catalog_algebra(name)) is expected


def test_module_constructions_satisfy_axioms(sl2):
    ad = adjoint_module(sl2)
    assert module_violations(sl2, ad) == []
    assert dual_module(sl2, ad).dim == 3
    assert tensor_module(sl2, ad, trivial_module(sl2)).dim == 3
    assert hom_module(sl2, ad, ad).dim == 9


def test_super_module_constructions():
    alg = load_catalog_algebra("super3")
    ad = adjoint_module(alg)
    assert module_violations(alg, ad) == []
    assert module_violations(alg, dual_module(alg, ad)) == []
    assert module_violations(alg, tensor_module(alg, ad, dual_module(alg, ad))) == []


def test_bad_module_is_rejected(nonabelian2):
    one = SparseMatrix.from_rows([[1]])
    bad = LieModule(GradedBasis(("m",), (0,)), (one, one), "bad")
    assert module_violations(nonabelian2, bad) == ["[e1,e2]"]
    with pytest.raises(ModuleAxiomViolation):
        check_module(nonabelian2, bad)


def test_twisted_dual_of_trivial(nonabelian2):
    tw = twisted_dual_module(nonabelian2, trivial_module(nonabelian2))
    assert tw.carrier.degrees == (nonabelian2.total_dimension,)
    assert tw.right_action[0].to_rows() == [[1]]
    assert tw.right_action[1].is_zero()


@pytest.mark.parametrize("name", ["nonabelian2", "solvable_half", "sl2", "super_h_eps"])
def test_untwisting_recovers_the_module(name):
    alg = load_catalog_algebra(name)
    m = adjoint_module(alg)
    back = untwisted_dual(alg, twisted_dual_module(alg, m))
    assert back.carrier.degrees == m.carrier.degrees
    assert [mat.entries for mat in back.action] == [mat.entries for mat in m.action]


def test_basis_is_normalized_even_first():
    alg = algebra_from_dict(
        {
            "mode": "Z2",
            "generators": [{"name": "eps", "degree": 1}, {"name": "h", "degree": 0}],
            "brackets": [{"left": "h", "right": "eps", "result": [{"gen": "eps", "coeff": "1"}]}],
        }
    )
    assert alg.basis.names == ("h", "eps")
    assert supertrace_character(alg) == [-1, 0]


@pytest.mark.parametrize(
    "data, field",
    [
        ({"brackets": []}, "generators"),
        ({"mode": "Z3", "generators": []}, "mode"),
        ({"generators": [{"name": "a"}]}, "generators[0].degree"),
        ({"generators": [{"name": "a", "degree": 0}], "brackets": [{"left": "a", "right": "b", "result": []}]}, "brackets[0].left/right"),
        ({"generators": [{"name": "a", "degree": 0}], "brackets": [{"left": "a", "right": "a", "result": [{"gen": "a", "coeff": 0.5}]}]}, "brackets[0].result[0].coeff"),
    ],
)
def test_schema_errors(data, field):
    with pytest.raises(SchemaError) as info:
        algebra_from_dict(data, "test.json")
    assert info.value.field == field


def test_malformed_json_reports_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "generators": [\n    {"name": "a", "degree": 0},\n  ]\n}\n')
    with pytest.raises(SchemaError) as info:
        load_algebra(path)
    assert info.value.line == 4


def test_algebra_round_trip(tmp_path):
    alg = load_catalog_algebra("super3")
    path = tmp_path / "super3.json"
    path.write_text(json.dumps(algebra_to_dict(alg)))
    again = load_algebra(path)
    assert again.basis == alg.basis
    assert again.structure_constants == alg.structure_constants


def test_module_from_dict(nonabelian2):
    data = {
        "name": "weight",
        "carrier": [{"name": "m", "degree": 0}],
        "action": [{"gen": "e1", "matrix": [["1/2"]]}],
    }
    m = module_from_dict(data, nonabelian2)
    assert m.action[0].to_rows() == [[QQ(1, 2)]]
    assert m.action[1].is_zero()
    with pytest.raises(ModuleAxiomViolation):
        module_from_dict({**data, "action": [{"gen": "e2", "matrix": [["1"]]}, {"gen": "e1", "matrix": [["1"]]}]}, nonabelian2)


def test_module_round_trip(sl2):
    ad = adjoint_module(sl2)
    again = module_from_dict(json.loads(json.dumps(module_to_dict(sl2, ad))), sl2)
    assert again.carrier == ad.carrier
    assert [mat.entries for mat in again.action] == [mat.entries for mat in ad.action]
