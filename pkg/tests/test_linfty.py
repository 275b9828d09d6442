import json

import pytest

from gradual.catalog import (
    dg_acyclic_model,
    load_catalog_algebra,
    load_catalog_linfty,
    projective_space_model,
    square_zero_model,
    weighted_kernel_model,
)
from gradual.ce import McElement
from gradual.formal import FormalElement
from gradual.linfty import (
    TruncatedComplex,
    conjecture_evidence,
    default_truncation,
    divergence_cocycle,
    element_to_list,
    is_minimal,
    linfty_from_dict,
    linfty_from_lie_algebra,
    linfty_to_dict,
    load_element,
    load_linfty,
    satisfies_hypothesis_h,
    truncated_cohomology,
    validate_linfty,
)
from gradual.errors import InputError, NotCocycle, SchemaError


def structure(generators, derivation, **extra):
    return linfty_from_dict(
        {
            "generators": [{"name": n, "degree": d} for n, d in generators],
            "derivation": [
                {"on": g, "value": [{"monomial": m, "coeff": str(c)} for m, c in terms]} for g, terms in derivation.items()
            ],
            **extra,
        }
    )


@pytest.fixture
def filtered():
    """ℓ = (x + x²) y ∂/∂x, with terms of two different orders."""
    return structure([("x", 0), ("y", 1)], {"x": [({"x": 1, "y": 1}, 1), ({"x": 2, "y": 1}, 1)]})


@pytest.mark.parametrize(
    "name", ["square_zero_n3", "projective_space_n2", "weighted_kernel_n2", "dg_acyclic"]
)
def test_catalog_structures_are_valid(name):
    assert validate_linfty(load_catalog_linfty(name)).valid


def test_wrong_degree_is_rejected():
    s = structure([("y", 0)], {"y": [({"y": 1}, 1)]})
    kinds = {v.kind for v in validate_linfty(s).violations}
    assert "degree" in kinds
    assert "constant" not in kinds


def test_constant_term_is_rejected():
    s = structure([("w", -1)], {"w": [({}, 1)]})
    assert {v.kind for v in validate_linfty(s).violations} == {"constant"}


def test_nonzero_square_is_rejected():
    s = structure([("x", 0), ("y", 1), ("z", 2)], {"x": [({"y": 1}, 1)], "y": [({"z": 1}, 1)]})
    violations = validate_linfty(s).violations
    assert [v.kind for v in violations] == ["square"]
    assert violations[0].names[0] == "x"


def test_structure_flags():
    square_zero = load_catalog_linfty("square_zero_n3")
    projective = load_catalog_linfty("projective_space_n2")
    assert is_minimal(square_zero) and is_minimal(projective)
    assert not is_minimal(dg_acyclic_model())
    assert not satisfies_hypothesis_h(square_zero)
    assert satisfies_hypothesis_h(projective)
    assert square_zero.total_dimension == 2
    assert projective.total_dimension == 4
    assert projective.max_order == 3


def test_default_truncation():
    assert default_truncation(1) == 8
    assert default_truncation(4) == 10
    assert square_zero_model(3).order == 10
    assert load_catalog_linfty("square_zero_n3").order == 12


def test_divergence_cocycle():
    assert divergence_cocycle(square_zero_model(3)).element == FormalElement.from_exponents(
        square_zero_model(3).algebra, [({"x": 2, "y": 1}, 3)]
    )
    assert divergence_cocycle(projective_space_model(2)).element.is_zero()
    assert divergence_cocycle(dg_acyclic_model()).element.is_zero()


def test_divergence_of_filtered_structure(filtered):
    assert divergence_cocycle(filtered).element == FormalElement.from_exponents(
        filtered.algebra, [({"y": 1}, 1), ({"x": 1, "y": 1}, 2)]
    )


def test_divergence_must_be_a_cocycle():
    # ∇ℓ = u, and ℓ(u) = t²
    s = structure([("t", 0), ("u", 1)], {"t": [({"t": 1, "u": 1}, 1)], "u": [({"t": 2}, 1)]})
    with pytest.raises(NotCocycle):
        divergence_cocycle(s)


def test_square_zero_cohomology():
    s = load_catalog_linfty("square_zero_n3")
    xi = divergence_cocycle(s)
    assert truncated_cohomology(s).dims == {0: 1, 1: 3}
    left = truncated_cohomology(s, twist=xi)
    assert left.dims == {0: 0, 1: 2}
    assert left.stable
    assert left.twist.startswith("left:")
    assert truncated_cohomology(s, twist=xi, side="right").dims == {0: 1, 1: 3}


def test_square_zero_family():
    for n in range(1, 6):
        s = square_zero_model(n)
        assert is_minimal(s)
        assert not satisfies_hypothesis_h(s)
        table = truncated_cohomology(s)
        assert table.grading == "order"
        assert table.dims == {0: 1, 1: n}
        assert truncated_cohomology(s, twist=divergence_cocycle(s)).dims == {0: 0, 1: n - 1}


def test_twist_by_a_multiple_of_the_divergence():
    s = square_zero_model(3)
    # x^k goes to (k + c) x^(k+2) y, so c = -1 keeps x and leaves x³y unhit
    for c, dims in ((1, {0: 0, 1: 2}), (2, {0: 0, 1: 2}), (3, {0: 0, 1: 2}), (-1, {0: 1, 1: 3})):
        element = FormalElement.from_exponents(s.algebra, [({"x": 2, "y": 1}, c)])
        xi = McElement.validated(s.derivation, element, s.order)
        assert truncated_cohomology(s, twist=xi).dims == dims


def test_projective_space_cohomology():
    s = load_catalog_linfty("projective_space_n2")
    table = truncated_cohomology(s, degree_window=(0, 10))
    stable = {e.i: e.dim for e in table.entries if e.stable}
    assert stable == {0: 1, 1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 6: 0, 7: 0, 8: 0, 9: 0, 10: 0}
    assert table.stable
    assert table.dim(1) == 0


def test_degrees_without_monomials_are_stable_zeros():
    s = load_catalog_linfty("projective_space_n2")
    complex_ = TruncatedComplex(s)
    # |y| = 2, |x| = 5
    assert [d for d in range(-2, 12) if not complex_.occurs(d)] == [-2, -1, 1, 3]
    table = truncated_cohomology(s, degree_window=(-2, 3))
    assert [(e.i, e.dim, e.stable) for e in table.entries] == [
        (-2, 0, True),
        (-1, 0, True),
        (0, 1, True),
        (1, 0, True),
        (2, 1, True),
        (3, 0, True),
    ]


def test_projective_space_family():
    for n in range(1, 5):
        s = projective_space_model(n)
        table = truncated_cohomology(s, degree_window=(0, 2 * n + 2))
        stable = {e.i: e.dim for e in table.entries if e.stable and e.dim}
        assert stable == {2 * k: 1 for k in range(n + 1)}
        evidence = conjecture_evidence(s)
        assert evidence.shift == 2 * n
        assert evidence.symmetric


def test_weighted_kernel_orders():
    table = truncated_cohomology(load_catalog_linfty("weighted_kernel_n2"))
    assert table.order_dims(0) == {k: 1 for k in range(9)}
    assert table.order_dims(1) == {1: 1, **{k: 2 for k in range(2, 9)}}
    assert not any(e.stable for e in table.entries)


def test_weighted_kernel_family():
    for n in range(1, 4):
        s = weighted_kernel_model(n)
        assert s.total_dimension == 3
        assert divergence_cocycle(s).element.is_zero()
        table = truncated_cohomology(s)
        assert set(table.order_dims(0).values()) == {1}
        assert table.order_dims(1)[2 * n + 1] == n


def test_weighted_kernel_model_rejects_bad_n():
    with pytest.raises(InputError):
        weighted_kernel_model(0)


def test_dg_acyclic():
    table = truncated_cohomology(dg_acyclic_model())
    assert table.dims == {0: 1, 1: 0}
    assert table.stable


def test_filtered_structure(filtered):
    complex_ = TruncatedComplex(filtered, order=6)
    assert not complex_.homogeneous
    assert complex_.steps == {1, 2}
    table = truncated_cohomology(filtered, order=6)
    assert table.grading == "filtered"
    assert table.dims == {0: 1, 1: 1}
    assert table.stable
    assert table.orders == []


def test_bad_side_is_rejected():
    with pytest.raises(InputError):
        TruncatedComplex(dg_acyclic_model(), side="up")


@pytest.mark.parametrize("name, dims", [("nonabelian2", {0: 1, 1: 1, 2: 0}), ("sl2", {0: 1, 1: 0, 2: 0, 3: 1})])
def test_lie_algebra_as_linfty(name, dims):
    s = linfty_from_lie_algebra(load_catalog_algebra(name))
    assert validate_linfty(s).valid
    assert s.order == 8
    assert truncated_cohomology(s).dims == dims


def test_lie_algebra_twisted_by_divergence(nonabelian2):
    s = linfty_from_lie_algebra(nonabelian2)
    xi = divergence_cocycle(s)
    assert xi.element == FormalElement.generator(s.algebra, 0)
    assert truncated_cohomology(s, twist=xi).dims == {0: 0, 1: 1, 2: 1}
    assert truncated_cohomology(s, twist=McElement.zero(s.derivation)).dims == {0: 1, 1: 1, 2: 0}


def test_conjecture_evidence_on_projective_space():
    evidence = conjecture_evidence(load_catalog_linfty("projective_space_n2"))
    assert evidence.shift == 4
    assert evidence.unimodular
    assert evidence.symmetric
    pairs = {p.i: p for p in evidence.pairs}
    assert pairs[0].dual_i == 4 and pairs[0].match


def test_conjecture_evidence_on_square_zero():
    evidence = conjecture_evidence(load_catalog_linfty("square_zero_n3"))
    assert evidence.shift == 2
    assert not evidence.unimodular
    assert not evidence.symmetric
    data = evidence.to_dict()
    assert data["symmetric"] is False
    assert data["twisted"]["twist"].startswith("left:")


def test_round_trip():
    s = load_catalog_linfty("square_zero_n3")
    again = linfty_from_dict(json.loads(json.dumps(linfty_to_dict(s))))
    assert again.algebra == s.algebra
    assert again.order == 12
    assert again.derivation.coefficient(0) == s.derivation.coefficient(0)
    assert element_to_list(s.derivation.coefficient(0)) == [{"monomial": {"x": 3, "y": 1}, "coeff": "1"}]


def test_load_linfty_uses_file_stem(tmp_path):
    data = linfty_to_dict(square_zero_model(2))
    del data["name"]
    path = tmp_path / "mine.json"
    path.write_text(json.dumps(data))
    assert load_linfty(path).name == "mine"


def test_load_element(tmp_path):
    s = square_zero_model(3)
    path = tmp_path / "xi.json"
    path.write_text(json.dumps({"element": [{"monomial": {"x": 2, "y": 1}, "coeff": "3"}]}))
    assert load_element(path, s.algebra) == divergence_cocycle(s).element


@pytest.mark.parametrize(
    "data, field",
    [
        ({"generators": [{"name": "x", "degree": 0}], "derivation": [{"on": "q", "value": []}]}, "derivation[0].on"),
        (
            {"generators": [{"name": "x", "degree": 0}], "derivation": [{"on": "x", "value": []}, {"on": "x", "value": []}]},
            "derivation[1].on",
        ),
        (
            {"generators": [{"name": "y", "degree": 1}], "derivation": [{"on": "y", "value": [{"monomial": {"y": 2}}]}]},
            "derivation[0].value[0].monomial",
        ),
        ({"generators": [{"name": "x", "degree": 0}], "truncation": 0}, "truncation"),
        ({"mode": "Q", "generators": []}, "mode"),
    ],
)
def test_schema_errors(data, field):
    with pytest.raises(SchemaError) as info:
        linfty_from_dict(data, "test.json")
    assert info.value.field == field
