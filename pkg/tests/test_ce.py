from math import comb

import pytest

from gradual.catalog import abelian_algebra, load_catalog_algebra, random_solvable_algebra, solvable_algebra
from gradual.ce import (
    CeCochainComplex,
    McElement,
    ce_differential,
    ce_generators,
    ce_vector_field,
    chain_complex,
    cohomology,
    hazewinkel_check,
    pairing_violations,
    twist_differential,
)
from gradual.formal import FormalElement
from gradual.liealg import adjoint_module, dual_module, supertrace_character, trivial_module
from gradual.errors import InputError, ModeMismatch, NotMaurerCartan, TruncationRequired


def test_ce_generators(super_h_eps):
    algebra = ce_generators(load_catalog_algebra("abelian4"))
    assert algebra.names == ["a*", "b*", "c*", "d*"]
    assert [g.degree for g in algebra.generators] == [1, 3, 0, -2]
    assert [g.degree for g in ce_generators(super_h_eps).generators] == [1, 0]


def test_ce_differential_of_nonabelian2(nonabelian2):
    d = ce_vector_field(nonabelian2)
    x1, x2 = (FormalElement.generator(d.algebra, i) for i in range(2))
    assert d(x1).is_zero()
    assert d(x2) == (x1 * x2).scale(-1)


@pytest.mark.parametrize("name", ["nonabelian2", "heisenberg3", "sl2", "super_h_eps", "super3", "super3_graded"])
def test_ce_differential_squares_to_zero(name):
    d = ce_vector_field(load_catalog_algebra(name))
    for i in range(len(d.algebra)):
        x = FormalElement.generator(d.algebra, i)
        assert d(d(x)).is_zero()


@pytest.mark.parametrize("name", ["nonabelian2", "solvable_half", "heisenberg3", "sl2", "super_h_eps", "super3"])
def test_divergence_of_ce_differential_is_the_supertrace(name):
    alg = load_catalog_algebra(name)
    d = ce_vector_field(alg)
    chi = supertrace_character(alg)
    expected = FormalElement(d.algebra, {d.algebra.generator_monomial(q): c for q, c in enumerate(chi)})
    assert d.divergence() == expected


def test_divergence_on_random_solvable_algebras(rng):
    for _ in range(10):
        alg = random_solvable_algebra(rng)
        d = ce_vector_field(alg)
        chi = supertrace_character(alg)
        assert d.divergence() == FormalElement(d.algebra, {d.algebra.generator_monomial(q): c for q, c in enumerate(chi)})


@pytest.mark.parametrize(
    "name, expected",
    [
        ("abelian1", {0: 1, 1: 1}),
        ("abelian3", {0: 1, 1: 3, 2: 3, 3: 1}),
        ("nonabelian2", {0: 1, 1: 1, 2: 0}),
        ("solvable_half", {0: 1, 1: 1, 2: 0}),
        ("heisenberg3", {0: 1, 1: 2, 2: 2, 3: 1}),
        ("sl2", {0: 1, 1: 0, 2: 0, 3: 1}),
    ],
)
def test_trivial_cohomology(name, expected):
    table = cohomology(load_catalog_algebra(name))
    assert table.dims == expected
    assert table.stable
    assert table.truncation is None


def test_ungraded_abelian_cohomology_is_binomial():
    for n in range(1, 5):
        dims = cohomology(abelian_algebra([0] * n)).dims
        assert dims == {k: comb(n, k) for k in range(n + 1)}


def test_adjoint_cohomology_of_sl2(sl2):
    assert cohomology(sl2, adjoint_module(sl2)).dims == {0: 0, 1: 0, 2: 0, 3: 0}


def test_euler_characteristic(sl2, nonabelian2):
    assert cohomology(sl2).euler_characteristic() == 0
    assert cohomology(nonabelian2, adjoint_module(nonabelian2)).euler_characteristic() == 0


def test_odd_part_needs_a_truncation():
    alg = load_catalog_algebra("abelian2")
    with pytest.raises(TruncationRequired):
        cohomology(alg)
    with pytest.raises(TruncationRequired):
        ce_differential(alg, None, 3)
    assert ce_differential(alg, None, 3, truncation=5).shape == (2, 2)


def test_truncated_cohomology_with_odd_part():
    table = cohomology(load_catalog_algebra("abelian2"), truncation=4)
    assert table.dims == {0: 1, 1: 2, 2: 2, 3: 2, 4: 2}
    assert table.stable
    assert table.truncation == 4


def test_super_cohomology_does_not_depend_on_the_window(super_h_eps):
    table = cohomology(super_h_eps, truncation=6)
    assert table.stable
    short = cohomology(super_h_eps, truncation=3)
    assert short.dims == {k: d for k, d in table.dims.items() if k <= 3}
    assert short.truncation == 3
    assert table.dim(0) == 1


def test_twist_by_divergence(nonabelian2):
    complex_ = CeCochainComplex(nonabelian2)
    xi = McElement.validated(complex_.d_ce, complex_.d_ce.divergence())
    left = twist_differential(complex_, xi, "left").cohomology()
    right = twist_differential(complex_, xi, "right").cohomology()
    assert left.dims == {0: 0, 1: 1, 2: 1}
    assert right.dims == {0: 0, 1: 0, 2: 0}
    assert left.euler_characteristic() == complex_.cohomology().euler_characteristic()


def test_twist_then_untwist(nonabelian2):
    complex_ = CeCochainComplex(nonabelian2, adjoint_module(nonabelian2))
    xi = McElement.validated(complex_.d_ce, complex_.d_ce.divergence())
    for side in ("left", "right"):
        back = twist_differential(twist_differential(complex_, xi, side), -xi, side)
        assert back.twist is None
        assert back.cohomology().dims == complex_.cohomology().dims


def test_zero_twist_changes_nothing(sl2):
    complex_ = CeCochainComplex(sl2, adjoint_module(sl2))
    twisted = twist_differential(complex_, McElement.zero(complex_.d_ce), "left")
    assert twisted.cohomology().dims == complex_.cohomology().dims


def test_non_maurer_cartan_twist_is_rejected(nonabelian2):
    complex_ = CeCochainComplex(nonabelian2)
    x2 = FormalElement.generator(complex_.ce_algebra, 1)
    with pytest.raises(NotMaurerCartan):
        McElement.validated(complex_.d_ce, x2)
    with pytest.raises(NotMaurerCartan):
        McElement.validated(complex_.d_ce, FormalElement.one(complex_.ce_algebra))
    with pytest.raises(NotMaurerCartan):
        twist_differential(complex_, McElement(x2), "left")


def test_twist_side_is_checked(nonabelian2):
    complex_ = CeCochainComplex(nonabelian2)
    with pytest.raises(InputError):
        twist_differential(complex_, McElement.zero(complex_.d_ce), "middle")


def test_twist_must_be_linear(nonabelian2):
    ce = CeCochainComplex(nonabelian2).ce_algebra
    x1, x2 = (FormalElement.generator(ce, i) for i in range(2))
    with pytest.raises(ModeMismatch):
        CeCochainComplex(nonabelian2, twist=x1 * x2)


@pytest.mark.parametrize("name", ["nonabelian2", "heisenberg3", "sl2"])
def test_chain_homology_matches_pairing(name):
    alg = load_catalog_algebra(name)
    for module in (trivial_module(alg), adjoint_module(alg)):
        chain = chain_complex(alg, module)
        for k in range(alg.dim):
            assert pairing_violations(chain, k) == []
        cochain = cohomology(alg, dual_module(alg, module))
        assert chain.homology_table().dims == cochain.dims


def test_chain_homology_of_nonabelian2(nonabelian2):
    assert chain_complex(nonabelian2).homology_table().dims == {0: 1, 1: 1, 2: 0}


@pytest.mark.parametrize("name", ["nonabelian2", "solvable_half", "heisenberg3", "sl2"])
@pytest.mark.parametrize("module", ["trivial", "adjoint", "dual-adjoint"])
def test_hazewinkel_duality(name, module):
    alg = load_catalog_algebra(name)
    m = {"trivial": trivial_module, "adjoint": adjoint_module}.get(module, lambda a: dual_module(a, adjoint_module(a)))(alg)
    report = hazewinkel_check(alg, m)
    assert report.match, report.to_dict()


def test_untwisted_duality_fails_without_unimodularity(nonabelian2, sl2):
    assert not hazewinkel_check(nonabelian2, trivial_module(nonabelian2), twisted=False).match
    assert hazewinkel_check(sl2, trivial_module(sl2), twisted=False).match


def test_hazewinkel_on_solvable_family():
    for lam in ("1", "2", "-1/3", "0"):
        alg = solvable_algebra(lam)
        assert hazewinkel_check(alg, trivial_module(alg)).match


def test_hazewinkel_needs_ungraded(super_h_eps):
    with pytest.raises(ModeMismatch):
        hazewinkel_check(super_h_eps, trivial_module(super_h_eps))


def test_cochain_degrees(nonabelian2):
    complex_ = CeCochainComplex(nonabelian2, adjoint_module(nonabelian2))
    assert len(complex_.basis(1)) == 4
    assert all(complex_.basis_degree(b) == 1 for b in complex_.basis(1))
    assert complex_.differential(1).shape == (2, 4)
