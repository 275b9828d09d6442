import pytest
from sympy.polys.domains import QQ

from gradual.exact import SparseMatrix
from gradual.graded import GradedBasis, GradingMode, koszul_sign, supertrace, total_dimension_invariant
from gradual.errors import InputError, LengthMismatch, ShapeMismatch


@pytest.mark.parametrize(
    "perm, parities, expected",
    [
        ([0, 1, 2], [1, 1, 1], 1),
        ([1, 0], [1, 1], -1),
        ([1, 0], [0, 1], 1),
        ([2, 1, 0], [1, 1, 1], -1),
        ([2, 0, 1], [1, 0, 1], -1),
        ([1, 2, 0], [1, 1, 1], 1),
    ],
)
def test_koszul_sign(perm, parities, expected):
    assert koszul_sign(perm, parities) == expected


def test_koszul_sign_length_mismatch():
    with pytest.raises(LengthMismatch):
        koszul_sign([0, 1], [1])


def test_koszul_sign_composes(rng):
    for _ in range(100):
        n = rng.randint(1, 6)
        parities = [rng.randint(0, 1) for _ in range(n)]
        tau = list(range(n))
        sigma = list(range(n))
        rng.shuffle(tau)
        rng.shuffle(sigma)
        # rearrange by tau, then rearrange the result by sigma
        composite = [tau[sigma[i]] for i in range(n)]
        rearranged = [parities[tau[j]] for j in range(n)]
        assert koszul_sign(composite, parities) == koszul_sign(tau, parities) * koszul_sign(sigma, rearranged)


@pytest.mark.parametrize(
    "degrees, expected",
    [
        ((0, 0, 0), 3),
        ((0,), 1),
        ((0, 1), 2),
        ((-4, -1), 4),
        ((-6, -1), 6),
        ((0, -2, 1, 3), 8),
    ],
)
def test_total_dimension_invariant(degrees, expected):
    names = tuple(f"e{i}" for i in range(len(degrees)))
    assert total_dimension_invariant(GradedBasis(names, degrees)) == expected


def test_total_dimension_invariant_z2():
    assert total_dimension_invariant(GradedBasis(("h", "eps"), (0, 1), GradingMode.Z2)) == 0
    assert total_dimension_invariant(GradedBasis(("h", "z", "eps"), (0, 0, 1), GradingMode.Z2)) == 1


def test_total_dimension_is_order_independent(rng):
    for _ in range(20):
        degrees = [rng.randint(-3, 3) for _ in range(rng.randint(1, 6))]
        names = [f"e{i}" for i in range(len(degrees))]
        order = list(range(len(degrees)))
        rng.shuffle(order)
        a = GradedBasis(tuple(names), tuple(degrees))
        b = GradedBasis(tuple(names[i] for i in order), tuple(degrees[i] for i in order))
        assert total_dimension_invariant(a) == total_dimension_invariant(b)


def test_basis_normalization_puts_even_first():
    basis, order = GradedBasis(("a", "b", "c", "d"), (1, 0, 3, 2)).normalized()
    assert basis.names == ("b", "d", "a", "c")
    assert order == [1, 3, 0, 2]


def test_basis_shift_and_dual():
    basis = GradedBasis(("a", "b"), (0, 3))
    assert basis.shift(1).degrees == (-1, 2)
    assert basis.dual().names == ("a*", "b*")
    assert basis.dual().degrees == (0, -3)


@pytest.mark.parametrize(
    "names, degrees, mode",
    [
        (("a", "a"), (0, 1), GradingMode.Z),
        (("a", "b"), (0, 2), GradingMode.Z2),
    ],
)
def test_basis_rejects(names, degrees, mode):
    with pytest.raises(InputError):
        GradedBasis(names, degrees, mode)


@pytest.mark.parametrize(
    "rows, parities, expected",
    [
        ([[1, 0], [0, 1]], [0, 0], 2),
        ([[1, 0], [0, 1]], [0, 1], 0),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 1, 1], -1),
        ([[0, 1], [1, 0]], [0, 1], 0),
        ([[5, 2], [7, 3]], [0, 1], 2),
    ],
)
def test_supertrace(rows, parities, expected):
    assert supertrace(rows, parities) == expected


def test_supertrace_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        supertrace([[1, 0], [0, 1]], [0])


def _homogeneous(rng, parities, parity):
    n = len(parities)
    return SparseMatrix.from_entries(
        n,
        n,
        (
            ((i, j), QQ(rng.randint(-3, 3)))
            for i in range(n)
            for j in range(n)
            if (parities[i] + parities[j]) % 2 == parity
        ),
    )


def test_graded_trace_property(rng):
    for _ in range(40):
        parities = [rng.randint(0, 1) for _ in range(rng.randint(1, 5))]
        pa, pb = rng.randint(0, 1), rng.randint(0, 1)
        a, b = _homogeneous(rng, parities, pa), _homogeneous(rng, parities, pb)
        sign = -1 if pa * pb else 1
        assert supertrace(a.matmul(b), parities) == sign * supertrace(b.matmul(a), parities)
