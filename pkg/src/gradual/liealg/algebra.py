import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from sympy.polys.domains import QQ

from ..exact import Scalar, SparseMatrix, to_scalar
from ..graded import GradedBasis, GradingMode, supertrace, total_dimension_invariant
from ..errors import IndexOutOfRange, InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GradedLieAlgebra:
    """Finite-dimensional graded (or super) Lie algebra given by structure constants.

    [e_i, e_j] = Σ_k N_ij^k e_k. Constants are stored sparsely and exactly as given;
    use `from_brackets` to complete graded antisymmetry from a partial table.

    Args:
        basis (GradedBasis): homogeneous basis, even elements first
        structure_constants (Dict[Tuple[int, int, int], Scalar]): (i, j, k) → N_ij^k
        name (str, optional): label used in reports. Defaults to "".
    """
    basis: GradedBasis
    structure_constants: Dict[Tuple[int, int, int], Scalar] = field(default_factory=dict)
    name: str = ""

    @classmethod
    def from_brackets(
        cls,
        basis: GradedBasis,
        brackets: Iterable[Tuple[int, int, Dict[int, Scalar]]],
        name: str = "",
    ) -> "GradedLieAlgebra":
        """Build an algebra from listed brackets [e_i, e_j] = Σ c_k e_k.

        The missing half of every pair is filled in by graded antisymmetry.

        Raises:
            InputError: if two listed brackets contradict antisymmetry
        """
        constants: Dict[Tuple[int, int, int], Scalar] = {}
        for i, j, result in brackets:
            for idx in (i, j, *result):
                if not 0 <= idx < len(basis):
                    raise IndexOutOfRange(idx, len(basis))
            sign = -1 if basis.parity(i) * basis.parity(j) else 1
            for k, c in result.items():
                c = to_scalar(c)
                for key, value in (((i, j, k), c), ((j, i, k), -sign * c)):
                    if key in constants and constants[key] != value:
                        a, b, t = (basis.names[x] for x in key)
                        raise InputError(f"Bracket [{a},{b}] has contradictory coefficients on {t}")
                    constants[key] = value
            # a listed bracket with no term on k still pins N_ji^k = 0
            for k in range(len(basis)):
                if k not in result:
                    for key in ((i, j, k), (j, i, k)):
                        if constants.get(key, QQ.zero) != 0:
                            a, b, t = (basis.names[x] for x in key)
                            raise InputError(f"Bracket [{a},{b}] has contradictory coefficients on {t}")
        return cls(basis, {k: v for k, v in constants.items() if v != 0}, name)

    @property
    def mode(self) -> GradingMode:
        return self.basis.mode

    @property
    def dim(self) -> int:
        return len(self.basis)

    def parity(self, i: int) -> int:
        return self.basis.parity(i)

    @property
    def n_even(self) -> int:
        return len(self.basis.even_indices)

    @property
    def n_odd(self) -> int:
        return len(self.basis.odd_indices)

    @property
    def is_ungraded(self) -> bool:
        return all(d == 0 for d in self.basis.degrees)

    @property
    def total_dimension(self) -> int:
        """|𝔤|, or n+m mod 2 in Z2 mode."""
        return total_dimension_invariant(self.basis)

    def bracket_basis(self, i: int, j: int) -> Dict[int, Scalar]:
        return self._table().get((i, j), {})

    def bracket(self, u: Dict[int, Scalar], v: Dict[int, Scalar]) -> Dict[int, Scalar]:
        """Bracket of two vectors given as index → coefficient."""
        out: Dict[int, Scalar] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, QQ.zero) + a * b * c
        return {k: c for k, c in out.items() if c != 0}

    def _table(self) -> Dict[Tuple[int, int], Dict[int, Scalar]]:
        table = self.__dict__.get("_bracket_table")
        if table is None:
            table = {}
            for (i, j, k), c in self.structure_constants.items():
                table.setdefault((i, j), {})[k] = c
            object.__setattr__(self, "_bracket_table", table)
        return table

    def families(self) -> Dict[str, Dict[Tuple[int, int, int], Scalar]]:
        """Views a (even-even), b (even-odd) and c (odd-odd) of the structure constants."""
        out: Dict[str, Dict[Tuple[int, int, int], Scalar]] = {"a": {}, "b": {}, "c": {}}
        for (i, j, k), v in self.structure_constants.items():
            key = "abc"[self.parity(i) + self.parity(j)]
            out[key][(i, j, k)] = v
        return out


@dataclass(frozen=True)
class Violation:
    kind: str
    names: Tuple[str, ...]
    detail: str


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"kind": v.kind, "at": list(v.names), "detail": v.detail} for v in self.violations],
        }


def _degree_ok(alg: GradedLieAlgebra, i: int, j: int, k: int) -> bool:
    d = alg.basis.degrees
    if alg.mode == GradingMode.Z2:
        return (d[i] + d[j] - d[k]) % 2 == 0
    return d[i] + d[j] == d[k]


def validate(alg: GradedLieAlgebra) -> ValidationReport:
    """Check graded antisymmetry, degree homogeneity and the graded Jacobi identity.

    Args:
        alg (GradedLieAlgebra): the algebra

    Returns:
        ValidationReport: every violated instance, empty iff the algebra is valid
    """
    report = ValidationReport()
    names = alg.basis.names
    n = alg.dim
    p = alg.basis.parities
    N = alg.structure_constants
    seen = set()
    for (i, j, k), c in sorted(N.items()):
        sign = -1 if p[i] * p[j] else 1
        if N.get((j, i, k), QQ.zero) != -sign * c and (j, i, k) not in seen:
            seen.add((i, j, k))
            report.violations.append(
                Violation("antisymmetry", (names[i], names[j], names[k]), f"N_ji^k ≠ -(-1)^(|i||j|) N_ij^k")
            )
        if not _degree_ok(alg, i, j, k):
            report.violations.append(
                Violation("homogeneity", (names[i], names[j], names[k]), "degree of result ≠ sum of degrees")
            )

    def nested(a: int, b: int, c: int) -> Dict[int, Scalar]:
        return alg.bracket({a: QQ.one}, alg.bracket({b: QQ.one}, {c: QQ.one}))

    for a in range(n):
        for b in range(a, n):
            for c in range(b, n):
                total: Dict[int, Scalar] = {}
                for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                    sign = -1 if p[x] * p[z] else 1
                    for k, v in nested(x, y, z).items():
                        total[k] = total.get(k, QQ.zero) + sign * v
                bad = {k: v for k, v in total.items() if v != 0}
                if bad:
                    report.violations.append(
                        Violation("jacobi", (names[a], names[b], names[c]), f"cyclic sum has support {sorted(names[k] for k in bad)}")
                    )
    if report.violations:
        logger.debug(f"{alg.name or 'algebra'}: {len(report.violations)} axiom violations")
    return report


def adjoint_matrix(alg: GradedLieAlgebra, i: int) -> SparseMatrix:
    """Matrix of ad_{e_i}: column j holds the N_ij^k."""
    if not 0 <= i < alg.dim:
        raise IndexOutOfRange(i, alg.dim)
    return SparseMatrix.from_entries(
        alg.dim, alg.dim, (((k, j), c) for j in range(alg.dim) for k, c in alg.bracket_basis(i, j).items())
    )


def supertrace_character(alg: GradedLieAlgebra) -> List[Scalar]:
    """The vector (str(ad_{e_i}))_i."""
    parities = alg.basis.parities
    return [supertrace(adjoint_matrix(alg, i), parities) for i in range(alg.dim)]


def is_unimodular(alg: GradedLieAlgebra) -> bool:
    return all(c == 0 for c in supertrace_character(alg))
