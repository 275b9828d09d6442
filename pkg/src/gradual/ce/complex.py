import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from ..exact import SparseMatrix, homology_dim
from ..formal import FormalElement, FreeAlgebra, Generator, SuperMonomial, VectorField
from ..graded import GradingMode
from ..liealg import GradedLieAlgebra, LieModule, trivial_module
from ..errors import ModeMismatch, ShapeMismatch, TruncationRequired

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 8

# basis element of a cochain space: (CE monomial, index in the coefficient module)
CochainBasisElement = Tuple[SuperMonomial, int]


def ce_generators(alg: GradedLieAlgebra) -> FreeAlgebra:
    """Generators of Ŝ((𝔤[1])*): one dual x^a of degree 1 - |e_a| per basis element, in basis order."""
    degrees = [1 - d for d in alg.basis.degrees]
    if alg.mode == GradingMode.Z2:
        degrees = [d % 2 for d in degrees]
    return FreeAlgebra(tuple(Generator(f"{n}*", d) for n, d in zip(alg.basis.names, degrees)))


def ce_vector_field(alg: GradedLieAlgebra, algebra: Optional[FreeAlgebra] = None) -> VectorField:
    """d_CE as a formal vector field: d_CE(x^k) = -½ Σ_{p,q} (-1)^{(|x^p|+1)|x^q|} N_pq^k x^p x^q.

    Args:
        alg (GradedLieAlgebra): the algebra
        algebra (Optional[FreeAlgebra], optional): generators to use instead of `ce_generators(alg)`. Defaults to None.

    Returns:
        VectorField: the Chevalley-Eilenberg differential
    """
    algebra = algebra or ce_generators(alg)
    if len(algebra) != alg.dim:
        raise ShapeMismatch(alg.dim, len(algebra))
    half = QQ(1, 2)
    coefficients: Dict[int, FormalElement] = {}
    for (p, q, k), c in alg.structure_constants.items():
        pe, qe = alg.parity(p), alg.parity(q)
        sign = -1 if pe * (qe + 1) % 2 else 1
        term = FormalElement.generator(algebra, p) * FormalElement.generator(algebra, q)
        coefficients[k] = coefficients.get(k, FormalElement.zero(algebra)) + term.scale(-half * sign * c)
    return VectorField(algebra, coefficients)


@dataclass(frozen=True)
class DegreeEntry:
    i: int
    dim: int
    stable: bool = True

    def to_dict(self) -> dict:
        return {"i": self.i, "dim": self.dim, "stable": self.stable}


@dataclass
class CohomologyTable:
    """Dimensions of H^i together with the truncation they were computed at.

    Args:
        entries (List[DegreeEntry]): one entry per reported degree, sorted by degree
        truncation (Optional[int], optional): truncation order used, None when the complex is finite. Defaults to None.
        grading (str, optional): what the degree index counts. Defaults to "ce_degree".
    """
    entries: List[DegreeEntry] = field(default_factory=list)
    truncation: Optional[int] = None
    grading: str = "ce_degree"

    @property
    def dims(self) -> Dict[int, int]:
        return {e.i: e.dim for e in self.entries}

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def stable(self) -> bool:
        return all(e.stable for e in self.entries)

    def euler_characteristic(self) -> int:
        return sum((-1) ** e.i * e.dim for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "degrees": [e.to_dict() for e in self.entries],
            "grading": self.grading,
            "truncation": self.truncation,
        }


class CeCochainComplex:
    """CE^•(𝔤, M) = Ŝ((𝔤[1])*) ⊗ M graded by CE-degree (polynomial order), possibly twisted.

    D(A⊗m) = d_CE(A)⊗m + Σ_a (-1)^{|e_a||A|} x^a A ⊗ e_a·m, plus sign·ξA⊗m for a twist ξ.
    Each CE-degree slice is finite; with an odd part the complex is unbounded, so the reported window
    needs `max_degree` or `truncation`.

    Args:
        alg (GradedLieAlgebra): the algebra
        coefficients (Optional[LieModule], optional): the module M. Defaults to the trivial module.
        max_degree (Optional[int], optional): last CE-degree reported. Defaults to None.
        truncation (Optional[int], optional): y-exponent window used when max_degree is not given. Defaults to None.
        twist (Optional[FormalElement], optional): a linear element ξ of Ŝ((𝔤[1])*). Defaults to None.
        twist_sign (int, optional): +1 for the left twist D + ξ·, -1 for the right twist. Defaults to 1.
    """

    def __init__(
        self,
        alg: GradedLieAlgebra,
        coefficients: Optional[LieModule] = None,
        max_degree: Optional[int] = None,
        truncation: Optional[int] = None,
        twist: Optional[FormalElement] = None,
        twist_sign: int = 1,
    ) -> None:
        self.algebra = alg
        self.coefficients = coefficients or trivial_module(alg)
        if len(self.coefficients.action) != alg.dim:
            raise ShapeMismatch(alg.dim, len(self.coefficients.action))
        self.ce_algebra = ce_generators(alg)
        self.d_ce = ce_vector_field(alg, self.ce_algebra)
        self.truncation = truncation
        if max_degree is None:
            if alg.n_odd == 0:
                max_degree = alg.n_even
            elif truncation is not None:
                max_degree = truncation
            else:
                raise TruncationRequired("The CE complex of an algebra with an odd part")
        self.max_degree = max_degree
        if twist is not None:
            if twist.algebra != self.ce_algebra:
                raise ModeMismatch("The twist must live in the CE algebra of the same Lie algebra")
            if twist.orders() - {1}:
                raise ModeMismatch(f"Twists of CE^•(𝔤, M) must be linear, got orders {sorted(twist.orders())}")
        self.twist = twist
        self.twist_sign = twist_sign
        self._bases: Dict[int, List[CochainBasisElement]] = {}
        self._differentials: Dict[int, SparseMatrix] = {}
        self._action_columns = [self._columns(mat) for mat in self.coefficients.action]

    @staticmethod
    def _columns(mat: SparseMatrix) -> Dict[int, List[Tuple[int, object]]]:
        out: Dict[int, List[Tuple[int, object]]] = {}
        for (q, p), v in sorted(mat.entries.items()):
            out.setdefault(p, []).append((q, v))
        return out

    @property
    def bounded(self) -> bool:
        return self.algebra.n_odd == 0

    def basis(self, k: int) -> List[CochainBasisElement]:
        """Basis of CE^k: sorted monomials of order k times the module basis."""
        if k < 0:
            return []
        cached = self._bases.get(k)
        if cached is None:
            cached = [(m, p) for m in self.ce_algebra.monomials_of_order(k) for p in range(self.coefficients.dim)]
            self._bases[k] = cached
        return cached

    def basis_degree(self, element: CochainBasisElement) -> int:
        mono, p = element
        d = self.ce_algebra.monomial_degree(mono) + self.coefficients.carrier.degrees[p]
        return d % 2 if self.algebra.mode == GradingMode.Z2 else d

    def _apply(self, mono: SuperMonomial, p: int) -> Dict[CochainBasisElement, object]:
        out: Dict[CochainBasisElement, object] = {}

        def add(key: CochainBasisElement, c) -> None:
            out[key] = out.get(key, QQ.zero) + c

        ce = self.ce_algebra
        for m2, c in self.d_ce.apply(FormalElement(ce, {mono: QQ.one})).terms.items():
            add((m2, p), c)
        pa = ce.monomial_parity(mono)
        for a in range(self.algebra.dim):
            column = self._action_columns[a].get(p)
            if not column:
                continue
            prod = ce.multiply_monomials(ce.generator_monomial(a), mono)
            if prod is None:
                continue
            s, m2 = prod
            sign = -s if self.algebra.parity(a) * pa else s
            for q, v in column:
                add((m2, q), sign * v)
        if self.twist is not None:
            for tm, tc in self.twist.terms.items():
                prod = ce.multiply_monomials(tm, mono)
                if prod is not None:
                    s, m2 = prod
                    add((m2, p), self.twist_sign * s * tc)
        return out

    def differential(self, k: int) -> SparseMatrix:
        """Matrix of D: CE^k → CE^{k+1} (columns: source basis, rows: target basis)."""
        cached = self._differentials.get(k)
        if cached is not None:
            return cached
        source, target = self.basis(k), self.basis(k + 1)
        index = {b: r for r, b in enumerate(target)}
        entries = []
        for col, (mono, p) in enumerate(source):
            for key, c in self._apply(mono, p).items():
                entries.append(((index[key], col), c))
        mat = SparseMatrix.from_entries(len(target), len(source), entries)
        logger.debug(f"CE differential {k}→{k + 1}: {mat.rows}x{mat.cols}, {len(mat.entries)} nonzeros")
        self._differentials[k] = mat
        return mat

    def homology(self, k: int) -> int:
        d_in = self.differential(k - 1) if k > 0 else SparseMatrix.zeros(len(self.basis(0)), 0)
        return homology_dim(self.differential(k), d_in, where=f"CE-degree {k}")

    def cohomology(self) -> CohomologyTable:
        """Every reported degree is exact: a CE-degree slice is finite and D only reaches the next slice,
        so the window bounds which degrees are listed, never their dimensions."""
        entries = [DegreeEntry(k, self.homology(k)) for k in range(self.max_degree + 1)]
        return CohomologyTable(entries, None if self.bounded else self.max_degree)


def ce_differential(
    alg: GradedLieAlgebra, coefficients: Optional[LieModule], ce_degree: int, truncation: Optional[int] = None
) -> SparseMatrix:
    """Matrix of the CE differential from CE-degree `ce_degree` to `ce_degree + 1`.

    Raises:
        TruncationRequired: if the algebra has an odd part and `ce_degree` lies beyond the truncation window
    """
    if alg.n_odd and (truncation is None or ce_degree > truncation):
        raise TruncationRequired(f"CE-degree {ce_degree} of an algebra with an odd part")
    return CeCochainComplex(alg, coefficients, max_degree=max(ce_degree, 0), truncation=truncation).differential(ce_degree)


def cohomology(
    alg: GradedLieAlgebra,
    coefficients: Optional[LieModule] = None,
    max_degree: Optional[int] = None,
    truncation: Optional[int] = None,
) -> CohomologyTable:
    """Dimension table of H^•(𝔤, M) up to `max_degree`.

    Args:
        alg (GradedLieAlgebra): the algebra
        coefficients (Optional[LieModule], optional): the module. Defaults to the trivial module.
        max_degree (Optional[int], optional): last degree. Defaults to dim 𝔤 when there is no odd part.
        truncation (Optional[int], optional): window used for algebras with an odd part. Defaults to None.

    Returns:
        CohomologyTable: dims with stability flags
    """
    return CeCochainComplex(alg, coefficients, max_degree, truncation).cohomology()
