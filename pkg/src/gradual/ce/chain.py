import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .complex import CeCochainComplex, CochainBasisElement, CohomologyTable, DegreeEntry
from ..exact import SparseMatrix, homology_dim
from ..liealg import GradedLieAlgebra, LieModule, dual_module, trivial_module, twisted_dual_module
from ..errors import ModeMismatch

logger = logging.getLogger(__name__)


class ChainComplex:
    """C_•(𝔤, N) = S(𝔤[1]) ⊗ N, defined as the pairing-dual of CE^•(𝔤, N^∨).

    The boundary δ: C_{k+1} → C_k satisfies ⟨d_CE X, A⟩ = -(-1)^{|X|} ⟨X, δA⟩ for the dual bases,
    so δ is the transpose of the cochain differential with a sign on each row.

    Args:
        cochains (CeCochainComplex): the complex with coefficients in N^∨
    """

    def __init__(self, cochains: CeCochainComplex) -> None:
        self.cochains = cochains
        self._boundaries: Dict[int, SparseMatrix] = {}

    @property
    def max_degree(self) -> int:
        return self.cochains.max_degree

    def basis(self, k: int) -> List[CochainBasisElement]:
        return self.cochains.basis(k)

    def boundary(self, k: int) -> SparseMatrix:
        """Matrix of δ: C_k → C_{k-1}."""
        cached = self._boundaries.get(k)
        if cached is not None:
            return cached
        if k <= 0:
            mat = SparseMatrix.zeros(0, len(self.basis(0)))
        else:
            d = self.cochains.differential(k - 1)
            targets = self.basis(k - 1)
            signs = [1 if self.cochains.basis_degree(x) % 2 else -1 for x in targets]
            mat = SparseMatrix(d.cols, d.rows, {(x, a): signs[x] * v for (a, x), v in d.entries.items()})
        self._boundaries[k] = mat
        return mat

    def homology(self, k: int) -> int:
        return homology_dim(self.boundary(k), self.boundary(k + 1), where=f"chain degree {k}")

    def homology_table(self) -> CohomologyTable:
        return CohomologyTable(
            [DegreeEntry(k, self.homology(k)) for k in range(self.max_degree + 1)],
            None if self.cochains.bounded else self.max_degree,
            "chain_degree",
        )


def chain_complex(
    alg: GradedLieAlgebra,
    coefficients: Optional[LieModule] = None,
    max_degree: Optional[int] = None,
    truncation: Optional[int] = None,
) -> ChainComplex:
    n = coefficients or trivial_module(alg)
    return ChainComplex(CeCochainComplex(alg, dual_module(alg, n), max_degree, truncation))


def pairing_violations(chain: ChainComplex, k: int) -> List[Tuple[CochainBasisElement, CochainBasisElement]]:
    """Basis pairs (X, A), X of degree k and A of degree k+1, where ⟨dX, A⟩ + (-1)^{|X|}⟨X, δA⟩ ≠ 0."""
    d = chain.cochains.differential(k)
    delta = chain.boundary(k + 1)
    out = []
    for x, X in enumerate(chain.basis(k)):
        sign = -1 if chain.cochains.basis_degree(X) % 2 else 1
        for a, A in enumerate(chain.basis(k + 1)):
            if d[(a, x)] + sign * delta[(x, a)] != 0:
                out.append((X, A))
    return out


@dataclass(frozen=True)
class HazewinkelEntry:
    i: int
    chain_dim: int
    cochain_dim: int

    @property
    def match(self) -> bool:
        return self.chain_dim == self.cochain_dim

    def to_dict(self) -> dict:
        return {"i": self.i, "dim": self.chain_dim, "dual_dim": self.cochain_dim, "stable": True, "match": self.match}


@dataclass
class HazewinkelReport:
    """dim H_i(𝔤, (M*)^tw) against dim H^{n-i}(𝔤, M*) for i = 0..n."""
    entries: List[HazewinkelEntry] = field(default_factory=list)
    twisted: bool = True

    @property
    def match(self) -> bool:
        return all(e.match for e in self.entries)

    def to_dict(self) -> dict:
        return {"degrees": [e.to_dict() for e in self.entries], "match": self.match, "twisted": self.twisted}


def hazewinkel_check(alg: GradedLieAlgebra, m: LieModule, twisted: bool = True) -> HazewinkelReport:
    """Compare dim H_i(𝔤, (M*)^tw) with dim H^{n-i}(𝔤, M*) for an ungraded 𝔤 of dimension n.

    With `twisted=False` the chain side uses M* itself, which is Poincaré duality and holds for unimodular 𝔤.

    Args:
        alg (GradedLieAlgebra): an ungraded algebra
        m (LieModule): the module M
        twisted (bool, optional): twist the chain coefficients by the supertrace character. Defaults to True.

    Raises:
        ModeMismatch: if the algebra is not ungraded

    Returns:
        HazewinkelReport: per-degree dimensions of both sides
    """
    if not alg.is_ungraded:
        raise ModeMismatch("The Hazewinkel check needs an ungraded Lie algebra")
    n = alg.dim
    m_dual = dual_module(alg, m)
    chain_coefficients = twisted_dual_module(alg, m).underlying if twisted else m_dual
    chains = chain_complex(alg, chain_coefficients).homology_table()
    cochains = CeCochainComplex(alg, m_dual).cohomology()
    report = HazewinkelReport(
        [HazewinkelEntry(i, chains.dim(i), cochains.dim(n - i)) for i in range(n + 1)], twisted
    )
    if not report.match:
        logger.warning(f"Hazewinkel dimensions differ for {alg.name or 'algebra'} with {m.name or 'module'}: {report.to_dict()}")
    return report
