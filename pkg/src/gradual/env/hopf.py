import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from .enveloping import EnvelopingAlgebra, PbwMonomial, UElement
from ..exact import Scalar, SparseMatrix, rank
from ..graded import GradingMode
from ..liealg import GradedLieAlgebra, LieModule, dual_module, hom_module, tensor_module

logger = logging.getLogger(__name__)

# ⟨α_j, m_k⟩ for the j-th basis covector of M* and the k-th basis vector of M
Pairing = Callable[[int, int], Scalar]


@dataclass(frozen=True)
class HopfMaps:
    """Generator-level Hopf data of U(𝔤): Δ(u) = u⊗1 + 1⊗u, S(u) = -u, ε(u) = 0.

    The multiplicative extensions live on `EnvelopingAlgebra` (`coproduct`, `antipode`, `counit`).
    """
    env: EnvelopingAlgebra

    def coproduct(self, i: int) -> Dict[Tuple[PbwMonomial, PbwMonomial], Scalar]:
        return self.env.coproduct(self.env.generator(i))

    def antipode(self, i: int) -> UElement:
        return self.env.antipode(self.env.generator(i))

    def counit(self, i: int) -> Scalar:
        return self.env.counit(self.env.generator(i))


def hopf_maps(alg: GradedLieAlgebra) -> HopfMaps:
    return HopfMaps(EnvelopingAlgebra(alg))


@dataclass
class DualityIsomorphismReport:
    """Outcome of checking φ: N ⊗ M* → Hom(M, N), φ(n⊗α)(m) = n·α(m)."""
    bijective: bool
    equivariant: bool
    mismatches: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.bijective and self.equivariant

    def to_dict(self) -> dict:
        return {
            "bijective": self.bijective,
            "equivariant": self.equivariant,
            "mismatches": list(self.mismatches),
            "valid": self.valid,
        }


def evaluation_pairing(m: LieModule) -> Pairing:
    """The evaluation of M* on M in the dual basis; it vanishes unless the degrees add up to zero."""
    covectors, vectors = m.carrier.dual(), m.carrier

    def pairing(j: int, k: int) -> Scalar:
        total = covectors.degrees[j] + vectors.degrees[k]
        if vectors.mode == GradingMode.Z2:
            total %= 2
        return QQ.one if j == k and total == 0 else QQ.zero

    return pairing


def duality_isomorphism(
    alg: GradedLieAlgebra, m: LieModule, n: LieModule, pairing: Optional[Pairing] = None
) -> DualityIsomorphismReport:
    """Check that φ is a module isomorphism N ⊗ M* → Hom(M, N).

    In the bases n_i ⊗ α_j and E_ik (m_k ↦ n_i), both indexed by i·dim M + j, φ(n_i⊗α_j) = Σ_k ⟨α_j, m_k⟩ E_ik.
    α and m are adjacent in n·α(m), so no Koszul sign enters.

    Args:
        alg (GradedLieAlgebra): the algebra
        m (LieModule): the finite-dimensional module M
        n (LieModule): the module N
        pairing (Optional[Pairing], optional): ⟨α_j, m_k⟩. Defaults to `evaluation_pairing(m)`.

    Returns:
        DualityIsomorphismReport: bijectivity and equivariance of φ
    """
    source = tensor_module(alg, n, dual_module(alg, m))
    target = hom_module(alg, m, n)
    size = n.dim * m.dim
    pairing = pairing or evaluation_pairing(m)
    dm = m.dim
    entries = []
    for j in range(dm):
        for k in range(dm):
            c = pairing(j, k)
            if c:
                entries.extend(((i * dm + k, i * dm + j), c) for i in range(n.dim))
    phi = SparseMatrix.from_entries(size, size, entries)
    bijective = rank(phi) == size
    mismatches = []
    for i in range(alg.dim):
        lhs = phi.matmul(source.action[i])
        rhs = target.action[i].matmul(phi)
        if not lhs.add(rhs.scale(-1)).is_zero():
            mismatches.append(alg.basis.names[i])
    if mismatches:
        logger.warning(f"φ fails to intertwine the action of {mismatches}")
    return DualityIsomorphismReport(bijective, not mismatches, mismatches)
