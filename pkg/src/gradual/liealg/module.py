import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from .algebra import GradedLieAlgebra, adjoint_matrix, supertrace_character
from ..exact import SparseMatrix
from ..graded import GradedBasis, GradingMode
from ..errors import InputError, ModuleAxiomViolation, ShapeMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LieModule:
    """Finite-dimensional left module: action[i] is the matrix of ρ(e_i).

    Entry (q, p) of ρ(e_i) is the coefficient of m_q in e_i·m_p.

    Args:
        carrier (GradedBasis): homogeneous basis of M
        action (Tuple[SparseMatrix, ...]): one square matrix per algebra basis element
        name (str, optional): label used in reports. Defaults to "".
    """
    carrier: GradedBasis
    action: Tuple[SparseMatrix, ...]
    name: str = ""

    def __post_init__(self) -> None:
        n = len(self.carrier)
        for mat in self.action:
            if mat.shape != (n, n):
                raise ShapeMismatch((n, n), mat.shape)

    @property
    def dim(self) -> int:
        return len(self.carrier)


@dataclass(frozen=True, eq=False)
class TwistedDualModule:
    """(M*)^tw on the carrier M*[-|𝔤|].

    `right_action[i]` is the matrix of ν ↦ ν ._tw e_i; `underlying` is the same module
    seen as a left module through the antipode.
    """
    carrier: GradedBasis
    right_action: Tuple[SparseMatrix, ...]
    underlying: LieModule


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def opposite_action(mat: SparseMatrix, u_parity: int, parities: Sequence[int]) -> SparseMatrix:
    """Turn a right action into a left one, u·m := -(-1)^{|u||m|} m·u (the antipode S(u) = -u).

    Applied twice it returns the original matrix. Every side conversion in the package goes through here.
    """
    return SparseMatrix(
        mat.rows, mat.cols, {(p, q): -_sign(u_parity * parities[q]) * v for (p, q), v in mat.entries.items()}
    )


def module_violations(alg: GradedLieAlgebra, m: LieModule) -> List[str]:
    """List the pairs (e_i, e_j) where ρ([e_i,e_j]) ≠ [ρ(e_i), ρ(e_j)], plus degree violations."""
    out: List[str] = []
    names = alg.basis.names
    if len(m.action) != alg.dim:
        return [f"expected {alg.dim} action matrices, got {len(m.action)}"]
    degrees = m.carrier.degrees
    for i, mat in enumerate(m.action):
        for (q, p), _ in mat.entries.items():
            shift = degrees[q] - degrees[p] - alg.basis.degrees[i]
            if (shift % 2 if m.carrier.mode == GradingMode.Z2 or alg.mode == GradingMode.Z2 else shift) != 0:
                out.append(f"{names[i]} maps {m.carrier.names[p]} to {m.carrier.names[q]} with the wrong degree")
                break
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            lhs = SparseMatrix.zeros(m.dim, m.dim)
            for k, c in alg.bracket_basis(i, j).items():
                lhs = lhs.add(m.action[k].scale(c))
            sign = _sign(alg.parity(i) * alg.parity(j))
            rhs = m.action[i].matmul(m.action[j]).add(m.action[j].matmul(m.action[i]).scale(-sign))
            if not lhs.add(rhs.scale(-1)).is_zero():
                out.append(f"[{names[i]},{names[j]}]")
    return out


def check_module(alg: GradedLieAlgebra, m: LieModule) -> LieModule:
    violations = module_violations(alg, m)
    if violations:
        logger.error(f"Module {m.name or '?'} fails the module axioms: {violations}")
        raise ModuleAxiomViolation(violations)
    return m


def trivial_module(alg: GradedLieAlgebra, degree: int = 0) -> LieModule:
    carrier = GradedBasis(("1",), (degree,), alg.mode)
    return LieModule(carrier, tuple(SparseMatrix.zeros(1, 1) for _ in range(alg.dim)), "trivial")


def adjoint_module(alg: GradedLieAlgebra) -> LieModule:
    return LieModule(alg.basis, tuple(adjoint_matrix(alg, i) for i in range(alg.dim)), "adjoint")


def dual_module(alg: GradedLieAlgebra, m: LieModule) -> LieModule:
    """Contragredient module M*: (u·φ)(m) = -(-1)^{|u||φ|} φ(u·m)."""
    carrier = m.carrier.dual()
    parities = carrier.parities
    action = tuple(opposite_action(mat.transpose(), alg.parity(i), parities) for i, mat in enumerate(m.action))
    return check_module(alg, LieModule(carrier, action, f"{m.name}*"))


def tensor_module(alg: GradedLieAlgebra, n: LieModule, m: LieModule) -> LieModule:
    """N ⊗ M through the primitive coproduct Δ(u) = u⊗1 + 1⊗u; basis n_i⊗m_j sits at i·dim M + j."""
    dm = m.dim
    names = tuple(f"{a}⊗{b}" for a in n.carrier.names for b in m.carrier.names)
    degrees = tuple(a + b for a in n.carrier.degrees for b in m.carrier.degrees)
    if alg.mode == GradingMode.Z2:
        degrees = tuple(d % 2 for d in degrees)
    action = []
    for u in range(alg.dim):
        pu = alg.parity(u)
        entries = []
        for (k, i), c in n.action[u].entries.items():
            entries.extend((((k * dm + j, i * dm + j), c) for j in range(dm)))
        for (l, j), c in m.action[u].entries.items():
            for i in range(n.dim):
                entries.append(((i * dm + l, i * dm + j), _sign(pu * n.carrier.parity(i)) * c))
        action.append(SparseMatrix.from_entries(n.dim * dm, n.dim * dm, entries))
    return check_module(alg, LieModule(GradedBasis(names, degrees, alg.mode), tuple(action), f"{n.name}⊗{m.name}"))


def hom_module(alg: GradedLieAlgebra, m: LieModule, n: LieModule) -> LieModule:
    """Hom(M, N) with (u·f) = u∘f - (-1)^{|u||f|} f∘u; E_ij (m_j ↦ n_i) sits at i·dim M + j."""
    dm = m.dim
    names = tuple(f"{a}←{b}" for a in n.carrier.names for b in m.carrier.names)
    degrees = tuple(a - b for a in n.carrier.degrees for b in m.carrier.degrees)
    if alg.mode == GradingMode.Z2:
        degrees = tuple(d % 2 for d in degrees)
    action = []
    for u in range(alg.dim):
        pu = alg.parity(u)
        entries = []
        for (k, i), c in n.action[u].entries.items():
            entries.extend((((k * dm + j, i * dm + j), c) for j in range(dm)))
        for (j, l), c in m.action[u].entries.items():
            for i in range(n.dim):
                entries.append(((i * dm + l, i * dm + j), -_sign(pu * degrees[i * dm + j]) * c))
        action.append(SparseMatrix.from_entries(n.dim * dm, n.dim * dm, entries))
    return check_module(alg, LieModule(GradedBasis(names, degrees, alg.mode), tuple(action), f"Hom({m.name},{n.name})"))


def twisted_dual_module(alg: GradedLieAlgebra, m: LieModule, character_scale: int = 1) -> TwistedDualModule:
    """(M*)^tw: ν ._tw u = ν.u + str(ad_u)·ν on M*[-|𝔤|], where (ν.u)(m) = ν(u·m).

    Args:
        alg (GradedLieAlgebra): the algebra
        m (LieModule): the left module M
        character_scale (int, optional): multiple of the supertrace character used for the twist. Defaults to 1.

    Raises:
        ModuleAxiomViolation: if the constructed action is not a module

    Returns:
        TwistedDualModule: the twisted right module and its left-module form
    """
    check_module(alg, m)
    carrier = m.carrier.dual().shift(-alg.total_dimension)
    chi = supertrace_character(alg)
    right = tuple(
        mat.transpose().add(SparseMatrix.identity(m.dim).scale(character_scale * chi[i]))
        for i, mat in enumerate(m.action)
    )
    parities = carrier.parities
    left = tuple(opposite_action(mat, alg.parity(i), parities) for i, mat in enumerate(right))
    underlying = check_module(alg, LieModule(carrier, left, f"({m.name}*)^tw"))
    return TwistedDualModule(carrier, right, underlying)


def untwisted_dual(alg: GradedLieAlgebra, tw: TwistedDualModule, character_scale: int = 1) -> LieModule:
    """Dual of the right module (M*)^tw, twisted back by the negated character; recovers M on M**."""
    chi = supertrace_character(alg)
    n = len(tw.carrier)
    action = tuple(
        mat.transpose().add(SparseMatrix.identity(n).scale(-character_scale * chi[i]))
        for i, mat in enumerate(tw.right_action)
    )
    carrier = tw.carrier.shift(alg.total_dimension).dual()
    return check_module(alg, LieModule(carrier, action, "untwisted"))
