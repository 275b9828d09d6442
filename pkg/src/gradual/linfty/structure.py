import logging
from dataclasses import dataclass
from typing import Dict, Optional

from ..ce import McElement, ce_generators, ce_vector_field
from ..formal import FormalElement, FreeAlgebra, VectorField
from ..graded import GradedBasis, GradingMode
from ..liealg import GradedLieAlgebra, ValidationReport, Violation
from ..errors import NotCocycle

logger = logging.getLogger(__name__)


def default_truncation(max_order: int) -> int:
    return max(8, 2 * max_order + 2)


@dataclass(frozen=True, eq=False)
class LinftyStructure:
    """An L∞-algebra 𝔤 given by a degree +1 derivation ℓ of Ŝ((𝔤[1])*) with ℓ² = 0 and no constant term.

    Args:
        algebra (FreeAlgebra): generators of (𝔤[1])*
        derivation (VectorField): ℓ, stored up to polynomial order `truncation`
        truncation (Optional[int], optional): working order T. Defaults to max(8, 2·max order + 2).
        mode (GradingMode, optional): in Z2 mode degrees are parities. Defaults to GradingMode.Z.
        name (str, optional): label used in reports. Defaults to "".
    """
    algebra: FreeAlgebra
    derivation: VectorField
    truncation: Optional[int] = None
    mode: GradingMode = GradingMode.Z
    name: str = ""

    def __post_init__(self) -> None:
        if self.truncation is None:
            object.__setattr__(self, "truncation", default_truncation(self.max_order))

    @property
    def order(self) -> int:
        return self.truncation  # type: ignore[return-value]

    @property
    def basis(self) -> GradedBasis:
        return GradedBasis(
            tuple(g.name for g in self.algebra.generators), tuple(g.degree for g in self.algebra.generators), self.mode
        )

    @property
    def max_order(self) -> int:
        return max((o for f in self.derivation.coefficients.values() for o in f.orders()), default=0)

    def components(self) -> Dict[int, VectorField]:
        """The brackets l_k as the order-k parts of ℓ."""
        orders = sorted({o for f in self.derivation.coefficients.values() for o in f.orders()})
        return {
            k: VectorField(self.algebra, {i: f.component(k) for i, f in self.derivation.coefficients.items()})
            for k in orders
        }

    def degree_of(self, f: FormalElement) -> Optional[int]:
        d = f.degree
        if d is None or self.mode == GradingMode.Z:
            return d
        return d % 2

    @property
    def total_dimension(self) -> int:
        """|𝔤| = Σ|x| + m - Σ|y| over odd generators x and the m even generators y; n + m mod 2 in Z2 mode."""
        gens = self.algebra.generators
        if self.mode == GradingMode.Z2:
            return len(gens) % 2
        odd = sum(g.degree for g in gens if g.parity)
        even = [g.degree for g in gens if not g.parity]
        return odd + len(even) - sum(even)


def validate_linfty(s: LinftyStructure) -> ValidationReport:
    """Check that ℓ has degree +1, has no constant term and squares to zero up to order T."""
    report = ValidationReport()
    names = s.algebra.names
    one = s.algebra.one
    for i, f in sorted(s.derivation.coefficients.items()):
        g = s.algebra.generators[i]
        for m in f.terms:
            shift = s.algebra.monomial_degree(m) - g.degree
            if (shift % 2 if s.mode == GradingMode.Z2 else shift) != 1:
                report.violations.append(
                    Violation("degree", (names[i], s.algebra.format_monomial(m)), f"ℓ({g.name}) has a term of degree shift {shift}")
                )
                break
        if f.coefficient(one) != 0:
            report.violations.append(Violation("constant", (names[i],), f"ℓ({g.name}) has a constant term"))
    for i, name in enumerate(names):
        square = s.derivation.apply(s.derivation.coefficient(i)).truncate(s.order)
        if not square.is_zero():
            first = min(square.terms)
            report.violations.append(
                Violation("square", (name, s.algebra.format_monomial(first)), f"ℓ(ℓ({name})) = {square}")
            )
    if report.violations:
        logger.debug(f"{s.name or 'L∞ structure'}: {len(report.violations)} violations")
    return report


def is_minimal(s: LinftyStructure) -> bool:
    """True iff l₁ = 0, i.e. no ℓ(g) has a linear term."""
    return all(1 not in f.orders() for f in s.derivation.coefficients.values())


def satisfies_hypothesis_h(s: LinftyStructure) -> bool:
    """True iff ℓ kills every even generator."""
    return all(s.derivation.coefficient(i).is_zero() for i in s.algebra.even_indices)


def divergence_cocycle(s: LinftyStructure) -> McElement:
    """∇(ℓ), checked to be a degree 1 cocycle up to order T.

    Raises:
        NotCocycle: if ∇(ℓ) has the wrong degree or ℓ(∇(ℓ)) ≠ 0 below the truncation

    Returns:
        McElement: ∇(ℓ) as a twisting element
    """
    nabla = s.derivation.divergence()
    if not nabla.is_zero():
        d = s.degree_of(nabla)
        if d is None or d != 1:
            raise NotCocycle(f"∇(ℓ) = {nabla} is not homogeneous of degree 1")
    residue = s.derivation.apply(nabla).truncate(s.order)
    if not residue.is_zero():
        logger.error(f"ℓ(∇ℓ) ≠ 0 for {s.name or 'L∞ structure'}")
        raise NotCocycle(str(residue))
    # ∇(ℓ) is odd, so (∇ℓ)² = 0 and the cocycle condition is the Maurer-Cartan equation
    return McElement(nabla)


def linfty_from_lie_algebra(alg: GradedLieAlgebra, truncation: Optional[int] = None) -> LinftyStructure:
    """The quadratic L∞ structure ℓ = d_CE of a graded Lie algebra."""
    algebra = ce_generators(alg)
    return LinftyStructure(algebra, ce_vector_field(alg, algebra), truncation, alg.mode, alg.name)
