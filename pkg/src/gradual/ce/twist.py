import logging
from dataclasses import dataclass
from typing import Optional

from .complex import CeCochainComplex
from ..formal import FormalElement, VectorField
from ..graded import GradingMode
from ..errors import CompositionNonzero, InputError, NotMaurerCartan

logger = logging.getLogger(__name__)

SIDES = ("right", "left")


def maurer_cartan_residue(differential: VectorField, element: FormalElement, order: Optional[int] = None) -> FormalElement:
    """dξ + ξ², truncated above `order` when given."""
    residue = differential.apply(element) + element * element
    return residue if order is None else residue.truncate(order)


@dataclass(frozen=True)
class McElement:
    """A Maurer-Cartan element ξ: odd, of degree 1 (parity 1 in Z2 mode), with dξ + ξ² = 0.

    Build it through `McElement.validated`, which runs the check.
    """
    element: FormalElement

    @classmethod
    def validated(
        cls,
        differential: VectorField,
        element: FormalElement,
        order: Optional[int] = None,
        mode: GradingMode = GradingMode.Z,
    ) -> "McElement":
        """Check the Maurer-Cartan equation for the derivation `differential`.

        Args:
            differential (VectorField): d_CE or an L∞ derivation ℓ
            element (FormalElement): candidate ξ
            order (Optional[int], optional): check modulo monomials of order > order. Defaults to None.
            mode (GradingMode, optional): in Z2 mode only the parity of ξ is checked. Defaults to GradingMode.Z.

        Raises:
            NotMaurerCartan: if ξ is not homogeneous of degree 1 or dξ + ξ² ≠ 0

        Returns:
            McElement: the validated element
        """
        if not element.is_zero():
            degree = element.degree
            if degree is None or degree % 2 != 1 or (degree != 1 and mode == GradingMode.Z):
                raise NotMaurerCartan(f"ξ = {element} is not homogeneous of degree 1")
        residue = maurer_cartan_residue(differential, element, order)
        if not residue.is_zero():
            logger.error(f"Maurer-Cartan check failed for {element}")
            raise NotMaurerCartan(str(residue))
        return cls(element)

    @classmethod
    def zero(cls, differential: VectorField) -> "McElement":
        return cls(FormalElement.zero(differential.algebra))

    def __neg__(self) -> "McElement":
        return McElement(-self.element)


def twist_differential(complex_: CeCochainComplex, xi: McElement, side: str = "right") -> CeCochainComplex:
    """The complex with differential d^{[ξ]} = D - ξ· (right twist) or ^{[ξ]}d = D + ξ· (left twist).

    For odd ξ in a graded-commutative algebra, d(m) - (-1)^{|m|} mξ = d(m) - ξm, so both twists are
    left multiplications and twisting by ξ then by -ξ on the same side gives back D.
    d² = 0 is re-verified by the homology computations of the returned complex.

    Args:
        complex_ (CeCochainComplex): the complex to twist
        xi (McElement): a validated Maurer-Cartan element
        side (str, optional): "right" or "left". Defaults to "right".

    Raises:
        InputError: if side is not one of SIDES
        NotMaurerCartan: if ξ is not Maurer-Cartan for d_CE

    Returns:
        CeCochainComplex: the twisted complex
    """
    if side not in SIDES:
        raise InputError(f"Twist side must be one of {SIDES}, got '{side}'")
    McElement.validated(complex_.d_ce, xi.element, mode=complex_.algebra.mode)
    sign = -1 if side == "right" else 1
    combined = xi.element.scale(sign)
    if complex_.twist is not None:
        combined = combined + complex_.twist.scale(complex_.twist_sign)
    twisted = CeCochainComplex(
        complex_.algebra,
        complex_.coefficients,
        complex_.max_degree,
        complex_.truncation,
        None if combined.is_zero() else combined,
        1,
    )
    for k in range(twisted.max_degree):
        product = twisted.differential(k + 1).matmul(twisted.differential(k))
        if not product.is_zero():
            logger.error(f"Twisted differential does not square to zero at CE-degree {k}")
            raise CompositionNonzero(f"twisted CE-degree {k}")
    return twisted
