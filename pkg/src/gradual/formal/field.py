from typing import Dict, Iterable, Optional, Set, Tuple, Union

from sympy.polys.domains import QQ

from .algebra import FreeAlgebra
from .element import FormalElement
from ..exact import Scalar
from ..errors import ModeMismatch


class VectorField:
    """Formal vector field ξ = Σ f_i ∂/∂g_i, acting through left partial derivatives.

    Args:
        algebra (FreeAlgebra): the algebra ξ differentiates
        coefficients (Dict[int, FormalElement], optional): generator index → f_i. Defaults to None.
    """

    def __init__(self, algebra: FreeAlgebra, coefficients: Optional[Dict[int, FormalElement]] = None) -> None:
        self.algebra = algebra
        self.coefficients: Dict[int, FormalElement] = {
            i: f for i, f in (coefficients or {}).items() if not f.is_zero()
        }

    @classmethod
    def from_names(cls, algebra: FreeAlgebra, coefficients: Dict[str, FormalElement]) -> "VectorField":
        return cls(algebra, {algebra.index(name): f for name, f in coefficients.items()})

    def coefficient(self, i: int) -> FormalElement:
        return self.coefficients.get(i, FormalElement.zero(self.algebra))

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.algebra == other.algebra and self.coefficients == other.coefficients

    def __add__(self, other: "VectorField") -> "VectorField":
        keys = set(self.coefficients) | set(other.coefficients)
        return VectorField(self.algebra, {i: self.coefficient(i) + other.coefficient(i) for i in keys})

    def __neg__(self) -> "VectorField":
        return VectorField(self.algebra, {i: -f for i, f in self.coefficients.items()})

    def __sub__(self, other: "VectorField") -> "VectorField":
        return self + (-other)

    def scale(self, c: Scalar) -> "VectorField":
        return VectorField(self.algebra, {i: f.scale(c) for i, f in self.coefficients.items()})

    def left_multiply(self, f: FormalElement) -> "VectorField":
        """The field f·ξ = Σ (f f_i) ∂/∂g_i."""
        return VectorField(self.algebra, {i: f * c for i, c in self.coefficients.items()})

    def parities(self) -> Set[int]:
        out: Set[int] = set()
        for i, f in self.coefficients.items():
            out |= {(p + self.algebra.parity(i)) % 2 for p in f.parities()}
        return out

    @property
    def parity(self) -> Optional[int]:
        p = self.parities()
        return p.pop() if len(p) == 1 else None

    @property
    def degree(self) -> Optional[int]:
        degrees: Set[int] = set()
        for i, f in self.coefficients.items():
            g = self.algebra.generators[i].degree
            degrees |= {self.algebra.monomial_degree(m) - g for m in f.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def __call__(self, f: FormalElement) -> FormalElement:
        return self.apply(f)

    def apply(self, f: FormalElement) -> FormalElement:
        """ξ(f) = Σ f_i · ∂f/∂g_i."""
        out = FormalElement.zero(self.algebra)
        for i, c in self.coefficients.items():
            out = out + c * f.derivative(i)
        return out

    def divergence(self) -> FormalElement:
        """∇(ξ) = Σ (-1)^{|f_i||g_i|} ∂f_i/∂g_i, signs taken monomial by monomial."""
        terms: Dict = {}
        for i, f in self.coefficients.items():
            gp = self.algebra.parity(i)
            for m, c in f.terms.items():
                d = self.algebra.left_derivative(m, i)
                if d is None:
                    continue
                k, dm = d
                sign = -1 if gp and self.algebra.monomial_parity(m) else 1
                terms[dm] = terms.get(dm, QQ.zero) + sign * k * c
        return FormalElement(self.algebra, terms)

    def bracket(self, other: "VectorField") -> "VectorField":
        """Graded commutator [ξ₁, ξ₂] = ξ₁ξ₂ - (-1)^{|ξ₁||ξ₂|} ξ₂ξ₁ of homogeneous fields."""
        p, q = self.parity, other.parity
        sign = -1 if (p or 0) * (q or 0) % 2 else 1
        keys = set(self.coefficients) | set(other.coefficients)
        return VectorField(
            self.algebra,
            {i: self.apply(other.coefficient(i)) - other.apply(self.coefficient(i)).scale(sign) for i in keys},
        )

    def truncate(self, order: int) -> "VectorField":
        return VectorField(self.algebra, {i: f.truncate(order) for i, f in self.coefficients.items()})

    def __repr__(self) -> str:
        if not self.coefficients:
            return "0"
        names = self.algebra.names
        return " + ".join(f"({f})∂/∂{names[i]}" for i, f in sorted(self.coefficients.items()))


def apply_vector_field(xi: VectorField, f: FormalElement) -> FormalElement:
    return xi.apply(f)


def divergence(xi: VectorField) -> FormalElement:
    return xi.divergence()


def lie_bracket_fields(xi: VectorField, eta: VectorField) -> VectorField:
    return xi.bracket(eta)


def laurent_algebra(generators: Iterable[Tuple[str, int]]) -> FreeAlgebra:
    return FreeAlgebra.from_degrees(list(generators), laurent=True)


def formal_integral(f: FormalElement) -> Scalar:
    """∫f: the coefficient of (y¹)^{-1}⋯(y^m)^{-1}·x¹⋯x^n.

    Raises:
        ModeMismatch: if the algebra is not in Laurent mode
    """
    if not f.algebra.laurent:
        raise ModeMismatch("The formal integral needs a Laurent algebra")
    top = tuple(1 if g.parity else -1 for g in f.algebra.generators)
    return f.coefficient(top)


def pairing(f: FormalElement, g: FormalElement) -> Scalar:
    """⟨f, g⟩ = ∫ fg."""
    return formal_integral(f * g)


def adjoint_vector_field(xi: VectorField, f: FormalElement) -> FormalElement:
    """ξ*(f) = ξ(f) + ∇(ξ)·f, the adjoint of ξ under the residue pairing."""
    return xi.apply(f) + xi.divergence() * f
