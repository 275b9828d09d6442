from typing import Dict, Iterable, Iterator, Optional, Set, Tuple, Union

from sympy.polys.domains import QQ

from .algebra import FreeAlgebra, SuperMonomial
from ..exact import Scalar, format_scalar, to_scalar
from ..errors import ModeMismatch


class FormalElement:
    """Finite ℚ-linear combination of monomials of a FreeAlgebra.

    Elements of completed algebras are represented by their truncations; callers that
    work modulo high order pass the order explicitly (see `truncate`).

    Args:
        algebra (FreeAlgebra): the ambient algebra
        terms (Dict[SuperMonomial, Scalar], optional): monomial → coefficient. Defaults to None.
    """
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: Optional[Dict[SuperMonomial, Scalar]] = None) -> None:
        self.algebra = algebra
        self.terms: Dict[SuperMonomial, Scalar] = {}
        for m, c in (terms or {}).items():
            c = to_scalar(c)
            if c != 0:
                self.terms[m] = c

    @classmethod
    def zero(cls, algebra: FreeAlgebra) -> "FormalElement":
        return cls(algebra)

    @classmethod
    def one(cls, algebra: FreeAlgebra) -> "FormalElement":
        return cls(algebra, {algebra.one: QQ.one})

    @classmethod
    def generator(cls, algebra: FreeAlgebra, which: Union[int, str]) -> "FormalElement":
        i = algebra.index(which) if isinstance(which, str) else which
        return cls(algebra, {algebra.generator_monomial(i): QQ.one})

    @classmethod
    def monomial(cls, algebra: FreeAlgebra, m: SuperMonomial, coeff: Scalar = 1) -> "FormalElement":
        algebra.check_monomial(m)
        return cls(algebra, {m: coeff})

    @classmethod
    def from_exponents(cls, algebra: FreeAlgebra, items: Iterable[Tuple[Dict[str, int], Scalar]]) -> "FormalElement":
        acc = cls(algebra)
        for exponents, coeff in items:
            acc = acc + cls(algebra, {algebra.monomial(exponents): coeff})
        return acc

    def _check(self, other: "FormalElement") -> None:
        if other.algebra != self.algebra:
            raise ModeMismatch("Elements live in different algebras")

    def __iter__(self) -> Iterator[Tuple[SuperMonomial, Scalar]]:
        return iter(sorted(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FormalElement") -> "FormalElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, QQ.zero) + c
        return FormalElement(self.algebra, out)

    def __neg__(self) -> "FormalElement":
        return FormalElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "FormalElement") -> "FormalElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "FormalElement":
        c = to_scalar(c)
        return FormalElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: Union["FormalElement", int, Scalar]) -> "FormalElement":
        if not isinstance(other, FormalElement):
            return self.scale(other)
        self._check(other)
        out: Dict[SuperMonomial, Scalar] = {}
        mult = self.algebra.multiply_monomials
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                prod = mult(a, b)
                if prod is None:
                    continue
                sign, m = prod
                out[m] = out.get(m, QQ.zero) + sign * ca * cb
        return FormalElement(self.algebra, out)

    def __rmul__(self, other: Union[int, Scalar]) -> "FormalElement":
        return self.scale(other)

    def derivative(self, i: int) -> "FormalElement":
        """Left partial derivative ∂/∂g_i."""
        out: Dict[SuperMonomial, Scalar] = {}
        for m, c in self.terms.items():
            d = self.algebra.left_derivative(m, i)
            if d is not None:
                k, dm = d
                out[dm] = out.get(dm, QQ.zero) + k * c
        return FormalElement(self.algebra, out)

    def right_derivative(self, i: int) -> "FormalElement":
        """Partial derivative ∂/∂g_i acting from the right."""
        out: Dict[SuperMonomial, Scalar] = {}
        for m, c in self.terms.items():
            d = self.algebra.right_derivative(m, i)
            if d is not None:
                k, dm = d
                out[dm] = out.get(dm, QQ.zero) + k * c
        return FormalElement(self.algebra, out)

    def coefficient(self, m: SuperMonomial) -> Scalar:
        return self.terms.get(m, QQ.zero)

    def parities(self) -> Set[int]:
        return {self.algebra.monomial_parity(m) for m in self.terms}

    @property
    def parity(self) -> Optional[int]:
        """Parity of a homogeneous element; None for zero or mixed elements."""
        p = self.parities()
        return p.pop() if len(p) == 1 else None

    @property
    def degree(self) -> Optional[int]:
        d = {self.algebra.monomial_degree(m) for m in self.terms}
        return d.pop() if len(d) == 1 else None

    def orders(self) -> Set[int]:
        return {FreeAlgebra.monomial_order(m) for m in self.terms}

    def truncate(self, order: int) -> "FormalElement":
        """Image in the quotient by monomials of polynomial order > order."""
        return FormalElement(self.algebra, {m: c for m, c in self.terms.items() if sum(m) <= order})

    def component(self, order: int) -> "FormalElement":
        return FormalElement(self.algebra, {m: c for m, c in self.terms.items() if sum(m) == order})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = self.algebra.format_monomial(m)
            coeff = format_scalar(c)
            if mono == "1":
                parts.append(coeff)
            else:
                parts.append(mono if coeff == "1" else f"-{mono}" if coeff == "-1" else f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def multiply(a: FormalElement, b: FormalElement) -> FormalElement:
    """Graded-commutative product with Koszul signs."""
    return a * b
