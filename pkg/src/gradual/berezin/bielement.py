from typing import Dict, Iterator, Optional, Set, Tuple

from sympy.polys.domains import QQ

from ..ce import ce_generators
from ..env import EnvelopingAlgebra
from ..exact import Scalar, format_scalar, to_scalar
from ..formal import FormalElement, FreeAlgebra, SuperMonomial
from ..graded import GradingMode
from ..liealg import GradedLieAlgebra
from ..errors import ModeMismatch

# (left monomial in the CE generators, right monomial in S(𝔤))
BiMonomial = Tuple[SuperMonomial, SuperMonomial]


class BiSpace:
    """The bigraded space Ŝ((𝔤[1])*) ⊗ S(𝔤) of one algebra.

    Left generators x^a are dual to e_a (odd for even e_a), right generators are the e_a themselves,
    both in the even-first basis order of the algebra.

    Args:
        alg (GradedLieAlgebra): the algebra
    """

    def __init__(self, alg: GradedLieAlgebra) -> None:
        self.alg = alg
        self.env = EnvelopingAlgebra(alg)
        self.left: FreeAlgebra = ce_generators(alg)
        self.right: FreeAlgebra = self.env.sym
        self.n = alg.n_even
        self.m = alg.n_odd

    @property
    def berezin_monomial(self) -> BiMonomial:
        """B = x¹⋯xⁿ ⊗ ε₁⋯ε_m."""
        parities = self.alg.basis.parities
        return tuple(1 - p for p in parities), tuple(parities)

    @property
    def berezinian(self) -> "BiElement":
        return BiElement(self, {self.berezin_monomial: QQ.one})

    def zero(self) -> "BiElement":
        return BiElement(self)

    def monomial(self, left: SuperMonomial, right: SuperMonomial, coeff: Scalar = 1) -> "BiElement":
        self.left.check_monomial(left)
        self.right.check_monomial(right)
        return BiElement(self, {(left, right): coeff})

    def tensor(self, a: FormalElement, x: FormalElement) -> "BiElement":
        """A ⊗ X for elements of the two factors."""
        if a.algebra != self.left or x.algebra != self.right:
            raise ModeMismatch("Factors do not belong to this bigraded space")
        return BiElement(self, {(ma, mx): ca * cx for ma, ca in a.terms.items() for mx, cx in x.terms.items()})

    def multiply(self, u: "BiElement", v: "BiElement") -> "BiElement":
        """(A⊗X)(B⊗Y) = (-1)^{|X||B|} AB ⊗ XY."""
        out: Dict[BiMonomial, Scalar] = {}
        for (a, x), cu in u.terms.items():
            px = self.right.monomial_parity(x)
            for (b, y), cv in v.terms.items():
                left = self.left.multiply_monomials(a, b)
                right = self.right.multiply_monomials(x, y)
                if left is None or right is None:
                    continue
                sign = left[0] * right[0] * (-1 if px * self.left.monomial_parity(b) else 1)
                key = (left[1], right[1])
                out[key] = out.get(key, QQ.zero) + sign * cu * cv
        return BiElement(self, out)

    def ce_degree(self, bm: BiMonomial) -> int:
        return sum(bm[0])

    def s_degree(self, bm: BiMonomial) -> int:
        return sum(bm[1])

    def weight(self, bm: BiMonomial) -> int:
        return sum(bm[0]) - sum(bm[1])

    def total_degree(self, bm: BiMonomial) -> int:
        d = self.left.monomial_degree(bm[0]) + self.right.monomial_degree(bm[1])
        return d % 2 if self.alg.mode == GradingMode.Z2 else d

    def eigenvalue(self, bm: BiMonomial) -> int:
        """m + n + deg P - deg Q, where P collects e's and y's and Q collects x's and ε's."""
        parities = self.alg.basis.parities
        left, right = bm
        deg_p = sum(right[a] if p == 0 else left[a] for a, p in enumerate(parities))
        deg_q = sum(left[a] if p == 0 else right[a] for a, p in enumerate(parities))
        return self.m + self.n + deg_p - deg_q

    def format(self, bm: BiMonomial) -> str:
        return f"{self.left.format_monomial(bm[0])}⊗{self.right.format_monomial(bm[1])}"


class BiElement:
    """Finite ℚ-linear combination of bimonomials A⊗X."""
    __slots__ = ("space", "terms")

    def __init__(self, space: BiSpace, terms: Optional[Dict[BiMonomial, Scalar]] = None) -> None:
        self.space = space
        self.terms: Dict[BiMonomial, Scalar] = {}
        for key, c in (terms or {}).items():
            c = to_scalar(c)
            if c != 0:
                self.terms[key] = c

    def __iter__(self) -> Iterator[Tuple[BiMonomial, Scalar]]:
        return iter(sorted(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiElement):
            return (
                self.space.left == other.space.left
                and self.space.right == other.space.right
                and self.terms == other.terms
            )
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiElement") -> "BiElement":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, QQ.zero) + c
        return BiElement(self.space, out)

    def __neg__(self) -> "BiElement":
        return BiElement(self.space, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiElement") -> "BiElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "BiElement":
        c = to_scalar(c)
        return BiElement(self.space, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "BiElement") -> "BiElement":
        return self.space.multiply(self, other)

    def coefficient(self, bm: BiMonomial) -> Scalar:
        return self.terms.get(bm, QQ.zero)

    def ce_degrees(self) -> Set[int]:
        return {self.space.ce_degree(k) for k in self.terms}

    def s_degrees(self) -> Set[int]:
        return {self.space.s_degree(k) for k in self.terms}

    def weights(self) -> Set[int]:
        return {self.space.weight(k) for k in self.terms}

    def total_degrees(self) -> Set[int]:
        return {self.space.total_degree(k) for k in self.terms}

    @property
    def total_degree(self) -> Optional[int]:
        d = self.total_degrees()
        return d.pop() if len(d) == 1 else None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{format_scalar(c)}*{self.space.format(k)}" for k, c in sorted(self.terms.items()))
