import logging
from typing import Dict, Optional, Tuple

from sympy.polys.domains import QQ

from .bielement import BiElement, BiMonomial, BiSpace
from ..ce import ce_vector_field
from ..exact import Scalar
from ..formal import FormalElement, SuperMonomial
from ..liealg import GradedLieAlgebra
from ..errors import InternalInconsistency, NotEigenvector

logger = logging.getLogger(__name__)


class BerezinComplex:
    """Hodge data (d, Δ, s, t) on Ŝ((𝔤[1])*) ⊗ S(𝔤) and its perturbation to ∂ = d + x.

    d(A⊗X) = Σ_a (-1)^{|e_a||A|} x^a A ⊗ e_a X
    Δ(A⊗X) = Σ_a (-1)^{|e_a||A|} ∂A/∂x^a ⊗ ∂X/∂e_a
    ∂(A⊗X) = d_CE(A) ⊗ X + Σ_a (-1)^{|e_a||A|} x^a A ⊗ (e_a ⋆ X)

    Star products are memoized per (generator, monomial), so one instance is one computation context.

    Args:
        alg (GradedLieAlgebra): a valid algebra
        space (Optional[BiSpace], optional): reuse an existing space and its enveloping-algebra caches. Defaults to None.
    """

    def __init__(self, alg: GradedLieAlgebra, space: Optional[BiSpace] = None) -> None:
        self.space = space or BiSpace(alg)
        self.alg = alg
        self.d_ce = ce_vector_field(alg, self.space.left)
        self._left_star: Dict[Tuple[int, SuperMonomial], FormalElement] = {}
        self._right_star: Dict[Tuple[SuperMonomial, int], FormalElement] = {}

    @property
    def berezinian(self) -> BiElement:
        return self.space.berezinian

    def _sign(self, a: int, left: SuperMonomial) -> int:
        return -1 if self.alg.parity(a) * self.space.left.monomial_parity(left) else 1

    ################################### Hodge data ###################################

    def d(self, v: BiElement) -> BiElement:
        L, R = self.space.left, self.space.right
        out: Dict[BiMonomial, Scalar] = {}
        for (a_mono, x_mono), c in v.terms.items():
            for a in range(self.alg.dim):
                left = L.multiply_monomials(L.generator_monomial(a), a_mono)
                right = R.multiply_monomials(R.generator_monomial(a), x_mono)
                if left is None or right is None:
                    continue
                key = (left[1], right[1])
                out[key] = out.get(key, QQ.zero) + self._sign(a, a_mono) * left[0] * right[0] * c
        return BiElement(self.space, out)

    def laplacian(self, v: BiElement) -> BiElement:
        """Δ, the contraction pairing each x^a with e_a."""
        L, R = self.space.left, self.space.right
        out: Dict[BiMonomial, Scalar] = {}
        for (a_mono, x_mono), c in v.terms.items():
            for a in range(self.alg.dim):
                left = L.left_derivative(a_mono, a)
                if left is None:
                    continue
                right = R.left_derivative(x_mono, a)
                if right is None:
                    continue
                key = (left[1], right[1])
                out[key] = out.get(key, QQ.zero) + self._sign(a, a_mono) * left[0] * right[0] * c
        return BiElement(self.space, out)

    def s(self, v: BiElement) -> BiElement:
        """Δ divided by the eigenvalue of [Δ, d], and Δ itself on the Berezinian line."""
        out = self.space.zero()
        for bm, c in v.terms.items():
            image = self.laplacian(BiElement(self.space, {bm: c}))
            k = self.space.eigenvalue(bm)
            out = out + (image.scale(QQ(1, k)) if k else image)
        return out

    def t(self, v: BiElement) -> BiElement:
        """Projection onto the line spanned by B."""
        return self.berezinian.scale(v.coefficient(self.space.berezin_monomial))

    def laplacian_commutator(self, bm: BiMonomial) -> int:
        """Check [Δ, d](P⊗Q) = (m + n + deg P - deg Q)·P⊗Q and return the scalar.

        Raises:
            NotEigenvector: if the image is not that multiple of the input
        """
        v = BiElement(self.space, {bm: QQ.one})
        image = self.laplacian(self.d(v)) + self.d(self.laplacian(v))
        k = self.space.eigenvalue(bm)
        if image != v.scale(k):
            logger.error(f"[Δ, d]({self.space.format(bm)}) = {image}")
            raise NotEigenvector(self.space.format(bm), str(k))
        return k

    ################################### Perturbation ###################################

    def left_star(self, a: int, x_mono: SuperMonomial) -> FormalElement:
        """e_a ⋆ X."""
        key = (a, x_mono)
        cached = self._left_star.get(key)
        if cached is None:
            R = self.space.right
            cached = self.space.env.gutt_star(FormalElement.generator(R, a), FormalElement(R, {x_mono: QQ.one}))
            self._left_star[key] = cached
        return cached

    def right_star(self, x_mono: SuperMonomial, a: int) -> FormalElement:
        """X ⋆ e_a."""
        key = (x_mono, a)
        cached = self._right_star.get(key)
        if cached is None:
            R = self.space.right
            cached = self.space.env.gutt_star(FormalElement(R, {x_mono: QQ.one}), FormalElement.generator(R, a))
            self._right_star[key] = cached
        return cached

    def partial(self, v: BiElement) -> BiElement:
        """The perturbed differential ∂."""
        L = self.space.left
        out: Dict[BiMonomial, Scalar] = {}

        def add(key: BiMonomial, c: Scalar) -> None:
            out[key] = out.get(key, QQ.zero) + c

        for (a_mono, x_mono), c in v.terms.items():
            for m2, c2 in self.d_ce.apply(FormalElement(L, {a_mono: QQ.one})).terms.items():
                add((m2, x_mono), c * c2)
            for a in range(self.alg.dim):
                left = L.multiply_monomials(L.generator_monomial(a), a_mono)
                if left is None:
                    continue
                sign = self._sign(a, a_mono) * left[0]
                for y_mono, cy in self.left_star(a, x_mono).terms.items():
                    add((left[1], y_mono), sign * c * cy)
        return BiElement(self.space, out)

    def x(self, v: BiElement) -> BiElement:
        """The perturbation x = ∂ - d."""
        return self.partial(v) - self.d(v)

    def act_right(self, v: BiElement, a: int) -> BiElement:
        """(A⊗X)_* e_a = A ⊗ X⋆e_a."""
        out: Dict[BiMonomial, Scalar] = {}
        for (a_mono, x_mono), c in v.terms.items():
            for y_mono, cy in self.right_star(x_mono, a).terms.items():
                key = (a_mono, y_mono)
                out[key] = out.get(key, QQ.zero) + c * cy
        return BiElement(self.space, out)

    def _series(self, v: BiElement, step, name: str) -> BiElement:
        # every step lowers the S(𝔤)-degree, so the series stops after max S-degree + 1 terms
        bound = max(v.s_degrees(), default=0) + 2
        total, term = v, v
        for k in range(1, bound + 1):
            term = step(term)
            if term.is_zero():
                logger.debug(f"{name} series stopped after {k} steps")
                return total
            total = total + term
        logger.error(f"{name} series did not terminate within {bound} steps")
        raise InternalInconsistency(f"{name} = Σ(...)^k is not locally nilpotent on the input")

    def alpha(self, v: BiElement) -> BiElement:
        """α = Σ_k (-sx)^k."""
        return self._series(v, lambda w: -self.s(self.x(w)), "α")

    def beta(self, v: BiElement) -> BiElement:
        """β = Σ_k (-xs)^k."""
        return self._series(v, lambda w: -self.x(self.s(w)), "β")

    def perturbed_s(self, v: BiElement) -> BiElement:
        """αs, the homotopy of the perturbed Hodge decomposition."""
        return self.alpha(self.s(v))

    def perturbed_t(self, v: BiElement) -> BiElement:
        """αtβ, the projection onto the line of B̃."""
        return self.alpha(self.t(self.beta(v)))


def hodge_d(alg: GradedLieAlgebra, v: BiElement) -> BiElement:
    return BerezinComplex(alg, v.space).d(v)


def hodge_s(alg: GradedLieAlgebra, v: BiElement) -> BiElement:
    return BerezinComplex(alg, v.space).s(v)


def perturbation_x(alg: GradedLieAlgebra, v: BiElement) -> BiElement:
    return BerezinComplex(alg, v.space).x(v)


def hodge_laplacian_commutator(alg: GradedLieAlgebra, bm: BiMonomial, space: Optional[BiSpace] = None) -> int:
    """[Δ, d](P⊗Q) = (m + n + deg P - deg Q)·P⊗Q; returns the scalar, raises NotEigenvector otherwise."""
    return BerezinComplex(alg, space).laplacian_commutator(bm)
