import logging
from itertools import product
from math import comb as binomial, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.utilities.iterables import multiset_permutations

from ..exact import Scalar, format_scalar, to_scalar
from ..formal import FormalElement, FreeAlgebra, Generator
from ..liealg import GradedLieAlgebra

logger = logging.getLogger(__name__)

# PBW monomial: exponents of e_1 … e_N in the fixed (even-first) basis order,
# read as the ordered word e_1^{k_1} ⋯ e_N^{k_N}; odd exponents are 0 or 1.
PbwMonomial = Tuple[int, ...]
Terms = Dict[PbwMonomial, Scalar]


def _add_into(acc: Terms, terms: Terms, c: Scalar) -> None:
    for m, v in terms.items():
        acc[m] = acc.get(m, QQ.zero) + c * v


def _clean(terms: Terms) -> Terms:
    return {m: v for m, v in terms.items() if v != 0}


def sym_algebra(alg: GradedLieAlgebra) -> FreeAlgebra:
    """S(𝔤) as a free graded-commutative algebra on the basis of 𝔤."""
    return FreeAlgebra(tuple(Generator(n, d) for n, d in zip(alg.basis.names, alg.basis.degrees)))


class UElement:
    """Element of U(𝔤) in PBW normal form."""
    __slots__ = ("env", "terms")

    def __init__(self, env: "EnvelopingAlgebra", terms: Optional[Terms] = None) -> None:
        self.env = env
        self.terms = _clean({m: to_scalar(v) for m, v in (terms or {}).items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.env is other.env and self.terms == other.terms

    def __add__(self, other: "UElement") -> "UElement":
        acc = dict(self.terms)
        _add_into(acc, other.terms, QQ.one)
        return UElement(self.env, acc)

    def __neg__(self) -> "UElement":
        return self.scale(-1)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "UElement":
        c = to_scalar(c)
        return UElement(self.env, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "UElement") -> "UElement":
        return self.env.multiply(self, other)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def filtration_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, m: PbwMonomial) -> Scalar:
        return self.terms.get(m, QQ.zero)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        fmt = self.env.sym.format_monomial
        return " + ".join(f"{format_scalar(c)}*{fmt(m)}" for m, c in sorted(self.terms.items()))


class EnvelopingAlgebra:
    """U(𝔤) with PBW normal form, the symmetrization Φ: S(𝔤) → U(𝔤), its inverse and the Gutt product.

    All memo caches live on the instance, so one instance is one computation context.

    Args:
        alg (GradedLieAlgebra): a validated algebra
    """

    def __init__(self, alg: GradedLieAlgebra) -> None:
        self.alg = alg
        self.sym = sym_algebra(alg)
        self.parities = alg.basis.parities
        self._times: Dict[Tuple[PbwMonomial, int], Terms] = {}
        self._phi: Dict[PbwMonomial, Terms] = {}
        self._phi_inv: Dict[PbwMonomial, Dict[PbwMonomial, Scalar]] = {}

    ################################### U(𝔤) ###################################

    @property
    def one(self) -> UElement:
        return UElement(self, {self.sym.one: QQ.one})

    def generator(self, i: int) -> UElement:
        return UElement(self, {self.sym.generator_monomial(i): QQ.one})

    @staticmethod
    def word(m: PbwMonomial) -> List[int]:
        return [i for i, k in enumerate(m) for _ in range(k)]

    def _bump(self, m: PbwMonomial, i: int, delta: int) -> PbwMonomial:
        return m[:i] + (m[i] + delta,) + m[i + 1:]

    def _times_generator(self, m: PbwMonomial, g: int) -> Terms:
        """Normal form of e^m · e_g."""
        key = (m, g)
        cached = self._times.get(key)
        if cached is not None:
            return cached
        letters = [i for i, k in enumerate(m) if k]
        if not letters or letters[-1] < g:
            out: Terms = {self._bump(m, g, 1): QQ.one}
        else:
            h = letters[-1]
            rest = self._bump(m, h, -1)
            out = {}
            if h == g and not self.parities[g]:
                out = {self._bump(m, g, 1): QQ.one}
            elif h == g:
                # ε ε = ½[ε, ε]
                for k, c in self.alg.bracket_basis(g, g).items():
                    _add_into(out, self._times_generator(rest, k), c / 2)
            else:
                # e_h e_g = (-1)^{|h||g|} e_g e_h + [e_h, e_g]
                sign = -1 if self.parities[h] * self.parities[g] else 1
                swapped = self._times_generator(rest, g)
                _add_into(out, self._times_terms(swapped, h), QQ(sign))
                for k, c in self.alg.bracket_basis(h, g).items():
                    _add_into(out, self._times_generator(rest, k), c)
            out = _clean(out)
        self._times[key] = out
        return out

    def _times_terms(self, terms: Terms, g: int) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            _add_into(out, self._times_generator(m, g), c)
        return _clean(out)

    def normal_form(self, word: Sequence[Union[int, str]], coeff: Scalar = 1) -> UElement:
        """PBW normal form of coeff · e_{w_1} ⋯ e_{w_k}."""
        terms: Terms = {self.sym.one: to_scalar(coeff)}
        for letter in word:
            g = self.alg.basis.index(letter) if isinstance(letter, str) else letter
            terms = self._times_terms(terms, g)
        return UElement(self, terms)

    def multiply(self, u: UElement, v: UElement) -> UElement:
        out: Terms = {}
        for b, cb in v.terms.items():
            partial = dict(u.terms)
            for g in self.word(b):
                partial = self._times_terms(partial, g)
            _add_into(out, partial, cb)
        return UElement(self, out)

    ################################### Φ and Φ⁻¹ ###################################

    def _koszul_of_word(self, w: Sequence[int]) -> int:
        odd = [x for x in w if self.parities[x]]
        swaps = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
        return -1 if swaps % 2 else 1

    def _phi_monomial(self, m: PbwMonomial) -> Terms:
        cached = self._phi.get(m)
        if cached is not None:
            return cached
        letters = self.word(m)
        weight = QQ(1, factorial(len(letters)))
        for k in m:
            weight *= factorial(k)
        out: Terms = {}
        for w in multiset_permutations(letters):
            terms: Terms = {self.sym.one: QQ.one}
            for g in w:
                terms = self._times_terms(terms, g)
            _add_into(out, terms, weight * self._koszul_of_word(w))
        out = _clean(out)
        self._phi[m] = out
        return out

    def pbw_symmetrize(self, x: FormalElement) -> UElement:
        """Φ(u₁⋯u_k) = (1/k!) Σ_σ ε(σ) u_σ(1)⋯u_σ(k)."""
        out: Terms = {}
        for m, c in x.terms.items():
            _add_into(out, self._phi_monomial(m), c)
        return UElement(self, out)

    def _phi_inverse_monomial(self, m: PbwMonomial) -> Dict[PbwMonomial, Scalar]:
        cached = self._phi_inv.get(m)
        if cached is not None:
            return cached
        # Φ(y^m) = e^m + lower PBW degree, so Φ⁻¹(e^m) = y^m - Φ⁻¹(Φ(y^m) - e^m)
        out: Dict[PbwMonomial, Scalar] = {m: QQ.one}
        for lower, c in self._phi_monomial(m).items():
            if lower == m:
                continue
            _add_into(out, self._phi_inverse_monomial(lower), -c)
        out = _clean(out)
        self._phi_inv[m] = out
        return out

    def pbw_desymmetrize(self, u: UElement) -> FormalElement:
        """Φ⁻¹, by descending induction on PBW degree."""
        out: Dict[PbwMonomial, Scalar] = {}
        for m, c in u.terms.items():
            _add_into(out, self._phi_inverse_monomial(m), c)
        return FormalElement(self.sym, out)

    def gutt_star(self, x: FormalElement, y: FormalElement) -> FormalElement:
        """X ⋆ Y = Φ⁻¹(Φ(X)Φ(Y))."""
        return self.pbw_desymmetrize(self.multiply(self.pbw_symmetrize(x), self.pbw_symmetrize(y)))

    def lie_poisson_bracket(self, x: FormalElement, y: FormalElement) -> FormalElement:
        """{X, Y} = Σ_{a,b} (X ∂⃖/∂u_a) [u_a, u_b] (∂/∂u_b Y), the biderivation extension of the bracket."""
        out = FormalElement.zero(self.sym)
        for a in range(self.alg.dim):
            left = x.right_derivative(a)
            if left.is_zero():
                continue
            for b in range(self.alg.dim):
                bracket = self.alg.bracket_basis(a, b)
                if not bracket:
                    continue
                right = y.derivative(b)
                if right.is_zero():
                    continue
                mid = FormalElement(self.sym, {self.sym.generator_monomial(k): c for k, c in bracket.items()})
                out = out + left * mid * right
        return out

    def antipode(self, u: UElement) -> UElement:
        """S extended from S(e) = -e as an anti-automorphism: S(ab) = (-1)^{|a||b|} S(b)S(a)."""
        out: Terms = {}
        for m, c in u.terms.items():
            w = self.word(m)
            odd = sum(1 for g in w if self.parities[g])
            sign = (-1) ** len(w) * (-1 if (odd * (odd - 1) // 2) % 2 else 1)
            _add_into(out, self.normal_form(list(reversed(w))).terms, c * sign)
        return UElement(self, out)

    def counit(self, u: UElement) -> Scalar:
        return u.coefficient(self.sym.one)

    def coproduct(self, u: UElement) -> Dict[Tuple[PbwMonomial, PbwMonomial], Scalar]:
        """Δ extended multiplicatively from Δ(e) = e⊗1 + 1⊗e, as a map PBW ⊗ PBW → coefficient.

        Sub-words of an ordered word stay ordered, so both factors are already in normal form.
        """
        out: Dict[Tuple[PbwMonomial, PbwMonomial], Scalar] = {}
        for m, c in u.terms.items():
            for left in product(*(range(k + 1) for k in m)):
                right = tuple(k - a for k, a in zip(m, left))
                coeff = c
                for k, a in zip(m, left):
                    coeff *= binomial(k, a)
                # odd letters sent right move past later odd letters sent left
                crossings = sum(
                    1
                    for g in range(len(m))
                    if self.parities[g] and right[g]
                    for h in range(g + 1, len(m))
                    if self.parities[h] and left[h]
                )
                key = (tuple(left), right)
                out[key] = out.get(key, QQ.zero) + (-coeff if crossings % 2 else coeff)
        return {k: v for k, v in out.items() if v != 0}

    def cache_sizes(self) -> Dict[str, int]:
        return {"times": len(self._times), "phi": len(self._phi), "phi_inverse": len(self._phi_inv)}


def normal_form(alg_or_env: Union[GradedLieAlgebra, EnvelopingAlgebra], word: Iterable, coeff: Scalar = 1) -> UElement:
    env = alg_or_env if isinstance(alg_or_env, EnvelopingAlgebra) else EnvelopingAlgebra(alg_or_env)
    return env.normal_form(list(word), coeff)
