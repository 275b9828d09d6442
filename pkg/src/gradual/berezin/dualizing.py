import logging
import random
from dataclasses import dataclass, field
from typing import List, Optional

from sympy.polys.domains import QQ

from .bielement import BiElement, BiMonomial, BiSpace
from .hodge import BerezinComplex
from ..exact import Scalar, format_scalar
from ..formal import FormalElement
from ..liealg import GradedLieAlgebra, supertrace_character
from ..errors import NotClosed, TransferInconsistent

logger = logging.getLogger(__name__)

DEFAULT_HODGE_SAMPLES = 200


@dataclass(frozen=True)
class DeformedBerezinian:
    """B̃ = Σ_k (-sx)^k(B), together with its total degree and the expected |𝔤|."""
    element: BiElement
    degree: Optional[int]
    expected_degree: int

    @property
    def degree_ok(self) -> bool:
        return self.degree == self.expected_degree


def deformed_berezinian(alg: GradedLieAlgebra, complex_: Optional[BerezinComplex] = None) -> DeformedBerezinian:
    """Deform B along the perturbation and check that the result is ∂-closed.

    Args:
        alg (GradedLieAlgebra): a valid algebra
        complex_ (Optional[BerezinComplex], optional): reuse an existing complex and its caches. Defaults to None.

    Raises:
        NotClosed: if ∂B̃ ≠ 0

    Returns:
        DeformedBerezinian: B̃ with degree bookkeeping
    """
    complex_ = complex_ or BerezinComplex(alg)
    b = complex_.berezinian
    b_tilde = complex_.alpha(b)
    residue = complex_.partial(b_tilde)
    if not residue.is_zero():
        logger.error(f"∂B̃ ≠ 0 for {alg.name or 'algebra'}")
        raise NotClosed(str(residue))
    logger.debug(f"B̃ for {alg.name or 'algebra'} has {len(b_tilde.terms)} terms")
    return DeformedBerezinian(b_tilde, b_tilde.total_degree, alg.total_dimension)


@dataclass(frozen=True)
class DualizingCharacter:
    """r(e_q) for every basis element; as a cochain χ(𝔤) = Σ r(e_q) x^q."""
    names: List[str]
    values: List[Scalar]

    def cochain(self, space: BiSpace) -> FormalElement:
        L = space.left
        return FormalElement(L, {L.generator_monomial(q): r for q, r in enumerate(self.values)})


def dualizing_character(alg: GradedLieAlgebra, complex_: Optional[BerezinComplex] = None) -> DualizingCharacter:
    """The scalar by which 𝔤 acts on the one-dimensional transferred module.

    For each basis element u, w = B̃_* u and r(u) is the coefficient of B in β(w). The transfer is
    then cross-checked: αtβ(w) = r(u)·B̃ and w - r(u)·B̃ = ∂(αs(w)).

    Raises:
        TransferInconsistent: if either cross-check fails

    Returns:
        DualizingCharacter: the character values in basis order
    """
    complex_ = complex_ or BerezinComplex(alg)
    b_tilde = deformed_berezinian(alg, complex_).element
    b = complex_.space.berezin_monomial
    values = []
    for u, name in enumerate(alg.basis.names):
        w = complex_.act_right(b_tilde, u)
        r = complex_.beta(w).coefficient(b)
        if complex_.perturbed_t(w) != b_tilde.scale(r):
            raise TransferInconsistent(name)
        if w - b_tilde.scale(r) != complex_.partial(complex_.perturbed_s(w)):
            logger.error(f"B̃ ⋆ {name} - r·B̃ is not ∂-exact")
            raise TransferInconsistent(name)
        values.append(r)
    return DualizingCharacter(list(alg.basis.names), values)


@dataclass(frozen=True)
class CharacterEntry:
    gen: str
    r: Scalar
    str_ad: Scalar

    @property
    def match(self) -> bool:
        return self.r == self.str_ad

    def to_dict(self) -> dict:
        return {"gen": self.gen, "r": format_scalar(self.r), "str_ad": format_scalar(self.str_ad), "match": self.match}


@dataclass
class MainTheoremReport:
    """Dualizing character against the supertrace character, plus the degree of B̃."""
    entries: List[CharacterEntry] = field(default_factory=list)
    berezinian_degree: Optional[int] = None
    expected_degree: int = 0
    closed: bool = True

    @property
    def match(self) -> bool:
        return self.closed and self.berezinian_degree == self.expected_degree and all(e.match for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "character": [e.to_dict() for e in self.entries],
            "berezinian_degree": self.berezinian_degree,
            "expected_degree": self.expected_degree,
            "closed": self.closed,
            "match": self.match,
        }


def verify_main_theorem(alg: GradedLieAlgebra) -> MainTheoremReport:
    """Compare r(u) with str(ad_u) for every basis element and check |B̃| = |𝔤|."""
    complex_ = BerezinComplex(alg)
    b_tilde = deformed_berezinian(alg, complex_)
    character = dualizing_character(alg, complex_)
    expected = supertrace_character(alg)
    report = MainTheoremReport(
        [CharacterEntry(n, r, s) for n, r, s in zip(character.names, character.values, expected)],
        b_tilde.degree,
        b_tilde.expected_degree,
        True,
    )
    if not report.match:
        logger.warning(f"Dualizing character of {alg.name or 'algebra'} differs from the supertrace: {report.to_dict()}")
    return report


################################### Hodge axioms ###################################

def random_bimonomial(space: BiSpace, rng: random.Random, max_ce_degree: int, max_s_degree: int) -> BiMonomial:
    """Random bimonomial with CE-degree ≤ max_ce_degree and S(𝔤)-degree ≤ max_s_degree."""

    def draw(algebra, bound: int):
        exponents = [0] * len(algebra)
        for _ in range(rng.randint(0, bound)):
            i = rng.randrange(len(algebra))
            if algebra.parity(i) and exponents[i]:
                continue
            exponents[i] += 1
        return tuple(exponents)

    return draw(space.left, max_ce_degree), draw(space.right, max_s_degree)


def sample_bimonomials(complex_: BerezinComplex, samples: int, seed: int = 0) -> List[BiMonomial]:
    rng = random.Random(seed)
    space = complex_.space
    out = [space.berezin_monomial]
    while len(out) < samples:
        out.append(random_bimonomial(space, rng, complex_.alg.dim, space.m + 2))
    return out


@dataclass
class HodgeReport:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"checked": self.checked, "failures": list(self.failures), "valid": self.valid}


def _check(report: HodgeReport, name: str, lhs: BiElement, rhs: BiElement, where: str) -> None:
    if lhs != rhs:
        report.failures.append(f"{name} at {where}")


def hodge_check(alg: GradedLieAlgebra, samples: int = DEFAULT_HODGE_SAMPLES, seed: int = 0) -> HodgeReport:
    """Check ds+sd = id-t, dt = td = 0, t² = t, s² = st = ts = 0, d² = 0 and the [Δ, d] eigenvalues on samples."""
    complex_ = BerezinComplex(alg)
    d, s, t = complex_.d, complex_.s, complex_.t
    report = HodgeReport()
    zero = complex_.space.zero()
    for bm in sample_bimonomials(complex_, samples, seed):
        v = BiElement(complex_.space, {bm: QQ.one})
        where = complex_.space.format(bm)
        _check(report, "ds+sd", d(s(v)) + s(d(v)), v - t(v), where)
        _check(report, "dt", d(t(v)), zero, where)
        _check(report, "td", t(d(v)), zero, where)
        _check(report, "t²", t(t(v)), t(v), where)
        _check(report, "s²", s(s(v)), zero, where)
        _check(report, "st", s(t(v)), zero, where)
        _check(report, "ts", t(s(v)), zero, where)
        _check(report, "d²", d(d(v)), zero, where)
        if complex_.laplacian(complex_.d(v)) + complex_.d(complex_.laplacian(v)) != v.scale(complex_.space.eigenvalue(bm)):
            report.failures.append(f"[Δ,d] eigenvalue at {where}")
        if d(v).ce_degrees() - {sum(bm[0]) + 1} or s(v).ce_degrees() - {sum(bm[0]) - 1}:
            report.failures.append(f"CE-degree bookkeeping at {where}")
        report.checked += 1
    return report


def perturbed_hodge_check(alg: GradedLieAlgebra, samples: int = DEFAULT_HODGE_SAMPLES, seed: int = 0) -> HodgeReport:
    """Check the perturbed decomposition (∂, αs, αtβ) and the deformation-retract identities on samples."""
    complex_ = BerezinComplex(alg)
    D, S, T = complex_.partial, complex_.perturbed_s, complex_.perturbed_t
    s, x = complex_.s, complex_.x
    report = HodgeReport()
    zero = complex_.space.zero()
    b_tilde = deformed_berezinian(alg, complex_).element
    if complex_.beta(b_tilde).coefficient(complex_.space.berezin_monomial) != 1:
        report.failures.append("p'i' ≠ id on the Berezinian line")
    for bm in sample_bimonomials(complex_, samples, seed):
        v = BiElement(complex_.space, {bm: QQ.one})
        where = complex_.space.format(bm)
        Sv, Tv = S(v), T(v)
        _check(report, "∂²", D(D(v)), zero, where)
        _check(report, "∂s'+s'∂", D(Sv) + S(D(v)), v - Tv, where)
        _check(report, "t'²", T(Tv), Tv, where)
        _check(report, "s'²", S(Sv), zero, where)
        _check(report, "s't'", S(Tv), zero, where)
        _check(report, "t's'", T(Sv), zero, where)
        _check(report, "∂t'", D(Tv), T(D(v)), where)
        alpha_v, beta_v = complex_.alpha(v), complex_.beta(v)
        _check(report, "(id+sx)α", alpha_v + s(x(alpha_v)), v, where)
        _check(report, "(id+xs)β", beta_v + x(s(beta_v)), v, where)
        if x(v).ce_degrees() - {sum(bm[0]) + 1}:
            report.failures.append(f"x changes CE-degree by more than 1 at {where}")
        if any(w <= complex_.space.weight(bm) for w in x(v).weights()):
            report.failures.append(f"x does not raise the weight at {where}")
        report.checked += 1
    return report
