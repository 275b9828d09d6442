import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from sympy.polys.domains import QQ

from .structure import LinftyStructure, divergence_cocycle
from ..ce import SIDES, CohomologyTable, DegreeEntry, McElement
from ..exact import SparseMatrix, homology_dim, kernel_basis, rank
from ..formal import FormalElement, SuperMonomial
from ..graded import GradingMode
from ..errors import InputError

logger = logging.getLogger(__name__)

# (cohomological degree, polynomial order)
SliceKey = Tuple[int, int]


@dataclass(frozen=True)
class OrderEntry:
    i: int
    order: int
    dim: int
    stable: bool

    def to_dict(self) -> dict:
        return {"i": self.i, "order": self.order, "dim": self.dim, "stable": self.stable}


@dataclass
class LinftyCohomologyTable(CohomologyTable):
    """Degree table of the truncated CE complex; `orders` refines it by polynomial order when ℓ is order-homogeneous."""
    orders: List[OrderEntry] = field(default_factory=list)
    twist: Optional[str] = None

    def order_dims(self, i: int) -> Dict[int, int]:
        return {e.order: e.dim for e in self.orders if e.i == i and e.stable}

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["orders"] = [e.to_dict() for e in self.orders]
        out["twist"] = self.twist
        return out


class TruncatedComplex:
    """CE^•(𝔤) = Ŝ((𝔤[1])*) modulo monomials of order > T, with differential ℓ + sign·ξ.

    When every ℓ(g) is homogeneous of order r + 1 and ξ of order r, the differential maps the slice
    (degree d, order k) to (d + 1, k + r); a slice is exact iff k + r ≤ T. Otherwise the complex is
    only graded by degree and every degree is read in the quotient.

    Args:
        s (LinftyStructure): the structure
        twist (Optional[McElement], optional): twisting element ξ. Defaults to None.
        order (Optional[int], optional): truncation T. Defaults to the structure's order.
        side (str, optional): "left" for ℓ + ξ·, "right" for ℓ - ξ·. Defaults to "left".
    """

    def __init__(
        self, s: LinftyStructure, twist: Optional[McElement] = None, order: Optional[int] = None, side: str = "left"
    ) -> None:
        if side not in SIDES:
            raise InputError(f"Twist side must be one of {SIDES}, got '{side}'")
        self.structure = s
        self.algebra = s.algebra
        self.order = s.order if order is None else order
        xi = twist.element if twist is not None else FormalElement.zero(s.algebra)
        self.twist = xi.scale(1 if side == "left" else -1)
        self.steps = self._steps()
        self.step = next(iter(self.steps)) if len(self.steps) == 1 else None
        self.max_step = max(self.steps)
        self._monomials: Dict[int, List[SuperMonomial]] = {}
        self._images: Dict[SuperMonomial, FormalElement] = {}

    def _steps(self) -> Set[int]:
        """Order shifts of the differential: r for every term of order r+1 in ℓ and r for every term of ξ."""
        steps: Set[int] = {o - 1 for f in self.structure.derivation.coefficients.values() for o in f.orders()}
        steps |= self.twist.orders()
        return steps or {1}

    @property
    def homogeneous(self) -> bool:
        return self.step is not None

    def degree(self, m: SuperMonomial) -> int:
        d = self.algebra.monomial_degree(m)
        return d % 2 if self.structure.mode == GradingMode.Z2 else d

    def monomials(self, k: int) -> List[SuperMonomial]:
        if k not in self._monomials:
            self._monomials[k] = self.algebra.monomials_of_order(k) if k >= 0 else []
        return self._monomials[k]

    def _apply(self, m: SuperMonomial) -> FormalElement:
        image = self._images.get(m)
        if image is None:
            f = FormalElement(self.algebra, {m: QQ.one})
            image = (self.structure.derivation.apply(f) + self.twist * f).truncate(self.order)
            self._images[m] = image
        return image

    def _matrix(self, source: List[SuperMonomial], target: List[SuperMonomial]) -> SparseMatrix:
        index = {m: r for r, m in enumerate(target)}
        entries = []
        for col, m in enumerate(source):
            for m2, c in self._apply(m).terms.items():
                if m2 in index:
                    entries.append(((index[m2], col), c))
        return SparseMatrix.from_entries(len(target), len(source), entries)

    def slice_basis(self, d: int, k: int) -> List[SuperMonomial]:
        return [m for m in self.monomials(k) if self.degree(m) == d] if k <= self.order else []

    def slice_homology(self, d: int, k: int) -> int:
        r = self.step or 0
        here = self.slice_basis(d, k)
        d_out = self._matrix(here, self.slice_basis(d + 1, k + r))
        d_in = self._matrix(self.slice_basis(d - 1, k - r), here)
        return homology_dim(d_out, d_in, where=f"degree {d}, order {k}")

    def degrees(self) -> List[int]:
        return sorted({self.degree(m) for k in range(self.order + 1) for m in self.monomials(k)})

    def occurs(self, d: int) -> bool:
        """True iff some monomial of degree d exists at any order.

        Decided through the numerical semigroup of the nonzero even degrees when they share a sign;
        otherwise (and in Z2 mode) every degree counts as occurring.
        """
        if self.structure.mode == GradingMode.Z2:
            return True
        gens = self.algebra.generators
        even = sorted({g.degree for g in gens if not g.parity and g.degree != 0})
        if even and even[0] < 0 < even[-1]:
            return True
        sign = -1 if even and even[-1] < 0 else 1
        steps = [sign * e for e in even]
        odd_sums = {0}
        for g in gens:
            if g.parity:
                odd_sums |= {o + g.degree for o in odd_sums}
        return any(_in_semigroup(sign * (d - o), steps) for o in odd_sums)

    def filtered_basis(self, d: int) -> List[SuperMonomial]:
        return [m for k in range(self.order + 1) for m in self.monomials(k) if self.degree(m) == d]

    def filtered_homology(self, d: int) -> int:
        """Cycles of order ≤ T - r_max, whose images are exact below T, modulo boundaries read below that order."""
        low = self.order - self.max_step
        low_basis = [m for m in self.filtered_basis(d) if sum(m) <= low]
        cycles = kernel_basis(self._matrix(low_basis, self.filtered_basis(d + 1)))
        boundaries = self._matrix(self.filtered_basis(d - 1), low_basis)
        return rank(cycles.hstack(boundaries)) - rank(boundaries)


def _in_semigroup(t: int, steps: List[int]) -> bool:
    """True iff t is a sum of elements of `steps` (positive integers), the empty sum included."""
    if t < 0:
        return False
    reachable = [True] + [False] * t
    for s in range(1, t + 1):
        reachable[s] = any(s >= g and reachable[s - g] for g in steps)
    return reachable[t]


def _order_table(complex_: TruncatedComplex) -> Dict[SliceKey, int]:
    r = complex_.step or 0
    out: Dict[SliceKey, int] = {}
    for k in range(complex_.order + 1):
        for d in sorted({complex_.degree(m) for m in complex_.monomials(k)}):
            if k + r <= complex_.order:
                out[(d, k)] = complex_.slice_homology(d, k)
    return out


def _degree_sums(orders: Dict[SliceKey, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for (d, _), dim in orders.items():
        out[d] = out.get(d, 0) + dim
    return out


def truncated_cohomology(
    s: LinftyStructure,
    twist: Optional[McElement] = None,
    degree_window: Optional[Tuple[int, int]] = None,
    order: Optional[int] = None,
    side: str = "left",
) -> LinftyCohomologyTable:
    """Cohomology dimensions of the truncated (and possibly twisted) CE complex of an L∞ structure.

    Order-homogeneous structures report, per degree, the sum over exact order slices; a degree is stable
    when that sum is unchanged at T+1 and at least one of its slices is exact. Other structures compare
    the whole quotient at T and T+1. A degree with no monomial at any order is a stable zero.

    Args:
        s (LinftyStructure): the structure
        twist (Optional[McElement], optional): twisting element. Defaults to None.
        degree_window (Optional[Tuple[int, int]], optional): inclusive degree range. Defaults to every degree present below T.
        order (Optional[int], optional): truncation T. Defaults to the structure's order.
        side (str, optional): twist side, see TruncatedComplex. Defaults to "left".

    Returns:
        LinftyCohomologyTable: per-degree (and per-order) dimensions with stability flags
    """
    complex_ = TruncatedComplex(s, twist, order, side)
    wider = TruncatedComplex(s, twist, complex_.order + 1, side)
    degrees = complex_.degrees()
    if degree_window is not None:
        lo, hi = degree_window
        degrees = list(range(lo, hi + 1))
    label = None if twist is None else f"{side}:{twist.element}"
    if complex_.homogeneous:
        at_t, at_next = _order_table(complex_), _order_table(wider)
        sums, sums_next = _degree_sums(at_t), _degree_sums(at_next)
        exact_degrees = {d for d, _ in at_t}
        entries = [
            DegreeEntry(
                d,
                sums.get(d, 0),
                not complex_.occurs(d) or (d in exact_degrees and sums.get(d, 0) == sums_next.get(d, 0)),
            )
            for d in degrees
        ]
        orders = [
            OrderEntry(d, k, dim, at_next.get((d, k)) == dim) for (d, k), dim in sorted(at_t.items()) if d in degrees
        ]
        unstable = [e.i for e in entries if not e.stable]
        if unstable:
            logger.warning(f"Degrees {unstable} of {s.name or 'L∞ structure'} are not stable at order {complex_.order}")
        return LinftyCohomologyTable(entries, complex_.order, "order", orders, label)
    entries = []
    for d in degrees:
        dim = complex_.filtered_homology(d)
        entries.append(DegreeEntry(d, dim, dim == wider.filtered_homology(d)))
    logger.debug(f"{s.name or 'L∞ structure'} is not order-homogeneous; using the filtered quotient")
    return LinftyCohomologyTable(entries, complex_.order, "filtered", [], label)


@dataclass(frozen=True)
class DualityPair:
    i: int
    dim: int
    dual_i: int
    dual_dim: Optional[int]

    @property
    def match(self) -> bool:
        return self.dual_dim is not None and self.dim == self.dual_dim

    def to_dict(self) -> dict:
        return {"i": self.i, "dim": self.dim, "dual_i": self.dual_i, "dual_dim": self.dual_dim, "match": self.match}


@dataclass
class ConjectureEvidence:
    """dim H^d(CE^•) against dim H^{|𝔤|-d}(CE^•^{[∇ℓ]}) over the stable degrees.

    This is dimension-level evidence; `symmetric` is reported, never turned into a verdict.
    """
    shift: int
    divergence: str
    untwisted: LinftyCohomologyTable
    twisted: LinftyCohomologyTable
    pairs: List[DualityPair] = field(default_factory=list)

    @property
    def unimodular(self) -> bool:
        return self.divergence == "0"

    @property
    def symmetric(self) -> bool:
        return bool(self.pairs) and all(p.match for p in self.pairs)

    def to_dict(self) -> dict:
        return {
            "shift": self.shift,
            "divergence": self.divergence,
            "unimodular": self.unimodular,
            "untwisted": self.untwisted.to_dict(),
            "twisted": self.twisted.to_dict(),
            "pairs": [p.to_dict() for p in self.pairs],
            "symmetric": self.symmetric,
        }


def conjecture_evidence(s: LinftyStructure, order: Optional[int] = None) -> ConjectureEvidence:
    """Pair the untwisted cohomology with the ∇(ℓ)-twisted one shifted by |𝔤|.

    The twist is ∇(ℓ) itself. For ℓ = xⁿy∂/∂x that is n·xⁿ⁻¹y rather than xⁿ⁻¹y; the left twist by c·xⁿ⁻¹y
    sends xᵏ to (k + c)·xⁿ⁻¹⁺ᵏy, so every c outside {0, -1, -2, ...} gives the same dimensions.
    """
    nabla = divergence_cocycle(s)
    shift = s.total_dimension
    untwisted = truncated_cohomology(s, order=order)
    twisted = truncated_cohomology(s, twist=nabla, order=order)
    dual_stable = {e.i: e.dim for e in twisted.entries if e.stable}
    pairs = [
        DualityPair(e.i, e.dim, shift - e.i, dual_stable.get(shift - e.i, 0 if _beyond(twisted, shift - e.i) else None))
        for e in untwisted.entries
        if e.stable
    ]
    return ConjectureEvidence(shift, str(nabla.element), untwisted, twisted, pairs)


def _beyond(table: LinftyCohomologyTable, d: int) -> bool:
    """A degree with no monomial at all below the truncation has zero cohomology."""
    return d not in table.dims
