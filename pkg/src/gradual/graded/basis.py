from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from ..exact import Scalar, SparseMatrix, to_scalar
from ..errors import InputError, LengthMismatch, ShapeMismatch


class GradingMode(str, Enum):
    Z = "Z"
    Z2 = "Z2"


@dataclass(frozen=True)
class GradedBasis:
    """A homogeneous basis of a graded vector space.

    Args:
        names (Tuple[str, ...]): unique basis labels
        degrees (Tuple[int, ...]): integer degrees (0/1 in Z2 mode)
        mode (GradingMode, optional): Z or Z2. Defaults to GradingMode.Z.
    """
    names: Tuple[str, ...]
    degrees: Tuple[int, ...]
    mode: GradingMode = GradingMode.Z

    def __post_init__(self) -> None:
        if len(self.names) != len(self.degrees):
            raise LengthMismatch(len(self.names), len(self.degrees))
        if len(set(self.names)) != len(self.names):
            raise InputError(f"Basis names are not unique: {list(self.names)}")
        if self.mode == GradingMode.Z2 and any(d not in (0, 1) for d in self.degrees):
            raise InputError(f"Z2 degrees must be 0 or 1, got {list(self.degrees)}")

    def __len__(self) -> int:
        return len(self.names)

    def parity(self, i: int) -> int:
        return self.degrees[i] % 2

    @property
    def parities(self) -> Tuple[int, ...]:
        return tuple(d % 2 for d in self.degrees)

    @property
    def even_indices(self) -> List[int]:
        return [i for i, d in enumerate(self.degrees) if d % 2 == 0]

    @property
    def odd_indices(self) -> List[int]:
        return [i for i, d in enumerate(self.degrees) if d % 2 == 1]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"Unknown basis element '{name}'; known: {list(self.names)}") from None

    def normalized(self) -> Tuple["GradedBasis", List[int]]:
        """Reorder so even elements precede odd ones, keeping the relative order inside each part.

        Returns:
            Tuple[GradedBasis, List[int]]: the new basis and `order`, with new position i holding old index order[i]
        """
        order = self.even_indices + self.odd_indices
        return (
            GradedBasis(tuple(self.names[i] for i in order), tuple(self.degrees[i] for i in order), self.mode),
            order,
        )

    def shift(self, k: int) -> "GradedBasis":
        """V[k]: an element of degree d in V sits in degree d - k."""
        return GradedBasis(self.names, tuple(self._wrap(d - k) for d in self.degrees), self.mode)

    def dual(self, suffix: str = "*") -> "GradedBasis":
        return GradedBasis(tuple(n + suffix for n in self.names), tuple(self._wrap(-d) for d in self.degrees), self.mode)

    def _wrap(self, d: int) -> int:
        return d % 2 if self.mode == GradingMode.Z2 else d


def koszul_sign(perm: Sequence[int], parities: Sequence[int]) -> int:
    """Sign ε(σ; ξ₁, …, ξₙ) of rearranging ξ₁…ξₙ into ξ_{σ(1)}…ξ_{σ(n)}.

    Each pair of odd elements whose relative order is reversed contributes a factor -1.

    Args:
        perm (Sequence[int]): perm[i] is the index of the element placed at position i
        parities (Sequence[int]): parity of each original element

    Raises:
        LengthMismatch: if the lengths differ

    Returns:
        int: +1 or -1
    """
    if len(perm) != len(parities):
        raise LengthMismatch(len(parities), len(perm))
    odd = [p for p in perm if parities[p] % 2]
    inversions = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
    return -1 if inversions % 2 else 1


def total_dimension_invariant(b: GradedBasis) -> int:
    """|V| = n - Σ|e_i| + Σ|ε_j| over even e_i and odd ε_j; in Z2 mode the parity n + m mod 2."""
    if b.mode == GradingMode.Z2:
        return len(b) % 2
    evens, odds = b.even_indices, b.odd_indices
    return len(evens) - sum(b.degrees[i] for i in evens) + sum(b.degrees[j] for j in odds)


def supertrace(matrix: Union[SparseMatrix, Sequence[Sequence]], parities: Sequence[int]) -> Scalar:
    """str(f): sum of diagonal entries at even indices minus those at odd indices."""
    if not isinstance(matrix, SparseMatrix):
        matrix = SparseMatrix.from_rows(matrix)
    if matrix.rows != matrix.cols or matrix.rows != len(parities):
        raise ShapeMismatch((len(parities), len(parities)), matrix.shape)
    total = QQ.zero
    for i, p in enumerate(parities):
        total += -matrix[(i, i)] if p % 2 else matrix[(i, i)]
    return total
