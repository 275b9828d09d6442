import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .scalar import Scalar, to_scalar
from ..errors import CompositionNonzero, IndexOutOfRange, ShapeMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse matrix over QQ that never stores a zero entry.

    Args:
        rows (int): number of rows
        cols (int): number of columns
        entries (Dict[Tuple[int, int], Scalar]): nonzero entries keyed by (row, col)
    """
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Scalar] = field(default_factory=dict)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Tuple[Tuple[int, int], Scalar]]) -> "SparseMatrix":
        """Build a matrix, accumulating repeated positions and dropping zeros."""
        acc: Dict[Tuple[int, int], Scalar] = {}
        for (i, j), value in entries:
            if not 0 <= i < rows:
                raise IndexOutOfRange(i, rows)
            if not 0 <= j < cols:
                raise IndexOutOfRange(j, cols)
            acc[(i, j)] = acc.get((i, j), QQ.zero) + to_scalar(value)
        return cls(rows, cols, {k: v for k, v in acc.items() if v != 0})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ShapeMismatch(ncols, len(row))
        return cls.from_entries(
            len(rows), ncols, (((i, j), v) for i, row in enumerate(rows) for j, v in enumerate(row))
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): QQ.one for i in range(n)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: Tuple[int, int]) -> Scalar:
        return self.entries.get(key, QQ.zero)

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def scale(self, c: Scalar) -> "SparseMatrix":
        c = to_scalar(c)
        if c == 0:
            return SparseMatrix.zeros(self.rows, self.cols)
        return SparseMatrix(self.rows, self.cols, {k: c * v for k, v in self.entries.items()})

    def add(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(self.shape, other.shape)
        return SparseMatrix.from_entries(self.rows, self.cols, list(self.entries.items()) + list(other.entries.items()))

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch((self.cols, "*"), other.shape)
        by_row: Dict[int, List[Tuple[int, Scalar]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: List[Tuple[Tuple[int, int], Scalar]] = []
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out.append(((i, j), a * b))
        return SparseMatrix.from_entries(self.rows, other.cols, out)

    def to_domain_matrix(self) -> DomainMatrix:
        nested: Dict[int, Dict[int, Scalar]] = {}
        for (i, j), v in self.entries.items():
            nested.setdefault(i, {})[j] = v
        return DomainMatrix(nested, (self.rows, self.cols), QQ)

    def to_rows(self) -> List[List[Scalar]]:
        return [[self[(i, j)] for j in range(self.cols)] for i in range(self.rows)]

    def hstack(self, other: "SparseMatrix") -> "SparseMatrix":
        """Columns of self followed by the columns of other."""
        if self.rows != other.rows:
            raise ShapeMismatch((self.rows, "*"), other.shape)
        entries = dict(self.entries)
        entries.update({(i, j + self.cols): v for (i, j), v in other.entries.items()})
        return SparseMatrix(self.rows, self.cols + other.cols, entries)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SparseMatrix":
        """Return the matrix whose entry (row_perm[i], col_perm[j]) is this matrix's (i, j)."""
        return SparseMatrix(
            self.rows, self.cols, {(row_perm[i], col_perm[j]): v for (i, j), v in self.entries.items()}
        )


def rank(m: SparseMatrix) -> int:
    """Exact rank over QQ.

    Denominators are cleared first so the elimination runs fraction-free over ZZ.

    Args:
        m (SparseMatrix): the matrix

    Returns:
        int: rank of m
    """
    if m.is_zero():
        return 0
    _, numerators = m.to_domain_matrix().clear_denoms(convert=True)
    _, _, pivots = numerators.rref_den(method="FF")
    return len(pivots)


def kernel_dim(m: SparseMatrix) -> int:
    return m.cols - rank(m)


def kernel_basis(m: SparseMatrix) -> SparseMatrix:
    """A basis of ker(m), one vector per column."""
    if m.cols == 0:
        return SparseMatrix.zeros(0, 0)
    if m.is_zero():
        return SparseMatrix.identity(m.cols)
    rows = m.to_domain_matrix().nullspace().to_list()
    return SparseMatrix.from_entries(
        m.cols, len(rows), (((i, j), v) for j, row in enumerate(rows) for i, v in enumerate(row))
    )


def homology_dim(d_out: SparseMatrix, d_in: SparseMatrix, where: str = "") -> int:
    """Dimension of ker(d_out) / im(d_in).

    Args:
        d_out (SparseMatrix): outgoing differential
        d_in (SparseMatrix): incoming differential
        where (str, optional): label used in the error message. Defaults to "".

    Raises:
        ShapeMismatch: if the matrices are not composable
        CompositionNonzero: if d_out · d_in ≠ 0

    Returns:
        int: the homology dimension
    """
    if d_out.cols != d_in.rows:
        raise ShapeMismatch((d_in.rows, "*"), d_out.shape)
    if not d_out.matmul(d_in).is_zero():
        logger.error(f"Differentials do not compose to zero {where}")
        raise CompositionNonzero(where)
    return kernel_dim(d_out) - rank(d_in)
