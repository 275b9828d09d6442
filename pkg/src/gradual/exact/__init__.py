from .scalar import Scalar, ZERO, ONE, to_scalar, parse_scalar, format_scalar
from .matrix import SparseMatrix, rank, kernel_dim, kernel_basis, homology_dim
