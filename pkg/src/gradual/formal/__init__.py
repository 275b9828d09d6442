from .algebra import Generator, FreeAlgebra, SuperMonomial
from .element import FormalElement, multiply
from .field import (
    VectorField,
    apply_vector_field,
    divergence,
    lie_bracket_fields,
    laurent_algebra,
    formal_integral,
    pairing,
    adjoint_vector_field,
)
