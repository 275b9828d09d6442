from .base import (
    GradualError,
    InputError,
    SchemaError,
    LengthMismatch,
    ShapeMismatch,
    IndexOutOfRange,
    TruncationRequired,
    ModeMismatch,
    MathAssertionError,
    NotMaurerCartan,
    NotCocycle,
    InternalInconsistency,
    CompositionNonzero,
    ModuleAxiomViolation,
    NotEigenvector,
    NotClosed,
    TransferInconsistent,
)
