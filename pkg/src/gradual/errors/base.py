from typing import Any, List, Optional


class GradualError(Exception):
    """Root of every error raised by gradual"""
    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)

    def __repr__(self) -> str:
        return self.message


################################### Input errors ###################################

class InputError(GradualError):
    """Raised when an input file or argument does not describe a valid object"""
    pass

class SchemaError(InputError):
    """Raised when a JSON input does not match its schema"""
    def __init__(self, path: str, field: str, reason: str, line: Optional[int] = None) -> None:
        self.path = path
        self.field = field
        self.line = line
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: field '{field}': {reason}")

class LengthMismatch(InputError):
    """Raised when a permutation and its degree list have different lengths"""
    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"Length mismatch: expected {expected} entries, got {got}.")

class ShapeMismatch(InputError):
    """Raised when a matrix does not have the shape an operation needs"""
    def __init__(self, expected: Any, got: Any) -> None:
        super().__init__(f"Shape mismatch: expected {expected}, got {got}.")

class IndexOutOfRange(InputError):
    """Raised when a basis index does not exist"""
    def __init__(self, index: int, size: int) -> None:
        super().__init__(f"Index {index} out of range for a basis of size {size}.")

class TruncationRequired(InputError):
    """Raised when a complex is infinite and no truncation was given"""
    def __init__(self, what: str) -> None:
        super().__init__(f"{what} is infinite-dimensional: pass an explicit truncation or degree window.")

class ModeMismatch(InputError):
    """Raised when an operation is called on an object of the wrong grading or Laurent mode"""
    pass


################################### Mathematical assertions ###################################

class MathAssertionError(GradualError):
    """Raised when a checked mathematical statement fails on the given input"""
    pass

class NotMaurerCartan(MathAssertionError):
    """Raised when an element used as a twist fails dξ + ξ² = 0"""
    def __init__(self, residue: str) -> None:
        super().__init__(f"Element is not Maurer-Cartan: dξ + ξ² = {residue}.")

class NotCocycle(MathAssertionError):
    """Raised when the divergence of an L∞ structure is not closed"""
    def __init__(self, residue: str) -> None:
        super().__init__(f"ℓ(∇ℓ) does not vanish up to the truncation order: {residue}.")


################################### Internal inconsistencies ###################################

class InternalInconsistency(GradualError):
    """Raised when a self-check of a pipeline fails; this signals a bug, not bad input"""
    pass

class CompositionNonzero(InternalInconsistency):
    """Raised when two consecutive differentials do not compose to zero"""
    def __init__(self, where: str = "") -> None:
        super().__init__(f"d_out ∘ d_in is not zero{' at ' + where if where else ''}.")

class ModuleAxiomViolation(InternalInconsistency):
    """Raised when a constructed module fails ρ([u,v]) = [ρ(u), ρ(v)]"""
    def __init__(self, violations: List[str]) -> None:
        self.violations = violations
        super().__init__("Module axioms fail for: " + ", ".join(violations))

class NotEigenvector(InternalInconsistency):
    """Raised when [Δ, d] does not act by the expected scalar on a bimonomial"""
    def __init__(self, bimonomial: str, expected: str) -> None:
        super().__init__(f"[Δ, d]({bimonomial}) is not {expected} times the input.")

class NotClosed(InternalInconsistency):
    """Raised when the deformed Berezinian is not ∂-closed"""
    def __init__(self, residue: str) -> None:
        super().__init__(f"∂B̃ = {residue} ≠ 0.")

class TransferInconsistent(InternalInconsistency):
    """Raised when the transferred action on B̃ is not a scalar multiple of B̃"""
    def __init__(self, generator: str) -> None:
        super().__init__(f"(αtβ)(B̃ ⋆ {generator}) is not a multiple of B̃.")
