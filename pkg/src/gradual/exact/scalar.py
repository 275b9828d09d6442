from typing import Any, Union
import sympy
from sympy.polys.domains import QQ

# Elements of QQ are gmpy2.mpq when gmpy2 is installed and PythonMPQ otherwise;
# both are always in lowest terms with a positive denominator.
Scalar = Any

ZERO = QQ.zero
ONE = QQ.one


def to_scalar(value: Union[int, str, Any]) -> Scalar:
    """Convert an int, a "p/q" string or an element of QQ into an element of QQ."""
    if isinstance(value, str):
        return parse_scalar(value)
    return QQ.convert(value)


def parse_scalar(text: str) -> Scalar:
    """Parse "p/q" or "p" into an exact rational.

    Args:
        text (str): the serialized scalar

    Raises:
        ValueError: if text is not a rational number

    Returns:
        Scalar: the parsed value
    """
    try:
        value = sympy.Rational(text.strip())
    except (TypeError, ValueError, sympy.SympifyError) as e:
        raise ValueError(f"'{text}' is not a rational number") from e
    return QQ.from_sympy(value)


def format_scalar(value: Scalar) -> str:
    """Serialize a scalar as "p/q", or "p" when q = 1."""
    value = QQ.convert(value)
    num, den = int(value.numerator), int(value.denominator)
    return f"{num}" if den == 1 else f"{num}/{den}"
