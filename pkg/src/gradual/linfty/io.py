import logging
from pathlib import Path
from typing import Any, Dict, List

from .structure import LinftyStructure
from ..exact import format_scalar
from ..formal import FormalElement, FreeAlgebra, Generator, VectorField
from ..graded import GradingMode
from ..liealg.io import PathLike, _require, _scalar, parse_basis, read_json
from ..errors import InputError, SchemaError

logger = logging.getLogger(__name__)


def _element(algebra: FreeAlgebra, terms: Any, path: str, where: str) -> FormalElement:
    if not isinstance(terms, list):
        raise SchemaError(path, where, "expected a list of terms")
    f = FormalElement.zero(algebra)
    for t, term in enumerate(terms):
        field = f"{where}[{t}]"
        exponents = _require(term, "monomial", dict, path, field + ".")
        if any(not isinstance(k, int) or isinstance(k, bool) for k in exponents.values()):
            raise SchemaError(path, field + ".monomial", "exponents must be integers")
        try:
            m = algebra.monomial(exponents)
        except InputError as e:
            raise SchemaError(path, field + ".monomial", e.message) from e
        f = f + FormalElement(algebra, {m: _scalar(term.get("coeff", "1"), path, field + ".coeff")})
    return f


def linfty_from_dict(data: Dict[str, Any], path: str = "<dict>", name: str = "") -> LinftyStructure:
    """Parse the L∞ schema: generators of (𝔤[1])*, ℓ on each generator and an optional truncation."""
    mode_text = data.get("mode", "Z") if isinstance(data, dict) else None
    if mode_text not in ("Z", "Z2"):
        raise SchemaError(path, "mode", f"expected \"Z\" or \"Z2\", got {mode_text!r}")
    mode = GradingMode(mode_text)
    basis = parse_basis(_require(data, "generators", list, path, ""), mode, path, "generators")
    algebra = FreeAlgebra(tuple(Generator(n, d) for n, d in zip(basis.names, basis.degrees)))
    coefficients: Dict[int, FormalElement] = {}
    for n, item in enumerate(data.get("derivation", [])):
        where = f"derivation[{n}]."
        try:
            i = algebra.index(_require(item, "on", str, path, where))
        except InputError as e:
            raise SchemaError(path, where + "on", e.message) from e
        if i in coefficients:
            raise SchemaError(path, where + "on", f"ℓ({algebra.names[i]}) is given twice")
        coefficients[i] = _element(algebra, _require(item, "value", list, path, where), path, where + "value")
    truncation = data.get("truncation")
    if truncation is not None and (not isinstance(truncation, int) or isinstance(truncation, bool) or truncation < 1):
        raise SchemaError(path, "truncation", "expected a positive integer")
    return LinftyStructure(
        algebra, VectorField(algebra, coefficients), truncation, mode, name or str(data.get("name", ""))
    )


def load_linfty(path: PathLike) -> LinftyStructure:
    data = read_json(path)
    s = linfty_from_dict(data, str(path), name=data.get("name", Path(path).stem) if isinstance(data, dict) else "")
    logger.debug(f"Loaded L∞ structure {s.name} on {len(s.algebra)} generators, truncation {s.order}")
    return s


def element_to_list(f: FormalElement) -> List[Dict[str, Any]]:
    names = f.algebra.names
    return [
        {"monomial": {names[i]: k for i, k in enumerate(m) if k}, "coeff": format_scalar(c)} for m, c in f
    ]


def linfty_to_dict(s: LinftyStructure) -> Dict[str, Any]:
    names = s.algebra.names
    return {
        "name": s.name,
        "mode": s.mode.value,
        "generators": [{"name": g.name, "degree": g.degree} for g in s.algebra.generators],
        "derivation": [
            {"on": names[i], "value": element_to_list(f)} for i, f in sorted(s.derivation.coefficients.items())
        ],
        "truncation": s.order,
    }


def load_element(path: PathLike, algebra: FreeAlgebra) -> FormalElement:
    """A twisting element stored as {"element": [terms]} over the generators of `algebra`."""
    data = read_json(path)
    return _element(algebra, _require(data, "element", list, str(path), ""), str(path), "element")
