import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from .algebra import GradedLieAlgebra
from .module import LieModule, check_module
from ..exact import SparseMatrix, format_scalar, parse_scalar
from ..graded import GradedBasis, GradingMode
from ..errors import InputError, SchemaError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def read_json(path: PathLike) -> Any:
    """Read a JSON file, turning syntax errors into SchemaError with the offending line."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise SchemaError(str(path), "<file>", f"cannot be read ({e.strerror})") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(str(path), "<json>", e.msg, e.lineno) from e


def _require(obj: Any, key: str, kind: type, path: str, where: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(path, f"{where}{key}", "missing")
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise SchemaError(path, f"{where}{key}", f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _scalar(value: Any, path: str, field: str):
    if isinstance(value, int) and not isinstance(value, bool):
        value = str(value)
    if not isinstance(value, str):
        raise SchemaError(path, field, "scalars are written as \"p/q\" or \"p\"")
    try:
        return parse_scalar(value)
    except ValueError as e:
        raise SchemaError(path, field, str(e)) from e


def parse_basis(items: Any, mode: GradingMode, path: str, field: str) -> GradedBasis:
    if not isinstance(items, list):
        raise SchemaError(path, field, "expected a list")
    names, degrees = [], []
    for n, item in enumerate(items):
        names.append(_require(item, "name", str, path, f"{field}[{n}]."))
        degrees.append(_require(item, "degree", int, path, f"{field}[{n}]."))
    try:
        return GradedBasis(tuple(names), tuple(degrees), mode)
    except InputError as e:
        raise SchemaError(path, field, e.message) from e


def algebra_from_dict(data: Dict[str, Any], path: str = "<dict>", name: str = "") -> GradedLieAlgebra:
    """Parse the algebra schema; the basis is normalized so even generators come first."""
    mode_text = data.get("mode", "Z") if isinstance(data, dict) else None
    if mode_text not in ("Z", "Z2"):
        raise SchemaError(path, "mode", f"expected \"Z\" or \"Z2\", got {mode_text!r}")
    raw = parse_basis(_require(data, "generators", list, path, ""), GradingMode(mode_text), path, "generators")
    basis, _ = raw.normalized()
    brackets = []
    for n, item in enumerate(data.get("brackets", [])):
        where = f"brackets[{n}]."
        try:
            i = basis.index(_require(item, "left", str, path, where))
            j = basis.index(_require(item, "right", str, path, where))
        except InputError as e:
            raise SchemaError(path, f"{where}left/right", e.message) from e
        result = {}
        for t, term in enumerate(_require(item, "result", list, path, where)):
            field = f"{where}result[{t}]"
            try:
                k = basis.index(_require(term, "gen", str, path, field + "."))
            except InputError as e:
                raise SchemaError(path, field + ".gen", e.message) from e
            result[k] = result.get(k, 0) + _scalar(term.get("coeff", "1"), path, field + ".coeff")
        brackets.append((i, j, result))
    try:
        return GradedLieAlgebra.from_brackets(basis, brackets, name or str(data.get("name", "")))
    except InputError as e:
        raise SchemaError(path, "brackets", e.message) from e


def load_algebra(path: PathLike) -> GradedLieAlgebra:
    data = read_json(path)
    alg = algebra_from_dict(data, str(path), name=data.get("name", Path(path).stem) if isinstance(data, dict) else "")
    logger.debug(f"Loaded algebra {alg.name} of dimension {alg.dim} from {path}")
    return alg


def module_from_dict(data: Dict[str, Any], alg: GradedLieAlgebra, path: str = "<dict>") -> LieModule:
    carrier = parse_basis(_require(data, "carrier", list, path, ""), alg.mode, path, "carrier")
    n = len(carrier)
    matrices = {i: SparseMatrix.zeros(n, n) for i in range(alg.dim)}
    for a, item in enumerate(_require(data, "action", list, path, "")):
        where = f"action[{a}]."
        try:
            i = alg.basis.index(_require(item, "gen", str, path, where))
        except InputError as e:
            raise SchemaError(path, where + "gen", e.message) from e
        rows = _require(item, "matrix", list, path, where)
        if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise SchemaError(path, where + "matrix", f"expected a {n}x{n} matrix")
        matrices[i] = SparseMatrix.from_rows(
            [[_scalar(v, path, f"{where}matrix[{r}][{c}]") for c, v in enumerate(row)] for r, row in enumerate(rows)]
        )
    module = LieModule(carrier, tuple(matrices[i] for i in range(alg.dim)), str(data.get("name", "")))
    return check_module(alg, module)


def load_module(path: PathLike, alg: GradedLieAlgebra) -> LieModule:
    data = read_json(path)
    return module_from_dict(data, alg, str(path))


def algebra_to_dict(alg: GradedLieAlgebra) -> Dict[str, Any]:
    names = alg.basis.names
    brackets: List[Dict[str, Any]] = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            result = alg.bracket_basis(i, j)
            if result:
                brackets.append({
                    "left": names[i],
                    "right": names[j],
                    "result": [{"gen": names[k], "coeff": format_scalar(c)} for k, c in sorted(result.items())],
                })
    return {
        "name": alg.name,
        "mode": alg.mode.value,
        "generators": [{"name": n, "degree": d} for n, d in zip(names, alg.basis.degrees)],
        "brackets": brackets,
    }


def module_to_dict(alg: GradedLieAlgebra, m: LieModule) -> Dict[str, Any]:
    return {
        "name": m.name,
        "carrier": [{"name": n, "degree": d} for n, d in zip(m.carrier.names, m.carrier.degrees)],
        "action": [
            {"gen": alg.basis.names[i], "matrix": [[format_scalar(v) for v in row] for row in mat.to_rows()]}
            for i, mat in enumerate(m.action)
            if not mat.is_zero()
        ],
    }
