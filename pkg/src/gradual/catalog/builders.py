import logging
import os
import random
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from ..exact import Scalar, format_scalar, to_scalar
from ..liealg import GradedLieAlgebra, algebra_from_dict, read_json
from ..linfty import LinftyStructure, linfty_from_dict
from ..errors import InputError

logger = logging.getLogger(__name__)

CATALOG_ENV = "GRADUAL_CATALOG"
CATALOG_DIR = Path(__file__).parent


def catalog_path() -> Path:
    """Directory of catalog JSON files: $GRADUAL_CATALOG when set, the bundled one otherwise."""
    override = os.environ.get(CATALOG_ENV)
    return Path(override) if override else CATALOG_DIR


def list_catalog() -> Dict[str, str]:
    """Catalog entries by name, each tagged "algebra" or "linfty"."""
    out = {}
    for path in sorted(catalog_path().glob("*.json")):
        data = read_json(path)
        out[path.stem] = "linfty" if isinstance(data, dict) and "derivation" in data else "algebra"
    return out


def _entry(name: str) -> Tuple[Path, Any]:
    path = catalog_path() / f"{name}.json"
    if not path.is_file():
        raise InputError(f"No catalog entry '{name}' in {catalog_path()}. Available: {list(list_catalog())}")
    return path, read_json(path)


def load_catalog_algebra(name: str) -> GradedLieAlgebra:
    path, data = _entry(name)
    logger.debug(f"Loading catalog algebra {name} from {path}")
    return algebra_from_dict(data, str(path), name=data.get("name", name))


def load_catalog_linfty(name: str) -> LinftyStructure:
    path, data = _entry(name)
    return linfty_from_dict(data, str(path), name=data.get("name", name))


def _term(gen: str, coeff: Union[int, Scalar] = 1) -> Dict[str, str]:
    return {"gen": gen, "coeff": format_scalar(to_scalar(coeff))}


def _generators(names: Sequence[str], degrees: Sequence[int]) -> List[Dict[str, Any]]:
    return [{"name": n, "degree": d} for n, d in zip(names, degrees)]


def abelian_algebra(degrees: Sequence[int], name: str = "") -> GradedLieAlgebra:
    """The abelian Lie algebra with one basis vector a<i> per listed degree."""
    names = [f"a{i + 1}" for i in range(len(degrees))]
    return algebra_from_dict(
        {"generators": _generators(names, degrees), "brackets": []}, name=name or f"abelian{len(degrees)}"
    )


def solvable_algebra(lam: Union[int, str, Scalar]) -> GradedLieAlgebra:
    """[e1, e2] = λ e2; unimodular only for λ = 0."""
    lam = to_scalar(lam)
    return algebra_from_dict(
        {
            "generators": _generators(["e1", "e2"], [0, 0]),
            "brackets": [{"left": "e1", "right": "e2", "result": [_term("e2", lam)]}] if lam != 0 else [],
        },
        name=f"solvable_{format_scalar(lam)}",
    )


def random_solvable_algebra(rng: random.Random, height: int = 3) -> GradedLieAlgebra:
    """𝕜e1 ⋉ 𝕜² with ad(e1) a random rational 2x2 matrix; Jacobi holds for any choice."""
    a, b, c, d = (QQ(rng.randint(-height, height), rng.randint(1, height)) for _ in range(4))
    brackets = []
    for target, (p, q) in (("e2", (a, c)), ("e3", (b, d))):
        result = [_term(g, v) for g, v in (("e2", p), ("e3", q)) if v != 0]
        if result:
            brackets.append({"left": "e1", "right": target, "result": result})
    return algebra_from_dict(
        {"generators": _generators(["e1", "e2", "e3"], [0, 0, 0]), "brackets": brackets}, name="random_solvable"
    )


def _monomial_term(exponents: Dict[str, int], coeff: int = 1) -> Dict[str, Any]:
    return {"monomial": exponents, "coeff": str(coeff)}


def projective_space_model(n: int) -> LinftyStructure:
    """ℓ = y^{n+1} ∂/∂x with |y| = 2, |x| = 2n+1: a model of the cochains of CP^n."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return linfty_from_dict(
        {
            "generators": [{"name": "y", "degree": 2}, {"name": "x", "degree": 2 * n + 1}],
            "derivation": [{"on": "x", "value": [_monomial_term({"y": n + 1})]}],
        },
        name=f"projective_space_n{n}",
    )


def square_zero_model(n: int) -> LinftyStructure:
    """ℓ = xⁿ y ∂/∂x with x even of degree 0 and y odd of degree 1."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return linfty_from_dict(
        {
            "generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 1}],
            "derivation": [{"on": "x", "value": [_monomial_term({"x": n, "y": 1})]}],
        },
        name=f"square_zero_n{n}",
    )


def weighted_kernel_model(n: int) -> LinftyStructure:
    """ℓ = yⁿ z ∂/∂x with x, y of degree 0 and z of degree 1."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    return linfty_from_dict(
        {
            "generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}, {"name": "z", "degree": 1}],
            "derivation": [{"on": "x", "value": [_monomial_term({"y": n, "z": 1})]}],
        },
        name=f"weighted_kernel_n{n}",
    )


def dg_acyclic_model() -> LinftyStructure:
    """The abelian dg Lie algebra with d(a) = b seen through its linear ℓ(v) = u; not minimal."""
    return linfty_from_dict(
        {
            "generators": [{"name": "v", "degree": 0}, {"name": "u", "degree": 1}],
            "derivation": [{"on": "v", "value": [_monomial_term({"u": 1})]}],
        },
        name="dg_acyclic",
    )
