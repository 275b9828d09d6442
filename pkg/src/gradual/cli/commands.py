import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from .config import BUILTIN_MODULES, RunConfig
from ..catalog import catalog_path
from ..ce import CeCochainComplex, CohomologyTable, McElement, ce_vector_field, hazewinkel_check, twist_differential
from ..berezin import hodge_check, perturbed_hodge_check, verify_main_theorem
from ..exact import format_scalar
from ..formal import FormalElement
from ..liealg import (
    GradedLieAlgebra,
    LieModule,
    adjoint_module,
    algebra_from_dict,
    dual_module,
    is_unimodular,
    load_module,
    read_json,
    supertrace_character,
    trivial_module,
    validate,
)
from ..linfty import (
    LinftyStructure,
    conjecture_evidence,
    divergence_cocycle,
    is_minimal,
    linfty_from_dict,
    linfty_from_lie_algebra,
    load_element,
    satisfies_hypothesis_h,
    truncated_cohomology,
    validate_linfty,
)
from ..errors import InputError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MATH = 2
EXIT_INTERNAL = 3

Loaded = Union[GradedLieAlgebra, LinftyStructure]


@dataclass
class Outcome:
    report: Dict[str, Any]
    status: int = EXIT_OK


def resolve_input(ref: str) -> Path:
    """A file path, or the name of a catalog entry."""
    path = Path(ref)
    if path.is_file():
        return path
    entry = catalog_path() / f"{ref}.json"
    if entry.is_file():
        return entry
    raise InputError(f"'{ref}' is neither a file nor a catalog entry in {catalog_path()}")


def load_input(ref: str) -> Loaded:
    path = resolve_input(ref)
    data = read_json(path)
    name = data.get("name", path.stem) if isinstance(data, dict) else path.stem
    if isinstance(data, dict) and "derivation" in data:
        return linfty_from_dict(data, str(path), name=name)
    return algebra_from_dict(data, str(path), name=name)


def _algebra(config: RunConfig) -> GradedLieAlgebra:
    obj = load_input(config.input)
    if not isinstance(obj, GradedLieAlgebra):
        raise InputError(f"'{config.command}' needs a Lie algebra, {config.input} describes an L∞ structure")
    return obj


def _structure(config: RunConfig) -> LinftyStructure:
    obj = load_input(config.input)
    if isinstance(obj, GradedLieAlgebra):
        return linfty_from_lie_algebra(obj, config.truncation)
    return obj


def _module(alg: GradedLieAlgebra, ref: str) -> LieModule:
    if ref == "trivial":
        return trivial_module(alg)
    if ref == "adjoint":
        return adjoint_module(alg)
    if ref == "dual-adjoint":
        return dual_module(alg, adjoint_module(alg))
    return load_module(resolve_input(ref), alg)


def _dims(table: CohomologyTable) -> Dict[str, int]:
    return {f"H{e.i}": e.dim for e in table.entries if e.stable}


def _invalid(alg: GradedLieAlgebra) -> Optional[Outcome]:
    report = validate(alg)
    if report.valid:
        return None
    logger.error(f"{alg.name or 'algebra'} is not a graded Lie algebra")
    return Outcome({"algebra": alg.name, "validation": report.to_dict()}, EXIT_INPUT)


def run_validate(config: RunConfig) -> Outcome:
    obj = load_input(config.input)
    if isinstance(obj, GradedLieAlgebra):
        report = validate(obj)
        out = {"algebra": obj.name, "kind": "algebra", "dim": obj.dim, "mode": obj.mode.value, **report.to_dict()}
        if report.valid:
            out["unimodular"] = is_unimodular(obj)
        return Outcome(out, EXIT_OK if report.valid else EXIT_INPUT)
    report = validate_linfty(obj)
    out = {
        "structure": obj.name,
        "kind": "linfty",
        "truncation": obj.order,
        "minimal": is_minimal(obj),
        "hypothesis_h": satisfies_hypothesis_h(obj),
        **report.to_dict(),
    }
    return Outcome(out, EXIT_OK if report.valid else EXIT_INPUT)


def run_cohomology(config: RunConfig) -> Outcome:
    alg = _algebra(config)
    invalid = _invalid(alg)
    if invalid:
        return invalid
    if len(config.modules) > 1:
        raise InputError("'cohomology' takes at most one -m/--module")
    module = _module(alg, config.modules[0]) if config.modules else trivial_module(alg)
    complex_ = CeCochainComplex(alg, module, config.max_degree, config.y_truncation)
    if config.twist != "none":
        if config.twist == "divergence":
            xi = complex_.d_ce.divergence()
        else:
            xi = load_element(config.twist[len("file:"):], complex_.ce_algebra)
        complex_ = twist_differential(complex_, McElement.validated(complex_.d_ce, xi, mode=alg.mode), config.side)
    table = complex_.cohomology()
    return Outcome({
        "algebra": alg.name,
        "module": module.name or config.modules[0],
        "twist": config.twist,
        "cohomology": table.to_dict(),
        "dims": _dims(table),
        "euler_characteristic": table.euler_characteristic(),
    })


def run_character(config: RunConfig) -> Outcome:
    alg = _algebra(config)
    invalid = _invalid(alg)
    if invalid:
        return invalid
    report = verify_main_theorem(alg)
    out: Dict[str, Any] = {"algebra": alg.name, **report.to_dict()}
    status = EXIT_OK if report.match else EXIT_MATH
    if config.samples:
        hodge, perturbed = hodge_check(alg, config.samples), perturbed_hodge_check(alg, config.samples)
        out["hodge"] = hodge.to_dict()
        out["perturbed_hodge"] = perturbed.to_dict()
        if not (hodge.valid and perturbed.valid):
            status = EXIT_INTERNAL
    return Outcome(out, status)


def run_hazewinkel(config: RunConfig) -> Outcome:
    alg = _algebra(config)
    invalid = _invalid(alg)
    if invalid:
        return invalid
    rows: List[Dict[str, Any]] = []
    for ref in config.modules or list(BUILTIN_MODULES):
        report = hazewinkel_check(alg, _module(alg, ref), twisted=not config.untwisted)
        rows.append({"module": ref, **report.to_dict()})
    match = all(r["match"] for r in rows)
    return Outcome({"algebra": alg.name, "modules": rows, "match": match}, EXIT_OK if match else EXIT_MATH)


def run_divergence(config: RunConfig) -> Outcome:
    obj = load_input(config.input)
    if isinstance(obj, LinftyStructure):
        nabla = divergence_cocycle(obj)
        return Outcome({
            "structure": obj.name,
            "divergence": str(nabla.element),
            "unimodular": nabla.element.is_zero(),
            "total_dimension": obj.total_dimension,
        })
    invalid = _invalid(obj)
    if invalid:
        return invalid
    d_ce = ce_vector_field(obj)
    nabla = d_ce.divergence()
    character = supertrace_character(obj)
    expected = FormalElement(d_ce.algebra, {d_ce.algebra.generator_monomial(q): c for q, c in enumerate(character)})
    match = nabla == expected
    out = {
        "algebra": obj.name,
        "divergence": str(nabla),
        "supertrace": {n: format_scalar(c) for n, c in zip(obj.basis.names, character)},
        "unimodular": nabla.is_zero(),
        "match": match,
    }
    return Outcome(out, EXIT_OK if match else EXIT_MATH)


def run_linfty(config: RunConfig) -> Outcome:
    s = _structure(config)
    validation = validate_linfty(s)
    if not validation.valid:
        return Outcome({"structure": s.name, "validation": validation.to_dict()}, EXIT_INPUT)
    twist = None
    if config.twist == "divergence":
        twist = divergence_cocycle(s)
    elif config.twist.startswith("file:"):
        xi = load_element(config.twist[len("file:"):], s.algebra)
        twist = McElement.validated(s.derivation, xi, config.truncation or s.order, s.mode)
    window = config.degree_window
    if window is None and config.max_degree is not None:
        window = (0, config.max_degree)
    table = truncated_cohomology(s, twist, window, config.truncation, config.side)
    return Outcome({
        "structure": s.name,
        "minimal": is_minimal(s),
        "hypothesis_h": satisfies_hypothesis_h(s),
        "total_dimension": s.total_dimension,
        "twist": config.twist,
        "cohomology": table.to_dict(),
        "dims": _dims(table),
    })


def run_conjecture(config: RunConfig) -> Outcome:
    s = _structure(config)
    validation = validate_linfty(s)
    if not validation.valid:
        return Outcome({"structure": s.name, "validation": validation.to_dict()}, EXIT_INPUT)
    evidence = conjecture_evidence(s, config.truncation)
    return Outcome({"structure": s.name, "minimal": is_minimal(s), **evidence.to_dict()})


COMMAND_RUNNERS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "validate": run_validate,
    "cohomology": run_cohomology,
    "character": run_character,
    "hazewinkel": run_hazewinkel,
    "divergence": run_divergence,
    "linfty": run_linfty,
    "conjecture": run_conjecture,
}
