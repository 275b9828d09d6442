from .algebra import (
    GradedLieAlgebra,
    ValidationReport,
    Violation,
    validate,
    adjoint_matrix,
    supertrace_character,
    is_unimodular,
)
from .module import (
    LieModule,
    TwistedDualModule,
    opposite_action,
    module_violations,
    check_module,
    trivial_module,
    adjoint_module,
    dual_module,
    tensor_module,
    hom_module,
    twisted_dual_module,
    untwisted_dual,
)
from .io import (
    read_json,
    algebra_from_dict,
    load_algebra,
    module_from_dict,
    load_module,
    algebra_to_dict,
    module_to_dict,
)
