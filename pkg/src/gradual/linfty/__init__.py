from .structure import (
    LinftyStructure,
    default_truncation,
    validate_linfty,
    is_minimal,
    satisfies_hypothesis_h,
    divergence_cocycle,
    linfty_from_lie_algebra,
)
from .cohomology import (
    SliceKey,
    OrderEntry,
    LinftyCohomologyTable,
    TruncatedComplex,
    truncated_cohomology,
    DualityPair,
    ConjectureEvidence,
    conjecture_evidence,
)
from .io import linfty_from_dict, load_linfty, linfty_to_dict, element_to_list, load_element
