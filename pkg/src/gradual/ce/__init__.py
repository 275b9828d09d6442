from .complex import (
    DEFAULT_TRUNCATION,
    CochainBasisElement,
    CeCochainComplex,
    CohomologyTable,
    DegreeEntry,
    ce_generators,
    ce_vector_field,
    ce_differential,
    cohomology,
)
from .twist import SIDES, McElement, maurer_cartan_residue, twist_differential
from .chain import (
    ChainComplex,
    chain_complex,
    pairing_violations,
    HazewinkelEntry,
    HazewinkelReport,
    hazewinkel_check,
)
