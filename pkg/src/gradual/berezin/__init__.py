from .bielement import BiMonomial, BiSpace, BiElement
from .hodge import BerezinComplex, hodge_d, hodge_s, perturbation_x, hodge_laplacian_commutator
from .dualizing import (
    DEFAULT_HODGE_SAMPLES,
    DeformedBerezinian,
    deformed_berezinian,
    DualizingCharacter,
    dualizing_character,
    CharacterEntry,
    MainTheoremReport,
    verify_main_theorem,
    random_bimonomial,
    sample_bimonomials,
    HodgeReport,
    hodge_check,
    perturbed_hodge_check,
)
