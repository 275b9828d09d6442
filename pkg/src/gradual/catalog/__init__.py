from .builders import (
    CATALOG_ENV,
    CATALOG_DIR,
    catalog_path,
    list_catalog,
    load_catalog_algebra,
    load_catalog_linfty,
    abelian_algebra,
    solvable_algebra,
    random_solvable_algebra,
    projective_space_model,
    square_zero_model,
    weighted_kernel_model,
    dg_acyclic_model,
)
