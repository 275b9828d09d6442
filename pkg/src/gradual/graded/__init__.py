from .basis import GradingMode, GradedBasis, koszul_sign, total_dimension_invariant, supertrace
