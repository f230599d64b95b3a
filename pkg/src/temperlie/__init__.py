"""Exact-arithmetic temperedness criteria for complex semisimple homogeneous
spaces.

The package decides, for a complex semisimple Lie algebra g given by rational
structure constants and a Lie subalgebra h, whether the regular
representation on the corresponding homogeneous space is tempered.  Five
independent criteria (Rho, Orb, Tmu, Sla and, for reductive h, Ags) are
implemented over exact rationals and cross-checked against each other.
"""

from .catalog import (PairSpec, RootDatum, borel, builtin_pair,
                      builtin_pair_specs, cartan_subalgebra, diagonal_embedding,
                      direct_sum, extract_root_datum, make_sl, make_so, make_sp,
                      maximal_unipotent, opposite_unipotent, parabolic,
                      principal_sl2, resolve_pair)
from .core import Automorphism, LieAlgebra, Subspace, whole_subspace, zero_subspace
from .criteria import (CriterionVerdict, check_ags, check_orb, check_rho,
                       check_sla, check_tem, check_tmu,
                       property_levi_projection, property_minimal_centralizer)
from .degeneration import (Grading, LimitWitness, contract_to_solvable,
                           subspace_limit, weight_grading)
from .errors import (InputError, InternalInconsistencyError,
                     ResourceBudgetError, UnsupportedError)
from .rho import (RhoReport, ToralSubalgebra, WeightSystem, find_toral,
                  quotient_weight_system, rho_inequality, rho_value,
                  weight_system)

__version__ = "0.1.0"

__all__ = [
    "Automorphism", "CriterionVerdict", "Grading", "InputError",
    "InternalInconsistencyError", "LieAlgebra", "LimitWitness", "PairSpec",
    "ResourceBudgetError", "RhoReport", "RootDatum", "Subspace",
    "ToralSubalgebra", "UnsupportedError", "WeightSystem", "borel",
    "builtin_pair", "builtin_pair_specs", "cartan_subalgebra", "check_ags",
    "check_orb", "check_rho", "check_sla", "check_tem", "check_tmu",
    "contract_to_solvable", "diagonal_embedding", "direct_sum",
    "extract_root_datum", "find_toral", "make_sl", "make_so", "make_sp",
    "maximal_unipotent", "opposite_unipotent", "parabolic", "principal_sl2",
    "property_levi_projection", "property_minimal_centralizer",
    "quotient_weight_system", "resolve_pair", "rho_inequality", "rho_value",
    "subspace_limit", "weight_grading", "weight_system", "whole_subspace",
    "zero_subspace",
]
