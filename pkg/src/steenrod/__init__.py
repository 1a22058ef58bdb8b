"""Computation engine for the mod-2 Steenrod algebra.

Normalizes compositions of Steenrod squares onto the admissible basis
through the Adem relations, acts on polynomial and finite graded
cohomology models via the Cartan formula, re-derives the relations by
identifying coefficients of double total squares, and runs the Sq^2
computation that distinguishes the suspension of CP^2 from S^5 v S^3,
showing pi_4(S^3) is nonzero.
"""

from .adem import (
    AdemElement,
    Sq,
    StepBudgetExceeded,
    Word,
    adem_rewrite,
    admissible_basis,
    degree,
    excess,
    is_admissible,
    normalize,
    product,
)
from .derive import SymbolicClass, derive_adem_relations
from .f2 import adem_coeff, binom_mod2, sum_add
from .modules import (
    GradedModule,
    ModuleElement,
    Pi4Report,
    VerifyReport,
    act_on_module,
    builtin_catalog,
    complex_proj,
    cup_elements,
    distinguish_pi4,
    full_verification_catalog,
    point,
    real_proj,
    sphere,
    sq_matrix,
    suspend,
    verify_axioms,
    wedge,
)
from .parsing import ParseError, parse_poly, parse_sq
from .poly import (
    Monomial,
    PolyElement,
    act,
    check_tautological_vanishing,
    check_total_sq_multiplicative,
    coefficient,
    cup,
    faithful_rank,
    make_monomial,
    sq,
    sq_on_power,
    substitute,
    total_square,
    variable,
)

__version__ = "0.1.0"

__all__ = [
    "AdemElement",
    "GradedModule",
    "ModuleElement",
    "Monomial",
    "ParseError",
    "Pi4Report",
    "PolyElement",
    "Sq",
    "StepBudgetExceeded",
    "SymbolicClass",
    "VerifyReport",
    "Word",
    "act",
    "act_on_module",
    "adem_coeff",
    "adem_rewrite",
    "admissible_basis",
    "binom_mod2",
    "builtin_catalog",
    "check_tautological_vanishing",
    "check_total_sq_multiplicative",
    "coefficient",
    "complex_proj",
    "cup",
    "cup_elements",
    "degree",
    "derive_adem_relations",
    "distinguish_pi4",
    "excess",
    "faithful_rank",
    "full_verification_catalog",
    "is_admissible",
    "make_monomial",
    "normalize",
    "parse_poly",
    "parse_sq",
    "point",
    "product",
    "real_proj",
    "sphere",
    "sq",
    "sq_matrix",
    "sq_on_power",
    "substitute",
    "sum_add",
    "suspend",
    "total_square",
    "variable",
    "verify_axioms",
    "wedge",
]
