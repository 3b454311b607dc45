"""Mordell-Tornheim zeta values as combinations of multiple zeta values."""

from .convergence import ConvergenceQuery, mt_convergence_check, mzv_convergence_check
from .core import (
    MTIndex,
    MZVCombination,
    MZVIndex,
    PartialFractionTerm,
    TlCombination,
    TlIndex,
    lemma_identity_holds,
    multinomial_M,
    partial_fraction_terms,
)
from .evaluator import (
    eval_combination_truncated,
    eval_mt_float,
    eval_mzv_float,
    truncated_mt,
    truncated_mzv,
    truncated_tl,
    verify_reduction,
)
from .reducer import (
    base_case,
    closed_form_ones,
    opposite_parity,
    product_to_mzv,
    reduce,
    reduce_level,
    reduce_top,
)

__version__ = "0.1.0"
