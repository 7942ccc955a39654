"""Schubert polynomials, pipe dreams and their SEM/CHM expansions, in exact arithmetic."""

from ._accel import backend
from .bases import (
    SemExpansion,
    chm_product,
    constructive_sem,
    elementary_poly,
    homogeneous_poly,
    sem_expand,
    sem_product,
    single_chm_of,
    single_monomial_of,
    single_sem_of,
)
from .perm import PermutationError, lehmer_code, lehmer_rules_check, parse_word, perm_from_word
from .pipedream import PipeDream, bottom_pipe_dream, enumerate_reduced
from .poly import Poly, divided_difference, leading_monomial, monomial, var
from .schubert import expand_schubert_basis, monk_products, schubert, schubert_divdiff
from .verify import SuiteConfig, classify, run_suite

__version__ = "0.1.0"

__all__ = [
    "backend",
    "SemExpansion",
    "chm_product",
    "constructive_sem",
    "elementary_poly",
    "homogeneous_poly",
    "sem_expand",
    "sem_product",
    "single_chm_of",
    "single_monomial_of",
    "single_sem_of",
    "PermutationError",
    "lehmer_code",
    "lehmer_rules_check",
    "parse_word",
    "perm_from_word",
    "PipeDream",
    "bottom_pipe_dream",
    "enumerate_reduced",
    "Poly",
    "divided_difference",
    "leading_monomial",
    "monomial",
    "var",
    "expand_schubert_basis",
    "monk_products",
    "schubert",
    "schubert_divdiff",
    "SuiteConfig",
    "classify",
    "run_suite",
]
