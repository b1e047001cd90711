__all__ = [
    "modular_rank",
    "FatPointProblem", "RankResult", "sample_points", "condition_matrix", "interp_dim",
    "CrossCheck", "cross_check", "CASE_LISTS", "case_list",
    "GeneralityRecord", "GeneralityReport", "verify_generality"
]

from .elimination import modular_rank
from .oracle import FatPointProblem, RankResult, sample_points, condition_matrix, interp_dim, CrossCheck, \
    cross_check, CASE_LISTS, case_list, GeneralityRecord, GeneralityReport, verify_generality
