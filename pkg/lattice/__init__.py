__all__ = [
    "DivisorClass", "H", "E", "K", "D", "F", "sum_E", "parse_divisor",
    "intersect", "euler_char", "reflection_r", "symmetrize_full", "genus_of_multiple",
    "clamp_exceptional", "canonical_form",
    "Permutation", "permute",
    "CremonaLogEntry", "cremona_step", "cremona_reduce", "reduction_chain"
]

from .cremona import CremonaLogEntry, cremona_step, cremona_reduce, reduction_chain
from .divisor import DivisorClass, H, E, K, D, F, sum_E, parse_divisor, intersect, euler_char, reflection_r, \
    symmetrize_full, genus_of_multiple, clamp_exceptional, canonical_form
from .symmetry import Permutation, permute
