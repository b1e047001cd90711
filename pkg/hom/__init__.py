__all__ = [
    "EXT1", "EXT2", "EXT1_PAIR", "EXT2_PAIR", "PARAMETERS", "GradedDim", "euler_characteristic", "is_zero", "render_entry",
    "LineBundle", "Skyscraper", "CurveSheaf", "ObjectSpec", "parse_object",
    "hom", "h0", "same_curve", "line_cohomology", "generic_line_bundle_h", "curve_intersection_degree", "is_generic"
]

from .graded import EXT1, EXT2, EXT1_PAIR, EXT2_PAIR, PARAMETERS, GradedDim, euler_characteristic, is_zero, render_entry
from .oracle import hom, h0, same_curve, line_cohomology, generic_line_bundle_h, curve_intersection_degree, is_generic
from .sheaf import LineBundle, Skyscraper, CurveSheaf, ObjectSpec, parse_object
