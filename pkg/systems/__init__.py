__all__ = [
    "SystemVerdict", "TraceStep", "decide",
    "EMPTY_SLOPE", "NONSPECIAL_SLOPE", "h2_vanishes", "empty_by_slope", "nonspecial_by_slope",
    "nonspecial_standard_form",
    "RatioConstraint", "CaseConstraint", "SplitShape", "SplitRefutation", "SPLIT_BOXES", "parse_box",
    "homogeneous_split", "point_split", "enumerate_split_cases", "refute_split",
    "OrbitReport", "orbit_size", "all_orbit_sizes", "orbit_divisor_argument",
    "AmpleReport", "ample_slope_check", "UniquenessReport", "uniqueness_report"
]

from .decide import decide
from .slope import EMPTY_SLOPE, NONSPECIAL_SLOPE, h2_vanishes, empty_by_slope, nonspecial_by_slope, \
    nonspecial_standard_form
from .split_cases import RatioConstraint, CaseConstraint, SplitShape, SplitRefutation, SPLIT_BOXES, parse_box, \
    homogeneous_split, point_split, enumerate_split_cases, refute_split, OrbitReport, orbit_size, all_orbit_sizes, \
    orbit_divisor_argument, AmpleReport, ample_slope_check, UniquenessReport, uniqueness_report
from .verdict import SystemVerdict, TraceStep
