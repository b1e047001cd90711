__all__ = [
    "ExceptionalCollection", "generator_objects", "is_exceptional",
    "NumClass", "numclass_of", "line_class", "point_class", "euler_pairing", "project_numclass",
    "E1Page", "e1_page", "e1_page_right_adjoint", "einfty_total", "d1_rank_skyscraper",
    "NegativeHomReport", "negative_hom_check", "generator_negative_report",
    "CurveProjectionReport", "curve_projection_report",
    "SpectralReport", "skyscraper_report", "curve_report", "curve_ext_relation",
    "NormalBundleReport", "normal_bundle_report"
]

from .checks import NegativeHomReport, negative_hom_check, generator_negative_report, CurveProjectionReport, \
    curve_projection_report, SpectralReport, skyscraper_report, curve_report, curve_ext_relation, \
    NormalBundleReport, normal_bundle_report
from .collection import ExceptionalCollection, generator_objects, is_exceptional
from .numclass import NumClass, numclass_of, line_class, point_class, euler_pairing, project_numclass
from .page import E1Page, e1_page, e1_page_right_adjoint, einfty_total, d1_rank_skyscraper
