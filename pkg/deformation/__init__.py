__all__ = [
    "t1_labels", "t2_labels", "xi_label", "product", "derived_product", "symmetrized", "b_from_xi", "b_monomials",
    "product_matrix",
    "QuadricIdeal", "hull_quadrics", "hull_quadrics_from_table", "quadratic_dimension_bound", "DimensionBound",
    "exact_rank", "quadratic_monomials", "VARIABLES", "X_VARS", "Y_VARS",
    "CompositionClass", "composition_criterion", "composition_classes",
    "LocusEntry", "SpecialLocusReport", "special_locus_report"
]

from .composition import t1_labels, t2_labels, xi_label, product, derived_product, symmetrized, b_from_xi, \
    b_monomials, product_matrix
from .locus import CompositionClass, composition_criterion, composition_classes, LocusEntry, SpecialLocusReport, \
    special_locus_report
from .quadrics import QuadricIdeal, hull_quadrics, hull_quadrics_from_table, quadratic_dimension_bound, \
    DimensionBound, exact_rank, quadratic_monomials, VARIABLES, X_VARS, Y_VARS
