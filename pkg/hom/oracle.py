import logging
from functools import lru_cache
from typing import Callable, Dict, Tuple

import sympy

from errors import Undecidable, UnsupportedPair
from lattice import DivisorClass, F, K, euler_char, intersect
from objects import ObjectKind
from systems import decide, h2_vanishes
from .graded import EXT1, EXT1_PAIR, EXT2, EXT2_PAIR, GradedDim
from .sheaf import CurveSheaf, LineBundle, ObjectSpec, Skyscraper


@lru_cache(maxsize=None)
def line_cohomology(d: DivisorClass) -> Tuple[int, int, int]:
    """(h0, h1, h2) of O(d), with h2 from Serre duality and h1 from Riemann-Roch."""
    v0 = decide(d)
    if not v0.is_decided:
        raise Undecidable(d)
    if h2_vanishes(d):
        h2 = 0
    else:
        v2 = decide(K() - d)
        if not v2.is_decided:
            raise Undecidable(K() - d)
        h2 = v2.h0
    h1 = v0.h0 + h2 - euler_char(d)
    assert h1 >= 0, f"negative h1 for {d}"
    return v0.h0, h1, h2


def generic_line_bundle_h(g: int, e: int) -> Tuple[int, int]:
    """(h0, h1) of a generic line bundle of degree e on a curve of genus g."""
    if g < 0:
        raise ValueError(f"Invalid genus {g}")
    h0 = max(e + 1 - g, 0)
    return h0, h0 - (e + 1 - g)


def curve_intersection_degree(d: DivisorClass, n: int) -> int:
    """D.C for C in |-nF|."""
    if n < 3:
        raise ValueError(f"Invalid curve multiple n = {n}")
    return -n * intersect(d, F())


def _line_line(a: LineBundle, b: LineBundle) -> GradedDim:
    h0, h1, h2 = line_cohomology(b.divisor - a.divisor)
    return GradedDim.of({0: h0, 1: h1, 2: h2})


def _line_sky(a: LineBundle, b: Skyscraper) -> GradedDim:
    return GradedDim.of({0: 1})


def _sky_line(a: Skyscraper, b: LineBundle) -> GradedDim:
    # Serre duality with k(x) tensor omega = k(x)
    return GradedDim.of({2: 1})


def _sky_sky(a: Skyscraper, b: Skyscraper) -> GradedDim:
    if a.label != b.label:
        return GradedDim.zero()
    # Koszul resolution of a point on a surface
    return GradedDim.of({0: 1, 1: 2, 2: 1})


def _line_curve(a: LineBundle, b: CurveSheaf) -> GradedDim:
    e = b.degree - curve_intersection_degree(a.divisor, b.n)
    h0, h1 = generic_line_bundle_h(b.genus, e)
    return GradedDim.of({0: h0, 1: h1})


def _curve_line(a: CurveSheaf, b: LineBundle) -> GradedDim:
    e = a.degree + curve_intersection_degree(K() - b.divisor, a.n)
    h0, h1 = generic_line_bundle_h(a.genus, e)
    return GradedDim.of({1: h1, 2: h0})


def same_curve(a: CurveSheaf, b: CurveSheaf) -> bool:
    return a.label == b.label and a.n == b.n and a.genus == b.genus


def _curve_curve(a: CurveSheaf, b: CurveSheaf) -> GradedDim:
    # chi(i_*L, i'_*L') = -C.C' = -n n' whatever the degrees
    if a == b:
        return GradedDim.of({0: 1, 1: EXT1, 2: EXT2}, relations=[sympy.Eq(EXT1 - EXT2, a.n ** 2 + 1)])
    hom0 = 0
    if same_curve(a, b):
        # Hom_C(L, L') with L' - L generic of degree deg L' - deg L
        hom0 = generic_line_bundle_h(a.genus, b.degree - a.degree)[0]
    return GradedDim.of({0: hom0, 1: EXT1_PAIR, 2: EXT2_PAIR},
                        relations=[sympy.Eq(EXT1_PAIR - EXT2_PAIR, a.n * b.n + hom0)])


_DISPATCH: Dict[Tuple[ObjectKind, ObjectKind], Callable[[ObjectSpec, ObjectSpec], GradedDim]] = {
    (ObjectKind.Line, ObjectKind.Line): _line_line,
    (ObjectKind.Line, ObjectKind.Sky): _line_sky,
    (ObjectKind.Sky, ObjectKind.Line): _sky_line,
    (ObjectKind.Sky, ObjectKind.Sky): _sky_sky,
    (ObjectKind.Line, ObjectKind.Curve): _line_curve,
    (ObjectKind.Curve, ObjectKind.Line): _curve_line,
    (ObjectKind.Curve, ObjectKind.Curve): _curve_curve,
}


def hom(a: ObjectSpec, b: ObjectSpec) -> GradedDim:
    rule = _DISPATCH.get((a.kind, b.kind))
    if rule is None:
        raise UnsupportedPair(a, b)
    result = rule(a, b)
    logging.debug(f"Hom*({a}, {b}) = {result}")
    return result


def h0(a: ObjectSpec, b: ObjectSpec) -> int:
    """dim Hom^0(a, b); for line bundles only |B - A| is consulted."""
    if a.kind == ObjectKind.Line and b.kind == ObjectKind.Line:
        verdict = decide(b.divisor - a.divisor)
        if not verdict.is_decided:
            raise Undecidable(b.divisor - a.divisor)
        return verdict.h0
    return hom(a, b)[0]


def is_generic(a: ObjectSpec, b: ObjectSpec) -> bool:
    """Whether hom(a, b) holds only for a generic line bundle on the curve."""
    return a.kind == ObjectKind.Curve or b.kind == ObjectKind.Curve
