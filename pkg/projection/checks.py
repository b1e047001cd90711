import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import sympy

from errors import Undecidable
from hom import EXT1, EXT2, CurveSheaf, GradedDim, LineBundle, ObjectSpec, Skyscraper, h0, hom, line_cohomology
from lattice import F
from objects import VerdictKind
from systems import SystemVerdict, decide
from .collection import ExceptionalCollection, generator_objects
from .numclass import NumClass, euler_pairing, numclass_of, project_numclass
from .page import E1Page, d1_rank_skyscraper, e1_page, einfty_total


@dataclass(frozen=True)
class NegativeHomReport:
    source: ObjectSpec
    target: ObjectSpec
    # (collection index, h0(F', E_i), h0(E_i, F)), 1-based, None where not needed
    terms: Tuple[Tuple[int, Optional[int], Optional[int]], ...]
    verdict: VerdictKind
    note: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict == VerdictKind.Empty

    def negative_degrees(self) -> Optional[GradedDim]:
        return GradedDim.zero() if self.certified else None

    def to_dict(self) -> Dict:
        return {
            "source": str(self.source),
            "target": str(self.target),
            "terms": [list(t) for t in self.terms],
            "negative_degrees": "0" if self.certified else "Unknown",
            "note": self.note,
        }


def negative_hom_check(fprime: ObjectSpec, f: ObjectSpec, coll: ExceptionalCollection) -> NegativeHomReport:
    """Hom^{<0} between projections of two sheaves.

    The only contribution comes from the kernel of the sum over i of
    Hom^0(F', E_i) (x) Hom^0(E_i, F) -> Hom^0(F', F); it vanishes when every term does,
    and when the only term is the identity of O composed with itself.
    """
    terms = list()
    nonzero = list()
    for i, e in enumerate(coll, start=1):
        try:
            left = h0(fprime, e)
            right = h0(e, f) if left != 0 else None
        except Undecidable as err:
            logging.info(f"negative check {fprime} -> {f}: {err}")
            return NegativeHomReport(fprime, f, tuple(terms), VerdictKind.Unknown, note=str(err))
        terms.append((i, left, right))
        if left != 0 and right != 0:
            nonzero.append(e)
    if len(nonzero) == 0:
        return NegativeHomReport(fprime, f, tuple(terms), VerdictKind.Empty, note="all terms vanish")
    if len(nonzero) == 1 and fprime == f == nonzero[0]:
        return NegativeHomReport(fprime, f, tuple(terms), VerdictKind.Empty,
                                 note="identity composition has trivial kernel")
    return NegativeHomReport(fprime, f, tuple(terms), VerdictKind.Unknown, note=f"{len(nonzero)} nonzero terms")


def generator_negative_report(use_line_class: bool = False) -> List[NegativeHomReport]:
    coll = ExceptionalCollection.default()
    objects = generator_objects(use_line_class)
    return [negative_hom_check(a, b, coll) for a in objects for b in objects]


@dataclass(frozen=True)
class CurveProjectionReport:
    n: int
    h2_of_f: int
    h1_multiplicity: int
    h0_quotient: Tuple[int, int]
    class_identity: NumClass
    projected: NumClass

    @property
    def ok(self) -> bool:
        return self.class_identity.is_zero() and self.projected.is_zero()

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "h2(F)": self.h2_of_f,
            "H^1 = O(-2F)^": self.h1_multiplicity,
            "H^0 / G = O(-F)^a + O(-2F)^b": list(self.h0_quotient),
            "[H^0] - [H^1]": str(self.class_identity),
            "projected [G]": str(self.projected),
            "generic": True,
            "ok": self.ok,
        }


def curve_projection_report(n: int) -> CurveProjectionReport:
    """The two cohomology sheaves of the projection of G = i_*L, L generic of degree g - 1."""
    g = CurveSheaf(n=n)
    minus_f, minus_2f = LineBundle(-F()), LineBundle(-2 * F())
    h2_of_f = line_cohomology(F())[2]
    # h^1(G(F)) = Hom^1(O(-F), G)
    h1_multiplicity = h2_of_f * hom(minus_f, g)[1]
    quotient = (hom(minus_f, g)[1], hom(minus_2f, g)[1])
    identity = (numclass_of(g)
                + quotient[0] * numclass_of(minus_f)
                + quotient[1] * numclass_of(minus_2f)
                - h1_multiplicity * numclass_of(minus_2f))
    return CurveProjectionReport(n=n, h2_of_f=h2_of_f, h1_multiplicity=h1_multiplicity, h0_quotient=quotient,
                                 class_identity=identity,
                                 projected=project_numclass(numclass_of(g), ExceptionalCollection.default()))


@dataclass(frozen=True)
class SpectralReport:
    page: E1Page
    d1_ranks: Dict = field(default_factory=dict)
    totals: GradedDim = field(default_factory=GradedDim)
    relations: Tuple = field(default_factory=tuple)
    normal: Optional['NormalBundleReport'] = None

    @property
    def alternating_sum(self):
        return self.totals.alternating_sum()

    def to_dict(self) -> Dict:
        d = {
            "page": self.page.to_dict(),
            "d1_ranks": {f"{p},{q}": r for (p, q), r in self.d1_ranks.items()},
            "totals": self.totals.to_dict(),
            "alternating_sum": str(self.alternating_sum),
            "relations": [f"{r.lhs} = {r.rhs}" for r in self.relations],
        }
        if self.normal is not None:
            d["normal_bundle"] = self.normal.to_dict()
        return d


def skyscraper_report(same_point: bool, coll: ExceptionalCollection | None = None) -> SpectralReport:
    coll = ExceptionalCollection.default() if coll is None else coll
    x, y = Skyscraper("x"), Skyscraper("x" if same_point else "y")
    page = e1_page(x, y, coll)
    rank = d1_rank_skyscraper(same_point, coll)
    # the evaluation map from column -1 onto Hom^2(k(x), k(x))
    ranks = {(-1, 2): rank} if rank > 0 else dict()
    return SpectralReport(page=page, d1_ranks=ranks, totals=einfty_total(page, ranks))


def curve_ext_relation(n: int) -> sympy.Eq:
    """ext1 - ext2 from the Euler pairing chi(G, G) = -n^2."""
    g = numclass_of(CurveSheaf(n=n))
    return sympy.Eq(EXT1 - EXT2, 1 - euler_pairing(g, g))


def curve_report(n: int, coll: ExceptionalCollection | None = None) -> SpectralReport:
    coll = ExceptionalCollection.default() if coll is None else coll
    g = CurveSheaf(n=n)
    page = e1_page(g, g, coll)
    return SpectralReport(page=page, totals=einfty_total(page), relations=(curve_ext_relation(n),),
                          normal=normal_bundle_report(n))


@dataclass(frozen=True)
class NormalBundleReport:
    """0 -> H^1(O_C) -> Ext^1(i_*L, i_*L) -> H^0(N_C) -> 0 for C in |-nF|.

    H^1(O_X) = 0 gives h^0(N_C) = h^0(O_X(C)) - 1 = dim |-nF|.
    """
    n: int
    genus: int
    system: SystemVerdict
    relation: sympy.Eq

    @property
    def h0_normal(self) -> Optional[int]:
        return self.system.projective_dimension

    @property
    def ext1(self) -> Optional[int]:
        return None if self.h0_normal is None else self.genus + self.h0_normal

    @property
    def ext2(self) -> Optional[int]:
        if self.ext1 is None:
            return None
        return int(GradedDim.of({1: EXT1, 2: EXT2}, relations=[self.relation, sympy.Eq(EXT1, self.ext1)])
                   .resolve(EXT2))

    @property
    def ok(self) -> bool:
        # undecided |-nF| leaves both parameters open
        if self.h0_normal is None:
            return True
        return self.h0_normal >= 0 and self.ext2 >= 0

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "h1(O_C)": self.genus,
            "h0(N_C) = dim |-nF|": self.h0_normal,
            "|-nF|": self.system.to_dict()["verdict"],
            "ext1": self.ext1,
            "ext2": self.ext2,
            "ok": self.ok,
        }


def normal_bundle_report(n: int) -> NormalBundleReport:
    """Pins ext1 = g + h^0(N_C) and ext2 through the Euler-pairing relation."""
    curve = CurveSheaf(n=n)
    return NormalBundleReport(n=n, genus=curve.genus, system=decide(-n * F()), relation=curve_ext_relation(n))
