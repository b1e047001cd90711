import logging
import math
import multiprocessing
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympy.utilities.iterables import partitions

from errors import EmptyBox
from lattice import DivisorClass, E, F, H, intersect, symmetrize_full
from objects import N_POINTS, VerdictKind
from .decide import decide
from .slope import EMPTY_SLOPE
from .verdict import SystemVerdict

Case = Tuple[int, int, int]
# coefficients of (1, d, m, m')
LinearForm = Tuple[int, int, int, int]


def _evaluate(form: LinearForm, d: int, m: int, mp: int) -> int:
    return form[0] + form[1] * d + form[2] * m + form[3] * mp


@dataclass(frozen=True)
class RatioConstraint:
    """numerator/denominator >= threshold over the box.

    Where the denominator is not positive the candidate carries no multiplicity in
    the symmetrized sense, and it passes iff the numerator (its degree) is >= 0.
    """
    numerator: LinearForm
    denominator: LinearForm
    threshold: Fraction = EMPTY_SLOPE

    def holds(self, d: int, m: int, mp: int) -> bool:
        num = _evaluate(self.numerator, d, m, mp)
        den = _evaluate(self.denominator, d, m, mp)
        if den <= 0:
            return num >= 0
        return num * self.threshold.denominator >= self.threshold.numerator * den


@dataclass(frozen=True)
class CaseConstraint:
    d_range: Tuple[int, int]
    m_range: Tuple[int, int]
    # bounds on m + m' (the multiplicity at the special point); None fixes m' = 0
    point_range: Optional[Tuple[int, int]] = None
    ratios: Tuple[RatioConstraint, ...] = field(default_factory=tuple)
    excluded: Tuple[Case, ...] = field(default_factory=tuple)

    def is_empty(self) -> bool:
        ranges = [self.d_range, self.m_range] + ([self.point_range] if self.point_range is not None else [])
        return any(lo > hi for lo, hi in ranges)

    def candidates_at(self, d: int) -> List[Case]:
        found = list()
        for m in range(self.m_range[0], self.m_range[1] + 1):
            if self.point_range is None:
                mps = range(0, 1)
            else:
                mps = range(self.point_range[0] - m, self.point_range[1] - m + 1)
            for mp in mps:
                if (d, m, mp) in self.excluded:
                    continue
                if all(r.holds(d, m, mp) for r in self.ratios):
                    found.append((d, m, mp))
        return found


@dataclass(frozen=True)
class SplitShape:
    """A class dH - M*sum(E) - M'E_i seen from the special point i."""
    degree: int
    multiplicity: int
    extra: int
    special_index: int

    @staticmethod
    def of(total: DivisorClass) -> 'SplitShape':
        m = total.multiplicities
        common, _ = Counter(m).most_common(1)[0]
        others = [i for i, x in enumerate(m, start=1) if x != common]
        if len(others) > 1:
            raise ValueError(f"Invalid split total {total}: more than one special point")
        if len(others) == 0:
            return SplitShape(total.degree, common, 0, 1)
        i = others[0]
        return SplitShape(total.degree, common, m[i - 1] - common, i)

    def part(self, case: Case) -> DivisorClass:
        d, m, mp = case
        return DivisorClass.from_multiplicities(
            d, [m + (mp if i == self.special_index else 0) for i in range(1, N_POINTS + 1)])


def homogeneous_split(total: DivisorClass) -> CaseConstraint:
    shape = SplitShape.of(total)
    if shape.extra != 0:
        raise ValueError(f"Invalid homogeneous split total {total}")
    dd, mm = shape.degree, shape.multiplicity
    return CaseConstraint(
        d_range=(0, dd),
        m_range=(0, mm),
        ratios=(
            RatioConstraint(numerator=(0, 1, 0, 0), denominator=(0, 0, 1, 0)),
            RatioConstraint(numerator=(dd, -1, 0, 0), denominator=(mm, 0, -1, 0)),
        ),
        excluded=((0, 0, 0), (dd, mm, 0)),
    )


def point_split(total: DivisorClass,
                d_range: Optional[Tuple[int, int]] = None,
                m_range: Optional[Tuple[int, int]] = None,
                point_range: Optional[Tuple[int, int]] = None) -> CaseConstraint:
    """Splits B = dH - m*sum(E) - m'E_i tested on their symmetrizations 10d / (10m + m')."""
    shape = SplitShape.of(total)
    dd, mm, mp = shape.degree, shape.multiplicity, shape.extra
    return CaseConstraint(
        d_range=d_range if d_range is not None else (0, dd),
        m_range=m_range if m_range is not None else (0, mm),
        point_range=point_range if point_range is not None else (0, mm + mp),
        ratios=(
            RatioConstraint(numerator=(0, 10, 0, 0), denominator=(0, 0, 10, 1)),
            RatioConstraint(numerator=(10 * dd, -10, 0, 0), denominator=(10 * mm + mp, 0, -10, -1)),
        ),
        excluded=((0, 0, 0), (dd, mm, mp)),
    )


# search boxes (d, m, m + m') for the point-split totals K - F + D_i and K - 2F + D_i
SPLIT_BOXES: Dict[int, Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]] = {
    1: ((0, 5), (0, 3), (0, 4)),
    2: ((0, 14), (0, 9), (0, 10)),
}

_BOX_KEYS = {"d": 0, "m": 1, "mp": 2}


def parse_box(text: str) -> Tuple[Tuple[int, int], ...]:
    """Parse "d=0..14,m=0..9,mp=0..10"; missing keys come back as None."""
    box: List[Optional[Tuple[int, int]]] = [None, None, None]
    for part in text.split(","):
        key, _, span = part.strip().partition("=")
        lo, sep, hi = span.partition("..")
        if key not in _BOX_KEYS or sep == "":
            raise ValueError(f"Invalid box component {part!r}. Expected e.g. d=0..14")
        box[_BOX_KEYS[key]] = (int(lo), int(hi))
    return tuple(box)


def _scan_degree(args) -> List[Case]:
    constraint, d = args
    return constraint.candidates_at(d)


def enumerate_split_cases(total: DivisorClass, constraint: CaseConstraint, workers: int = 1) -> List[Case]:
    if constraint.is_empty():
        raise EmptyBox(f"Empty search box {constraint.d_range}, {constraint.m_range}, {constraint.point_range}")
    degrees = range(constraint.d_range[0], constraint.d_range[1] + 1)
    tasks = [(constraint, d) for d in degrees]
    if workers > 1:
        with multiprocessing.Pool(processes=min(workers, len(tasks))) as pool:
            chunks = pool.map(_scan_degree, tasks)
    else:
        chunks = [_scan_degree(task) for task in tasks]
    cases = sorted(case for chunk in chunks for case in chunk)
    logging.info(f"split cases of {total}: {cases}")
    return cases


@dataclass(frozen=True)
class SplitRefutation:
    case: Case
    part: DivisorClass
    complement: DivisorClass
    part_verdict: SystemVerdict
    complement_verdict: SystemVerdict

    @property
    def refuted(self) -> bool:
        return self.part_verdict.is_empty or self.complement_verdict.is_empty

    def to_dict(self) -> Dict:
        return {
            "case": list(self.case),
            "part": str(self.part),
            "complement": str(self.complement),
            "part_verdict": self.part_verdict.to_dict(),
            "complement_verdict": self.complement_verdict.to_dict(),
            "refuted": self.refuted,
        }


def refute_split(total: DivisorClass, case: Case) -> SplitRefutation:
    part = SplitShape.of(total).part(case)
    complement = total - part
    return SplitRefutation(case=case, part=part, complement=complement,
                           part_verdict=decide(part), complement_verdict=decide(complement))


def orbit_size(b: DivisorClass) -> int:
    size = math.factorial(N_POINTS)
    for count in Counter(b.e).values():
        size //= math.factorial(count)
    return size


def all_orbit_sizes(n: int = N_POINTS) -> List[int]:
    sizes = set()
    for p in partitions(n):
        size = math.factorial(n)
        for part, count in p.items():
            size //= math.factorial(part) ** count
        sizes.add(size)
    return sorted(sizes)


@dataclass(frozen=True)
class OrbitReport:
    orbit_size: int
    union: DivisorClass
    total: DivisorClass
    degree: int
    realizable_divisors: Tuple[int, ...]

    @property
    def union_matches_total(self) -> bool:
        return self.union == self.total

    @property
    def degree_consistent(self) -> bool:
        return self.orbit_size * self.degree == self.total.degree

    def to_dict(self) -> Dict:
        return {
            "orbit_size": self.orbit_size,
            "union": str(self.union),
            "degree": self.degree,
            "total_degree": self.total.degree,
            "union_matches_total": self.union_matches_total,
            "degree_consistent": self.degree_consistent,
            "realizable_divisors": list(self.realizable_divisors),
        }


def orbit_divisor_argument(b: DivisorClass, total: DivisorClass) -> OrbitReport:
    """Sum of the distinct images of ``b`` under permutations of the points."""
    size = orbit_size(b)
    counts = Counter(b.e)
    # each point sees value v in size * count(v) / 10 of the images
    per_point = sum(v * (size * c // N_POINTS) for v, c in counts.items())
    union = DivisorClass(h=size * b.degree, e=(per_point,) * N_POINTS)
    sizes = set(all_orbit_sizes())
    divisors = [k for k in range(1, abs(total.degree) + 1) if total.degree % k == 0]
    return OrbitReport(orbit_size=size, union=union, total=total, degree=b.degree,
                       realizable_divisors=tuple(k for k in divisors if k in sizes))


@dataclass(frozen=True)
class AmpleReport:
    slope_lhs: int
    slope_rhs: int
    minus_f_square: int
    minus_f_dot_e: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.slope_lhs < self.slope_rhs and self.minus_f_square > 0 and min(self.minus_f_dot_e) > 0

    def to_dict(self) -> Dict:
        return {
            "7210*6 < 2280*19": [self.slope_lhs, self.slope_rhs, self.slope_lhs < self.slope_rhs],
            "(-F)^2": self.minus_f_square,
            "-F.E_i": list(self.minus_f_dot_e),
            "ok": self.ok,
        }


def ample_slope_check() -> AmpleReport:
    """Effective B = aH - sum(b_i E_i) has 10a/sum(b) >= 2280/721, so sum(b)/a <= 7210/2280 < 19/6.

    The symmetrization of B is homogeneous of degree 10!a and multiplicity 9!sum(b), and
    effective, so it cannot lie below the empty slope.
    """
    minus_f = -F()
    # 10!/9!: degree gained per unit of total multiplicity under symmetrization
    ratio = symmetrize_full(H()).degree // symmetrize_full(E(1)).e[0]
    return AmpleReport(
        slope_lhs=ratio * EMPTY_SLOPE.denominator * minus_f.multiplicities[0],
        slope_rhs=EMPTY_SLOPE.numerator * minus_f.degree,
        minus_f_square=intersect(minus_f, minus_f),
        minus_f_dot_e=tuple(intersect(minus_f, E(i)) for i in range(1, N_POINTS + 1)),
    )


@dataclass(frozen=True)
class UniquenessReport:
    verdict: SystemVerdict
    splits: Tuple[SplitRefutation, ...]
    orbit: OrbitReport
    excluded_orbit_sizes: Tuple[int, ...]
    one_point_heavier: SystemVerdict

    @property
    def ok(self) -> bool:
        return (self.verdict.outcome == (VerdictKind.Dim, 0)
                and all(s.refuted for s in self.splits)
                and self.orbit.degree_consistent
                and len(self.excluded_orbit_sizes) == 0
                and self.one_point_heavier.is_empty)

    def to_dict(self) -> Dict:
        return {
            "-3F": self.verdict.to_dict(),
            "splits": [s.to_dict() for s in self.splits],
            "orbit": self.orbit.to_dict(),
            "orbit_sizes_dividing_57": list(self.excluded_orbit_sizes),
            "57H-18*E-E1": self.one_point_heavier.to_dict(),
            "ok": self.ok,
        }


def uniqueness_report() -> UniquenessReport:
    """|-3F| is a single curve; no split into effective pieces, no orbit of size 3, 19 or 57."""
    minus_3f = -3 * F()
    splits = tuple(refute_split(minus_3f, case)
                   for case in enumerate_split_cases(minus_3f, homogeneous_split(minus_3f)))
    nontrivial = tuple(k for k in orbit_divisor_argument(minus_3f, minus_3f).realizable_divisors if k > 1)
    return UniquenessReport(
        verdict=decide(minus_3f),
        splits=splits,
        orbit=orbit_divisor_argument(minus_3f, minus_3f),
        excluded_orbit_sizes=nontrivial,
        one_point_heavier=decide(minus_3f - E(1)),
    )
