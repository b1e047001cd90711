from dataclasses import dataclass
from typing import Dict

from lattice import DivisorClass, F, K, euler_char, intersect
from objects import ObjectKind


@dataclass(frozen=True)
class NumClass:
    """(rank, c1, chi) coordinates in the numerical Grothendieck group."""
    rank: int
    c1: DivisorClass
    chi: int

    @staticmethod
    def zero() -> 'NumClass':
        return NumClass(rank=0, c1=DivisorClass.zero(), chi=0)

    def is_zero(self) -> bool:
        return self == NumClass.zero()

    def __add__(self, other: 'NumClass') -> 'NumClass':
        return NumClass(self.rank + other.rank, self.c1 + other.c1, self.chi + other.chi)

    def __sub__(self, other: 'NumClass') -> 'NumClass':
        return NumClass(self.rank - other.rank, self.c1 - other.c1, self.chi - other.chi)

    def __neg__(self) -> 'NumClass':
        return NumClass(-self.rank, -self.c1, -self.chi)

    def __mul__(self, k: int) -> 'NumClass':
        if not isinstance(k, int):
            return NotImplemented
        return NumClass(k * self.rank, k * self.c1, k * self.chi)

    __rmul__ = __mul__

    def to_dict(self) -> Dict:
        return {"rank": self.rank, "c1": str(self.c1), "chi": self.chi}

    def __str__(self):
        return f"({self.rank}, {self.c1}, {self.chi})"


def line_class(d: DivisorClass) -> NumClass:
    return NumClass(rank=1, c1=d, chi=euler_char(d))


def point_class() -> NumClass:
    return NumClass(rank=0, c1=DivisorClass.zero(), chi=1)


def numclass_of(obj) -> NumClass:
    if obj.kind == ObjectKind.Line:
        return line_class(obj.divisor)
    if obj.kind == ObjectKind.Sky:
        return point_class()
    # pushforward from C in |-nF|: chi(C, L) = deg L + 1 - g
    return NumClass(rank=0, c1=-obj.n * F(), chi=obj.degree + 1 - obj.genus)


def euler_pairing(v: NumClass, w: NumClass) -> int:
    """sum (-1)^i dim Hom^i(v, w) by Riemann-Roch on the surface."""
    return (v.rank * w.chi + w.rank * v.chi - v.rank * w.rank
            + w.rank * intersect(v.c1, K()) - intersect(v.c1, w.c1))


def project_numclass(k: NumClass, coll) -> NumClass:
    """Left mutation past the collection, last object first."""
    v = k
    for obj in reversed(tuple(coll)):
        e = numclass_of(obj)
        v = v - euler_pairing(e, v) * e
    return v
