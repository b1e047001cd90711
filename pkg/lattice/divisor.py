"""Divisor classes on the blowup of the plane at ten points.

Classes are stored in the (H, E_1..E_10) basis as ``h*H + sum(e[i]*E_i)``; the
``(d; m_1..m_10)`` notation of ``dH - sum(m_i E_i)`` is a view on top of it.
Python integers are unbounded, so no coordinate can wrap around.
"""
import json
import math
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from errors import LatticeError, ParseError
from objects import N_POINTS


@dataclass(frozen=True)
class DivisorClass:
    h: int
    e: Tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.e)
        if len(e) != N_POINTS:
            raise LatticeError(f"Invalid class: expected {N_POINTS} exceptional coefficients, got {len(e)}")
        object.__setattr__(self, "h", int(self.h))
        object.__setattr__(self, "e", e)

    @staticmethod
    def from_multiplicities(d: int, m: Sequence[int]) -> 'DivisorClass':
        return DivisorClass(h=d, e=tuple(-x for x in m))

    @staticmethod
    def homogeneous(d: int, m: int) -> 'DivisorClass':
        return DivisorClass(h=d, e=(-m,) * N_POINTS)

    @staticmethod
    def zero() -> 'DivisorClass':
        return DivisorClass(h=0, e=(0,) * N_POINTS)

    @staticmethod
    def from_json(js: str | Sequence[int]) -> 'DivisorClass':
        coords = json.loads(js) if isinstance(js, str) else list(js)
        if len(coords) != N_POINTS + 1:
            raise LatticeError(f"Invalid class array: expected {N_POINTS + 1} entries, got {len(coords)}")
        return DivisorClass(h=coords[0], e=tuple(coords[1:]))

    @staticmethod
    def parse(text: str) -> 'DivisorClass':
        return parse_divisor(text)

    @property
    def degree(self) -> int:
        return self.h

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(-x for x in self.e)

    def is_homogeneous(self) -> bool:
        return len(set(self.e)) == 1

    def to_json(self) -> List[int]:
        return [self.h, *self.e]

    def __add__(self, other: 'DivisorClass') -> 'DivisorClass':
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(h=self.h + other.h, e=tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other: 'DivisorClass') -> 'DivisorClass':
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(h=self.h - other.h, e=tuple(a - b for a, b in zip(self.e, other.e)))

    def __neg__(self) -> 'DivisorClass':
        return DivisorClass(h=-self.h, e=tuple(-a for a in self.e))

    def __mul__(self, k: int) -> 'DivisorClass':
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(h=k * self.h, e=tuple(k * a for a in self.e))

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        if self.h != 0:
            terms.append(_term(self.h, "H"))
        if self.is_homogeneous() and self.e[0] != 0:
            terms.append(_term(self.e[0], "*E"))
        else:
            for i, c in enumerate(self.e, start=1):
                if c != 0:
                    terms.append(_term(c, f"E{i}"))
        if len(terms) == 0:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s

    def __repr__(self):
        return f"DivisorClass({self})"


def _term(coefficient: int, symbol: str) -> str:
    sign = "-" if coefficient < 0 else "+"
    magnitude = abs(coefficient)
    if symbol == "*E":
        return f"{sign}{magnitude}*E"
    return f"{sign}{'' if magnitude == 1 else magnitude}{symbol}"


def H() -> DivisorClass:
    return DivisorClass(h=1, e=(0,) * N_POINTS)


def E(i: int) -> DivisorClass:
    _check_index(i)
    return DivisorClass(h=0, e=tuple(1 if j == i else 0 for j in range(1, N_POINTS + 1)))


def sum_E() -> DivisorClass:
    return DivisorClass(h=0, e=(1,) * N_POINTS)


def K() -> DivisorClass:
    return -3 * H() + sum_E()


def D(i: int) -> DivisorClass:
    return -6 * H() + 2 * sum_E() - E(i)


def F() -> DivisorClass:
    return -19 * H() + 6 * sum_E()


def _check_index(i: int):
    if not 1 <= i <= N_POINTS:
        raise LatticeError(f"Invalid point index {i}: must lie in 1..{N_POINTS}")


_NAMED = {
    "H": lambda idx: H(),
    "K": lambda idx: K(),
    "F": lambda idx: F(),
    "*E": lambda idx: sum_E(),
    "E": lambda idx: E(idx) if idx is not None else sum_E(),
    "D": lambda idx: D(idx),
}

_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(\*E|H|K|F|E|D)(\d*)\s*")


def parse_divisor(text: str) -> DivisorClass:
    """Parse "57H-18*E", "7H-4E1-2E2", "K-2F+D3" or a JSON array "[h, e1, ..., e10]"."""
    text = text.strip()
    if text.startswith("["):
        try:
            return DivisorClass.from_json(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid class array {text!r}: {e}")
    if text in ("", "0"):
        return DivisorClass.zero()
    total = DivisorClass.zero()
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"Invalid divisor notation {text!r} at position {pos}")
        sign, coefficient, symbol, index = match.groups()
        if pos > 0 and sign == "":
            raise ParseError(f"Missing sign before term {match.group(0).strip()!r} in {text!r}")
        if symbol == "D" and index == "":
            raise ParseError(f"D needs a point index in {text!r}")
        if symbol in ("H", "K", "F", "*E") and index != "":
            raise ParseError(f"{symbol} takes no index in {text!r}")
        k = int(coefficient) if coefficient != "" else 1
        if sign == "-":
            k = -k
        try:
            total = total + k * _NAMED[symbol](int(index) if index != "" else None)
        except LatticeError as e:
            raise ParseError(str(e))
        pos = match.end()
    return total


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    return a.h * b.h - sum(x * y for x, y in zip(a.e, b.e))


def euler_char(d: DivisorClass) -> int:
    twice = intersect(d, d) - intersect(d, K())
    # D.D - D.K = D.(D-K) is even by adjunction
    assert twice % 2 == 0, f"odd D.D - D.K for {d}"
    return 1 + twice // 2


def reflection_r(d: DivisorClass) -> DivisorClass:
    total = d.h * F()
    for i, c in enumerate(d.e, start=1):
        total = total + c * D(i)
    return total


def genus_of_multiple(n: int) -> int:
    c = -n * F()
    return (intersect(c, c) + intersect(c, K())) // 2 + 1


def symmetrize_full(d: DivisorClass) -> DivisorClass:
    """Formal sum of all images of ``d`` under the symmetric group on the ten points."""
    orbit_total = math.factorial(N_POINTS)
    per_point = math.factorial(N_POINTS - 1) * sum(d.e)
    return DivisorClass(h=orbit_total * d.h, e=(per_point,) * N_POINTS)


def clamp_exceptional(d: DivisorClass) -> DivisorClass:
    return DivisorClass(h=d.h, e=tuple(min(x, 0) for x in d.e))


def canonical_form(d: DivisorClass) -> DivisorClass:
    # multiplicities descending, i.e. e ascending
    return DivisorClass(h=d.h, e=tuple(sorted(d.e)))
