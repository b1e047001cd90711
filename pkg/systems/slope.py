from fractions import Fraction

from lattice import DivisorClass, K

# |dH - m*E| is empty below this slope and non-special at or above the second one
EMPTY_SLOPE = Fraction(2280, 721)
NONSPECIAL_SLOPE = Fraction(174, 55)
STANDARD_FORM_MAX_MULTIPLICITY = 11


def at_least(numerator: int, denominator: int, threshold: Fraction) -> bool:
    """numerator/denominator >= threshold for denominator > 0, by cross-multiplication."""
    return numerator * threshold.denominator >= threshold.numerator * denominator


def h2_vanishes(d: DivisorClass) -> bool:
    return (K() - d).h < 0


def empty_by_slope(d: int, m: int) -> bool:
    if m <= 0 or d < 0:
        raise ValueError(f"Invalid homogeneous system ({d}, {m}): need d >= 0 and m > 0")
    return not at_least(d, m, EMPTY_SLOPE)


def nonspecial_by_slope(d: int, m: int) -> bool:
    if m <= 0:
        raise ValueError(f"Invalid homogeneous system ({d}, {m}): need m > 0")
    return at_least(d, m, NONSPECIAL_SLOPE)


def nonspecial_standard_form(d: DivisorClass) -> bool:
    m = sorted(d.multiplicities, reverse=True)
    if m[-1] < 0:
        raise ValueError(f"Invalid class {d}: standard form needs non-negative multiplicities")
    return d.degree >= m[0] + m[1] + m[2] and m[0] <= STANDARD_FORM_MAX_MULTIPLICITY
