import math

import pytest
from hypothesis import given, strategies as st

from errors import LatticeError, ParseError
from lattice import DivisorClass, H, E, K, D, F, sum_E, parse_divisor, intersect, euler_char, reflection_r, \
    symmetrize_full, genus_of_multiple, clamp_exceptional, canonical_form, Permutation, permute, cremona_step, \
    cremona_reduce, reduction_chain

coords = st.integers(min_value=-60, max_value=60)
classes = st.builds(lambda h, e: DivisorClass(h=h, e=tuple(e)), coords, st.lists(coords, min_size=10, max_size=10))
permutations = st.permutations(list(range(1, 11))).map(Permutation.from_sequence)


def test_named_classes():
    assert intersect(K(), K()) == -1
    assert intersect(F(), F()) == 1
    assert intersect(F(), K()) == -3
    assert intersect(D(1), D(1)) == -1
    assert intersect(D(1), D(2)) == 0
    assert intersect(D(4), F()) == 0
    assert str(-3 * F()) == "57H-18*E"
    assert str(H() - E(1) - E(2)) == "H-E1-E2"


def test_euler_characteristics():
    assert euler_char(F()) == 3
    assert euler_char(-F()) == 0
    assert euler_char(-2 * F()) == 0
    assert euler_char(-3 * F()) == 1
    assert euler_char(-D(3)) == 0
    assert euler_char(DivisorClass.zero()) == 1
    assert euler_char(-K() + E(1)) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 10])
def test_genus_of_multiple(n):
    assert genus_of_multiple(n) == (n * n + 3 * n + 2) // 2


def test_genus_of_cubic_multiple():
    assert genus_of_multiple(3) == 10


def test_reflection_on_basis():
    assert reflection_r(H()) == F()
    assert reflection_r(E(7)) == D(7)
    assert reflection_r(K()) == K()


@given(classes, classes)
def test_reflection_is_isometry(a, b):
    assert intersect(reflection_r(a), reflection_r(b)) == intersect(a, b)


@given(classes)
def test_reflection_is_involution(a):
    assert reflection_r(reflection_r(a)) == a


@given(classes, classes, classes)
def test_intersection_is_bilinear(a, b, c):
    assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
    assert intersect(a, b) == intersect(b, a)


@given(classes, permutations)
def test_permutation_preserves_intersection_and_chi(a, s):
    assert intersect(permute(s, a), permute(s, a)) == intersect(a, a)
    assert euler_char(permute(s, a)) == euler_char(a)


@given(permutations, permutations)
def test_permutation_group_laws(s, t):
    assert s.compose(s.inverse()) == Permutation.identity()
    assert permute(s.compose(t), E(3)) == permute(s, permute(t, E(3)))


def test_invalid_permutation():
    with pytest.raises(LatticeError):
        Permutation((1, 1, 2, 3, 4, 5, 6, 7, 8, 9))


@given(classes, classes)
def test_cremona_step_is_isometry(a, b):
    assert intersect(cremona_step(a, 1, 2, 3), cremona_step(b, 1, 2, 3)) == intersect(a, b)
    assert cremona_step(K(), 4, 5, 6) == K()


def test_cremona_step_needs_distinct_points():
    with pytest.raises(LatticeError):
        cremona_step(H(), 1, 1, 2)


def test_cremona_chain_to_line_through_four_points():
    d = 7 * H() - 4 * E(1) - 2 * (sum_E() - E(1))
    chain = reduction_chain(d)
    assert len(chain) == 6
    assert [c.degree for c in chain] == [7, 6, 5, 4, 2, 1]
    assert chain[1] == DivisorClass.from_multiplicities(6, [3, 2, 2, 2, 2, 2, 2, 2, 1, 1])
    assert chain[-1] == H() - E(1) - E(2) - E(3) - E(4)
    reduced, log = cremona_reduce(d)
    assert reduced == chain[-1]
    assert [entry.rule for entry in log] == ["step"] * 5


def test_cremona_reduce_logs_clamp():
    reduced, log = cremona_reduce(H() + E(2))
    assert log[0].rule == "clamp"
    assert reduced == H()


def test_clamp_and_canonical_form():
    assert clamp_exceptional(3 * H() - sum_E() + 2 * E(1)) == 3 * H() - sum_E() + E(1)
    assert canonical_form(H() - E(5)).multiplicities == (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)


def test_symmetrize_full_slope():
    b = 19 * H() - 6 * sum_E() - E(2)
    s = symmetrize_full(b)
    assert s.is_homogeneous()
    assert s.degree * 61 == -s.e[0] * 190


@pytest.mark.parametrize("divisor, chi", [
    (D(1), 1),
    (D(6), 1),
    (2 * F(), 6),
    (F() - D(1), 2),
    (2 * F() - D(1), 5),
])
def test_euler_characteristic_table(divisor, chi):
    assert euler_char(divisor) == chi


@given(classes)
def test_reflection_preserves_chi(a):
    assert euler_char(reflection_r(a)) == euler_char(a)


@given(classes)
def test_cremona_step_preserves_chi(a):
    assert euler_char(cremona_step(a, 1, 2, 3)) == euler_char(a)


def test_symmetrize_full_of_exceptional_curve():
    assert symmetrize_full(E(1)) == math.factorial(9) * sum_E()
    assert symmetrize_full(H()) == math.factorial(10) * H()


@pytest.mark.parametrize("text, expected", [
    ("57H-18*E", -3 * F()),
    ("7H-4E1-2E2", 7 * H() - 4 * E(1) - 2 * E(2)),
    ("K-2F+D3", K() - 2 * F() + D(3)),
    ("-3F", -3 * F()),
    ("-K+E1", -K() + E(1)),
    ("0", DivisorClass.zero()),
    ("[57, -18, -18, -18, -18, -18, -18, -18, -18, -18, -18]", -3 * F()),
])
def test_parse_divisor(text, expected):
    assert parse_divisor(text) == expected


@given(classes)
def test_str_parses_back(a):
    assert parse_divisor(str(a)) == a


@pytest.mark.parametrize("text", ["7H-4E11", "2X", "H E1", "D", "[1, 2]", "3H2"])
def test_parse_errors(text):
    with pytest.raises((ParseError, LatticeError)):
        parse_divisor(text)


def test_wrong_arity():
    with pytest.raises(LatticeError):
        DivisorClass(h=1, e=(0, 0))
