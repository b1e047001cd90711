import pytest
import sympy
from hypothesis import given, strategies as st

from deformation import t1_labels, t2_labels, product, derived_product, symmetrized, b_from_xi, b_monomials, \
    product_matrix, QuadricIdeal, hull_quadrics, hull_quadrics_from_table, quadratic_dimension_bound, exact_rank, \
    X_VARS, Y_VARS, composition_criterion, composition_classes, special_locus_report, quadratic_monomials
from lattice import K, F
from objects import VerdictKind

b_labels = st.integers(min_value=1, max_value=12).map(lambda i: f"b{i}")


def test_labels():
    assert len(t1_labels()) == 14
    assert len(t2_labels()) == 78
    assert t2_labels()[0] == "xi1xi2"
    assert len(b_monomials()) == 78
    assert b_from_xi(4) == {4: 1, 13: -1}


def test_products():
    assert product("b1", "b2") == {"xi1xi2": 1, "xi1xi13": -1}
    assert product("b3", "b3") == {"xi3xi13": -1}
    assert product("b5", "b2") == {"xi5xi13": -1}
    assert product("s1", "b2") == {}
    assert product("s1", "s2") == {}
    assert symmetrized("b1", "b2") == {"xi1xi2": 1, "xi1xi13": -1, "xi2xi13": -1}
    with pytest.raises(ValueError):
        product("b13", "b1")


@given(b_labels, b_labels)
def test_products_follow_xi_expansion(u, v):
    assert product(u, v) == derived_product(u, v)


def test_products_span_t2():
    assert exact_rank(product_matrix()) == 78


def test_hull_quadrics():
    ideal = hull_quadrics()
    x = X_VARS
    assert ideal.as_dict()["f1"] == 2 * x[0] ** 2
    assert sympy.expand(ideal.as_dict()["f3"] - (2 * x[2] ** 2 + x[0] * x[2] + x[1] * x[2])) == 0
    assert ideal.as_dict()["f4,9"] == x[3] * x[8]
    assert ideal.rank() == 78
    assert ideal.contains(x[4] * x[6])
    assert ideal.contains(x[11] ** 2)
    assert not ideal.contains(Y_VARS[0] * Y_VARS[1])
    assert not ideal.contains(Y_VARS[0] ** 2)


def test_hull_quadrics_match_table():
    assert hull_quadrics().equals(hull_quadrics_from_table())
    assert not hull_quadrics().equals(QuadricIdeal(tuple(hull_quadrics().generators[1:])))


def test_hull_quadrics_span_with_trailing_cross_terms():
    # cross terms x_j x_k with k > j instead of k < j give the same span
    x = X_VARS
    trailing = list()
    for i in range(1, 13):
        for j in range(i, 13):
            if i == j:
                f = 2 * x[j - 1] ** 2 + sum((x[j - 1] * x[k - 1] for k in range(j + 1, 13)), sympy.Integer(0))
            else:
                f = x[i - 1] * x[j - 1]
            trailing.append((f"f{i},{j}", sympy.expand(f)))
    ours = hull_quadrics().coefficient_rows(quadratic_monomials())
    theirs = QuadricIdeal(tuple(trailing)).coefficient_rows(quadratic_monomials())
    assert exact_rank(ours) == exact_rank(theirs) == exact_rank(ours + theirs) == 78


def test_dimension_bound():
    bound = quadratic_dimension_bound()
    assert bound.rank == 78
    assert bound.product_rank == 78
    assert bound.x_monomials == 78
    assert bound.surviving == ("y0", "y1")
    assert bound.ok
    assert bound.to_dict()["x_directions_obstructed_at_order_2"]


def test_composition_criterion():
    c = composition_criterion(1, 2)
    assert c.divisor == K() - F()
    assert c.verdict.outcome == (VerdictKind.Dim, 2)
    assert composition_criterion(1, 13).divisor == K() - 2 * F()
    with pytest.raises(ValueError):
        composition_criterion(2, 1)
    with pytest.raises(ValueError):
        composition_criterion(1, 14)
    assert len(composition_classes()) == 78


def test_special_locus():
    report = special_locus_report()
    assert [e.name for e in report.divisorial] == [f"-K+E{i}" for i in range(1, 11)]
    assert len(report.entries) == 32
    by_name = {e.name: e for e in report.entries}
    assert by_name["K-F"].verdict.outcome == (VerdictKind.Dim, 2)
    assert by_name["K-2F"].verdict.outcome == (VerdictKind.Dim, 5)
    assert [s.case for s in by_name["K-2F"].splits] == [(16, 5, 0), (19, 6, 0)]
    assert by_name["K-F+D4"].verdict.outcome == (VerdictKind.Dim, 1)
    assert len(by_name["K-2F+D7"].splits) == 12
    assert all(len(chain) >= 1 for chain in by_name["K-2F+D7"].chains)
    assert report.to_dict()["unknowns"] == []
    assert report.ok
