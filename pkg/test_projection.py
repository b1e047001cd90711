import pytest
from hypothesis import given, settings, strategies as st

from errors import DegeneracyUnprovable, InvalidRank, NotExceptional
from hom import EXT1, EXT2, CurveSheaf, LineBundle, Skyscraper, euler_characteristic, hom
from lattice import DivisorClass, F, D, K, H, E
from projection import ExceptionalCollection, generator_objects, is_exceptional, NumClass, numclass_of, line_class, \
    point_class, euler_pairing, project_numclass, E1Page, e1_page, e1_page_right_adjoint, einfty_total, \
    d1_rank_skyscraper, negative_hom_check, curve_projection_report, skyscraper_report, curve_report, \
    curve_ext_relation, normal_bundle_report

ns = st.integers(min_value=3, max_value=8)


@pytest.fixture(scope="module")
def coll():
    return ExceptionalCollection.default()


def test_default_collection(coll):
    assert len(coll) == 13
    assert coll[0] == LineBundle(-2 * F())
    assert coll[-1] == LineBundle(DivisorClass.zero())
    assert coll.forward_homs[(0, 1)].as_dict() == {2: 3}


def test_not_exceptional():
    with pytest.raises(NotExceptional) as e:
        ExceptionalCollection((LineBundle(DivisorClass.zero()), LineBundle(-F())))
    assert e.value.pair == (2, 1)
    assert ExceptionalCollection.empty().forward_homs == {}


def test_generator_lists():
    assert not is_exceptional(generator_objects())
    assert is_exceptional(generator_objects(use_line_class=True))
    assert len(generator_objects()) == 13


def test_euler_pairing_agrees_with_hom(coll):
    for a in coll:
        for b in coll:
            assert euler_pairing(numclass_of(a), numclass_of(b)) == euler_characteristic(hom(a, b))
    assert euler_pairing(line_class(DivisorClass.zero()), point_class()) == 1
    assert euler_pairing(point_class(), line_class(DivisorClass.zero())) == 1
    assert euler_pairing(point_class(), point_class()) == 0


@given(ns)
def test_curve_class_pairings(n):
    g = numclass_of(CurveSheaf(n))
    assert euler_pairing(g, g) == -n * n
    assert euler_pairing(line_class(-F()), g) == -n
    assert euler_pairing(g, line_class(-D(1))) == 3 * n


@given(ns)
def test_numerically_trivial_projections(n):
    coll = ExceptionalCollection.default()
    assert project_numclass(point_class(), coll).is_zero()
    assert project_numclass(numclass_of(CurveSheaf(n)), coll).is_zero()


def test_projection_kills_the_collection(coll):
    for obj in coll:
        assert project_numclass(numclass_of(obj), coll).is_zero()
    # the collection is full, so every numerical class projects to zero
    assert project_numclass(line_class(H()), coll).is_zero()


def test_numclass_arithmetic():
    v = line_class(-F())
    assert v - v == NumClass.zero()
    assert 2 * v == v + v
    assert -v + v == NumClass.zero()
    assert v.to_dict() == {"rank": 1, "c1": "19H-6*E", "chi": 0}


def test_skyscraper_page(coll):
    page = e1_page(Skyscraper("x"), Skyscraper("x"), coll)
    assert page.as_dict() == {(0, 0): 1, (0, 1): 2, (0, 2): 1, (-1, 2): 13, (-2, 4): 92, (-3, 6): 139, (-4, 8): 60}
    assert page.columns() == [-4, -3, -2, -1, 0]
    distinct = e1_page(Skyscraper("x"), Skyscraper("y"), coll)
    assert distinct[(0, 0)] == 0
    assert distinct[(-3, 6)] == 139


def test_skyscraper_reports():
    same = skyscraper_report(True)
    assert [same.totals[k] for k in range(5)] == [1, 14, 92, 139, 60]
    assert same.d1_ranks == {(-1, 2): 1}
    assert same.alternating_sum == 0
    distinct = skyscraper_report(False)
    assert [distinct.totals[k] for k in range(5)] == [0, 13, 92, 139, 60]
    assert distinct.alternating_sum == 0


def test_right_adjoint_mirrors_left(coll):
    x = Skyscraper("x")
    left = e1_page(x, x, coll).as_dict()
    right = e1_page_right_adjoint(x, x, coll).as_dict()
    assert right == {(-p, q): v for (p, q), v in left.items()}


def test_right_adjoint_of_structure_sheaf():
    o = LineBundle(DivisorClass.zero())
    page = e1_page_right_adjoint(o, o, ExceptionalCollection.single(o))
    assert page.as_dict() == {(0, 0): 1}


def test_empty_collection_page():
    x = Skyscraper("x")
    page = e1_page(x, x, ExceptionalCollection.empty())
    assert page.columns() == [0]
    assert d1_rank_skyscraper(True, ExceptionalCollection.empty()) == 0
    assert d1_rank_skyscraper(False) == 0


@given(ns)
@settings(max_examples=6, deadline=None)
def test_curve_page(n):
    report = curve_report(n)
    page = report.page
    assert page[(-1, 3)] == 4 * n * n
    assert page[(-2, 5)] == 3 * n * n
    assert [report.totals[k] for k in range(4)] == [1, EXT1, EXT2 + 4 * n * n, 3 * n * n]
    assert report.alternating_sum == 0
    assert curve_ext_relation(n).rhs == n * n + 1


@given(ns)
@settings(max_examples=6, deadline=None)
def test_curve_cohomology_sheaves(n):
    report = curve_projection_report(n)
    assert report.h2_of_f == 3
    assert report.h1_multiplicity == 3 * n
    assert report.h0_quotient == (n, 2 * n)
    assert report.ok


def test_normal_bundle_of_cubic_multiple():
    report = normal_bundle_report(3)
    assert (report.genus, report.h0_normal) == (10, 0)
    assert (report.ext1, report.ext2) == (10, 0)
    assert report.ok
    assert curve_report(3).to_dict()["normal_bundle"]["ext1"] == 10


@pytest.mark.parametrize("n", [4, 5, 6])
def test_normal_bundle_pins_ext_parameters(n):
    report = normal_bundle_report(n)
    # dim |-nF| = chi(-nF) - 1 = (n^2 - 3n) / 2
    assert report.h0_normal == (n * n - 3 * n) // 2
    assert report.ext1 == n * n + 1
    assert report.ext2 == 0
    assert report.ok


def test_einfty_rejects_bad_rank():
    page = E1Page.of({(-1, 2): 1, (0, 2): 1})
    with pytest.raises(InvalidRank):
        einfty_total(page, {(-1, 2): 2})


def test_einfty_flags_possible_differentials():
    page = E1Page.of({(-2, 3): 1, (0, 2): 1})
    with pytest.raises(DegeneracyUnprovable) as e:
        einfty_total(page)
    assert e.value.connected == [((-2, 3), (0, 2))]


def test_negative_hom_checks(coll):
    o = LineBundle(DivisorClass.zero())
    assert negative_hom_check(o, o, coll).certified
    assert negative_hom_check(o, o, coll).note == "identity composition has trivial kernel"
    for i, j in [(1, 2), (3, 3), (10, 1)]:
        report = negative_hom_check(LineBundle(E(i)), LineBundle(E(j)), coll)
        assert report.certified
        assert report.note == "all terms vanish"
    assert not negative_hom_check(o, LineBundle(H()), coll).certified
    assert negative_hom_check(LineBundle(K()), LineBundle(K()), coll).negative_degrees().is_zero()
