import pytest
from hypothesis import given, strategies as st

from oracles import chi_fe, h_fe
from p5curves.errors import InvalidInput, SequenceAssumptionViolated
from p5curves.surface_cohomology import (
    F2_SCROLL,
    F4_CONE,
    QUADRIC,
    VERONESE,
    BidegreeClass,
    DelPezzoClass,
    FeClass,
    PlaneClass,
    cohomology_bidegree,
    cohomology_fe,
    cohomology_p1,
    curve_twist_cohomology,
    del_pezzo_cohomology,
    maroni_closed_form,
    maroni_iterative,
    pencil_dimension_is_expected,
)

E = st.sampled_from([0, 2, 4])
C12 = st.integers(-12, 12)


def triple(c):
    return c.h0, c.h1, c.h2


def test_p1():
    assert cohomology_p1(0) == (1, 0)
    assert cohomology_p1(-2) == (0, 1)
    assert cohomology_p1(3) == (4, 0)


@pytest.mark.parametrize("e", [0, 1, 2, 3, 4])
def test_fe_matches_pushforward_oracle(e):
    for x in range(-12, 13):
        for y in range(-12, 13):
            assert triple(cohomology_fe(FeClass(e, x, y))) == h_fe(e, x, y)


@given(E, C12, C12)
def test_serre_duality(e, x, y):
    c = cohomology_fe(FeClass(e, x, y))
    dual = cohomology_fe(FeClass(e, -2 - x, -e - 2 - y))
    assert (c.h0, c.h1, c.h2) == (dual.h2, dual.h1, dual.h0)


@given(E, C12, C12)
def test_riemann_roch(e, x, y):
    c = cohomology_fe(FeClass(e, x, y))
    assert c.h0 - c.h1 + c.h2 == chi_fe(e, x, y)
    assert min(triple(c)) >= 0


@given(C12, C12)
def test_kunneth_agrees_with_pushforward(x, y):
    assert triple(cohomology_fe(FeClass(0, x, y))) == triple(cohomology_bidegree(BidegreeClass(x, y)))


def test_fe_examples():
    assert cohomology_fe(FeClass(2, 1, 0)).h1 == 1
    assert cohomology_fe(FeClass(2, 3, 5)).h1 == 0
    assert cohomology_fe(FeClass(2, 3, 4)).h1 > 0
    assert triple(cohomology_fe(FeClass(0, 0, 0))) == (1, 0, 0)
    assert cohomology_fe(FeClass(4, 1, 7)).h1 == 0
    assert cohomology_fe(FeClass(4, 1, 2)).h1 == 1


def test_fe_guard():
    with pytest.raises(InvalidInput):
        cohomology_fe(FeClass(0, 10**4 + 1, 0))
    with pytest.raises(InvalidInput):
        cohomology_fe(FeClass(-1, 0, 0))


def test_bidegree_examples():
    assert cohomology_bidegree(BidegreeClass(0, -2)).h1 == 1
    assert triple(cohomology_bidegree(BidegreeClass(1, 3))) == (8, 0, 0)
    assert cohomology_bidegree(BidegreeClass(-3, -5)).h2 == 8


@pytest.mark.parametrize("t,h1", [(1, 8), (2, 2), (3, 0)])
def test_extremal_quadric_curve_speciality(t, h1):
    assert curve_twist_cohomology(QUADRIC, FeClass(0, 4, 7), t)[1] == h1


def test_twist_nonspecial_range():
    for emb, cls in [(QUADRIC, FeClass(0, 4, 7)), (F2_SCROLL, FeClass(2, 3, 10)), (F4_CONE, FeClass(4, 3, 13))]:
        d = cls.dot(emb.hyperplane)
        g = (cls.dot(cls) + cls.dot(FeClass(cls.e, -2, -cls.e - 2))) // 2 + 1
        for t in range(1, 12):
            h0, h1 = curve_twist_cohomology(emb, cls, t)
            if t * d >= 2 * g - 1:
                assert (h0, h1) == (t * d + 1 - g, 0)
            assert h0 - h1 == t * d + 1 - g


def test_quadric_residual_at_three():
    # a (3,8) curve leaves tH - C = (0,-2) at t = 3
    from p5curves.surface_cohomology import residual_class, surface_ideal_h1

    assert residual_class(QUADRIC, FeClass(0, 3, 8), 3) == FeClass(0, 0, -2)
    assert surface_ideal_h1(QUADRIC, FeClass(0, 3, 8), 3) == 1


def test_twist_rejects_negative_twist_and_wrong_surface():
    with pytest.raises(SequenceAssumptionViolated):
        curve_twist_cohomology(QUADRIC, FeClass(0, 4, 7), -2)
    with pytest.raises(InvalidInput):
        curve_twist_cohomology(QUADRIC, FeClass(2, 4, 7), 1)
    assert curve_twist_cohomology(VERONESE, PlaneClass(7), 1) == (14 + 1 - 15 + 6, 6)


@pytest.mark.parametrize("emb,cls,m", [
    (QUADRIC, FeClass(0, 4, 6), 4),
    (F2_SCROLL, FeClass(2, 4, 10), 2),
    (F4_CONE, FeClass(4, 3, 13), 3),
    (QUADRIC, FeClass(0, 3, 6), 4),
    (F2_SCROLL, FeClass(2, 3, 9), 3),
])
def test_maroni_examples(emb, cls, m):
    assert maroni_iterative(emb, cls) == m


def test_maroni_closed_form_examples():
    assert maroni_closed_form("Q", 3, 7) == 5
    assert maroni_closed_form("F2", 3, 10) == 4
    assert maroni_closed_form("F2", 4, 9) == 1
    with pytest.raises(InvalidInput):
        maroni_closed_form("Q", 2, 7)
    with pytest.raises(InvalidInput):
        maroni_closed_form("F2", 4, 7)


def test_maroni_agreement_on_closed_form_ranges():
    for a in range(3, 7):
        for b in range(a, 21):
            assert maroni_iterative(QUADRIC, FeClass(0, a, b)) == maroni_closed_form("Q", a, b)
        for b in range(2 * a, 21):
            assert maroni_iterative(F2_SCROLL, FeClass(2, a, b)) == maroni_closed_form("F2", a, b)


@given(st.integers(3, 6), st.integers(3, 20))
def test_maroni_is_last_expected_pencil(a, b):
    cls = FeClass(0, a, max(a, b))
    m = maroni_iterative(QUADRIC, cls)
    assert all(pencil_dimension_is_expected(cls, k) for k in range(0, m + 2))
    assert not pencil_dimension_is_expected(cls, m + 2)


def test_maroni_needs_fibre_degree_three():
    with pytest.raises(InvalidInput):
        maroni_iterative(QUADRIC, FeClass(0, 2, 7))


@pytest.mark.parametrize("a,b,d,g,h0", [
    (8, (3, 2, 2, 2), 15, 15, 30),
    (10, (4, 4, 4, 4), 14, 12, 26),
    (3, (1, 1, 1, 1), 5, 1, 6),
    (7, (3, 2, 2, 1), 13, 10, 23),
])
def test_del_pezzo_examples(a, b, d, g, h0):
    c = del_pezzo_cohomology(DelPezzoClass(a, b))
    assert (c.degree, c.genus, c.h0) == (d, g, h0)


@given(st.integers(1, 15), st.lists(st.integers(0, 8), min_size=4, max_size=4))
def test_del_pezzo_parity_always_integral(a, bs):
    # L.(L+K) is even on any surface, so integral genus is automatic
    bs = tuple(sorted(bs, reverse=True))
    c = DelPezzoClass(a, bs)
    if c.degree >= 1:
        res = del_pezzo_cohomology(c)
        assert 2 * res.genus - 2 == c.self_intersection - c.degree


def test_del_pezzo_rejects_nonpositive_degree():
    with pytest.raises(InvalidInput):
        del_pezzo_cohomology(DelPezzoClass(1, (1, 1, 1, 0)))


def test_del_pezzo_screen_flag():
    assert del_pezzo_cohomology(DelPezzoClass(8, (3, 2, 2, 2))).vanishing_verified
    assert not del_pezzo_cohomology(DelPezzoClass(5, (4, 3, 0, 0))).vanishing_verified

