import pytest
from hypothesis import given, strategies as st

from oracles import forms
from p5curves.errors import InvalidInput, UnknownComponent
from p5curves.hilbert import (
    ProfileEntry,
    extremal_profile,
    make_profile,
    maximal_rank_profile,
    special_profile,
    verify_profile,
)
from p5curves.invariants import brill_noether_rho, castelnuovo_pi
from p5curves.models import enumerate_models

SPECIAL = [(15, 16, "Gamma1"), (15, 16, "Gamma2"), (15, 16, "Gamma3"), (15, 15, "all"),
           (15, 13, "H2"), (14, 14, "all"), (14, 11, "H2")]


def euler_ok(p):
    return all(e.h0_ideal - e.h1_ideal == forms(t) - (t * p.d + 1 - p.g) - e.h1_curve
               for t, e in p.entries.items())


@given(st.integers(5, 30), st.integers(0, 30))
def test_maximal_rank_product_zero(d, g):
    if g <= castelnuovo_pi(d, 5) and brill_noether_rho(d, g, 5) >= 0:
        p = maximal_rank_profile(d, g)
        assert all(e.h0_ideal * e.h1_ideal == 0 for e in p.entries.values())
        assert euler_ok(p)
        assert verify_profile(p) == []


def test_maximal_rank_examples():
    p = maximal_rank_profile(15, 12)
    assert p.h0()[:3] == [0, 2, forms(3) - 45 - 1 + 12]
    assert p.entries[1].h1_curve == 2
    p = maximal_rank_profile(15, 5)
    assert p.entries[1] == ProfileEntry(0, 5, 0)
    assert not p.flags.linearly_normal


def test_maximal_rank_fifteen_low_genus_closed_form():
    for g in range(13):
        p = maximal_rank_profile(15, g)
        assert p.entries[2].h0_ideal == max(0, g - 10)
        for t in range(3, 9):
            assert p.entries[t].h0_ideal == forms(t) - (15 * t + 1 - g)


@pytest.mark.parametrize("d,g,cid", SPECIAL)
def test_special_profiles_verify(d, g, cid):
    p = special_profile(d, g, cid, 8)
    assert euler_ok(p)
    assert verify_profile(p) == []


def test_gamma_tables():
    p1 = special_profile(15, 16, "Gamma1", 8)
    assert p1.h0()[:3] == [0, 6, 28]
    assert p1.h1() == [0, 0, 2, 0, 0, 0, 0, 0]
    assert all(p1.h0()[t - 1] == forms(t) - 15 * t + 15 for t in range(4, 9))
    assert p1.h1_curve()[1:] == [0] * 7
    p3 = special_profile(15, 16, "Gamma3", 8)
    assert p3.h0()[:2] == [0, 5]
    assert all(p3.h0()[t - 1] == forms(t) - 15 * t + 15 for t in range(3, 9))
    assert p3.flags.acm and not p1.flags.acm
    assert special_profile(15, 16, "Gamma2", 8).entries == p1.entries


def test_fifteen_thirteen_h2():
    p = special_profile(15, 13, "H2", 8)
    assert p.h1() == [1] + [0] * 7
    assert p.h0() == [0] + [forms(t) - 15 * t + 12 for t in range(2, 9)]
    assert not p.flags.linearly_normal


def test_fourteen_fourteen():
    p = special_profile(14, 14, "all", 8)
    assert p.entries[3].h0_ideal == 28 and p.entries[3].h1_ideal == 1
    assert [t for t, e in p.entries.items() if e.h1_ideal] == [3]
    assert p.entries[1].h0_ideal == 0


def test_fifteen_fifteen_acm():
    p = special_profile(15, 15, "all", 8)
    assert p.flags.acm
    assert p.h0() == [0] + [forms(t) - 15 * t + 14 for t in range(2, 9)]


def test_special_unknown():
    with pytest.raises(UnknownComponent):
        special_profile(15, 16, "Gamma4")
    with pytest.raises(InvalidInput):
        special_profile(15, 16, "Gamma1", 1)


def test_extremal_profiles_verify():
    for d in range(5, 16):
        g = castelnuovo_pi(d, 5)
        for m in enumerate_models(d, g):
            if m.surface.kind in ("veronese", "F0", "F2", "cone"):
                p = extremal_profile(m, 8)
                assert verify_profile(p) == [], (d, m)
                assert p.flags.acm


def test_extremal_fifteen_eighteen():
    (m,) = [m for m in enumerate_models(15, 18) if m.ref() == ("F0", 4, 7)]
    p = extremal_profile(m, 5)
    assert p.h1_curve() == [8, 2, 0, 0, 0]
    assert p.h1() == [0] * 5


def test_verify_catches_broken_profile():
    p = special_profile(15, 16, "Gamma1", 5)
    broken = dict(p.entries)
    broken[3] = ProfileEntry(29, 2, 0)
    assert verify_profile(make_profile(15, 16, broken))
    bad_flags = make_profile(15, 16, p.entries)
    object.__setattr__(bad_flags, "flags", type(p.flags)(True, True, True))
    assert verify_profile(bad_flags)
