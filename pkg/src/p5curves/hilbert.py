"""Hilbert function profiles h0(I_X(t)), h1(I_X(t)) of curves in P^5.

A profile stores, for t = 1..t_max, the pair of ideal sheaf cohomology
dimensions together with h1(O_X(t)), so that the identity coming from
0 -> I_X(t) -> O(t) -> O_X(t) -> 0,

    h0(I_X(t)) - h1(I_X(t)) = C(t+5, 5) - (td + 1 - g) - h1(O_X(t)),

can be checked at every stored twist without recomputing curve cohomology.
Three constructors cover the regimes met in the classification: curves of
maximal rank, extremal curves on surfaces of minimal degree, and a small
registry of tabulated components shipped as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .data import load_dataset
from .errors import InvalidInput, UnknownComponent
from .invariants import castelnuovo_pi, hyperplane_vanishing_threshold
from .models import ConeF4, CurveModel, F0, F2, Veronese, fe_class
from .surface_cohomology import VERONESE, PlaneClass, curve_twist_cohomology

DEFAULT_T_MAX = 8


@dataclass(frozen=True)
class ProfileEntry:
    h0_ideal: int
    h1_ideal: int
    h1_curve: int


@dataclass(frozen=True)
class ProfileFlags:
    acm: bool
    linearly_normal: bool
    maximal_rank: bool


@dataclass(frozen=True)
class HilbertProfile:
    d: int
    g: int
    entries: dict[int, ProfileEntry]
    flags: ProfileFlags

    @property
    def t_max(self) -> int:
        return max(self.entries)

    def h0(self) -> list[int]:
        return [self.entries[t].h0_ideal for t in sorted(self.entries)]

    def h1(self) -> list[int]:
        return [self.entries[t].h1_ideal for t in sorted(self.entries)]

    def h1_curve(self) -> list[int]:
        return [self.entries[t].h1_curve for t in sorted(self.entries)]


def forms(t: int) -> int:
    return comb(t + 5, 5)


def euler_rhs(d: int, g: int, t: int, h1_curve: int) -> int:
    return forms(t) - (t * d + 1 - g) - h1_curve


def acm_levels(d: int) -> list[int]:
    """Twists whose h1 vanishing forces ACM; agrees with acm_vanishing_levels on 5..17."""
    return list(range(1, hyperplane_vanishing_threshold(d)))


def derive_flags(d: int, entries: dict[int, ProfileEntry]) -> ProfileFlags:
    ts = sorted(entries)
    covers = set(acm_levels(d)) <= set(ts)
    acm = covers and all(entries[t].h1_ideal == 0 for t in ts)
    ln = 1 in entries and entries[1].h1_ideal == 0
    mr = all(entries[t].h0_ideal == 0 or entries[t].h1_ideal == 0 for t in ts)
    return ProfileFlags(acm, ln, mr)


def make_profile(d: int, g: int, entries: dict[int, ProfileEntry]) -> HilbertProfile:
    return HilbertProfile(d, g, dict(entries), derive_flags(d, entries))


def _check_t_max(t_max: int) -> None:
    if t_max < 2:
        raise InvalidInput(f"t_max must be >= 2, got {t_max}")


def maximal_rank_profile(d: int, g: int, t_max: int = DEFAULT_T_MAX) -> HilbertProfile:
    _check_t_max(t_max)
    entries = {}
    # a complete special series has h0 = 6; a non-special one h0 = d + 1 - g
    h1c = max(0, g - d + 5)
    entries[1] = ProfileEntry(0, max(0, d - g - 5), h1c)
    for t in range(2, t_max + 1):
        chi = t * d + 1 - g
        entries[t] = ProfileEntry(max(0, forms(t) - chi), max(0, chi - forms(t)), 0)
    return make_profile(d, g, entries)


def _embedding(model: CurveModel):
    s = model.surface
    if isinstance(s, Veronese):
        return VERONESE, PlaneClass(s.s)
    if isinstance(s, (F0, F2, ConeF4)):
        return fe_class(s)
    raise InvalidInput(f"no cohomology engine for {s.kind} models")


def extremal_profile(model: CurveModel, t_max: int = DEFAULT_T_MAX) -> HilbertProfile:
    _check_t_max(t_max)
    d, g = model.degree, model.genus
    pi = castelnuovo_pi(d, 5)
    if g != pi:
        raise InvalidInput(f"genus {g} is not the Castelnuovo bound {pi} for d = {d}")
    emb, cls = _embedding(model)
    entries = {}
    for t in range(1, t_max + 1):
        _, h1c = curve_twist_cohomology(emb, cls, t)
        entries[t] = ProfileEntry(forms(t) - t * d - 1 + pi - h1c, 0, h1c)
    return make_profile(d, g, entries)


def profile_key(d: int, g: int, component_id: str) -> str:
    return f"{d}/{g}/{component_id}"


def registry(dataset: dict | None = None) -> dict:
    return (dataset or load_dataset())["profiles"]


def special_profile(
    d: int, g: int, component_id: str, t_max: int = DEFAULT_T_MAX, dataset: dict | None = None
) -> HilbertProfile:
    """A tabulated profile: explicit rows for small t, then h0 = C(t+5,5) - dt + c."""
    _check_t_max(t_max)
    key = profile_key(d, g, component_id)
    reg = registry(dataset)
    if key not in reg:
        raise UnknownComponent(key)
    rec = reg[key]
    entries = {}
    for t, (h0, h1, h1c) in enumerate(rec["head"], start=1):
        if t <= t_max:
            entries[t] = ProfileEntry(h0, h1, h1c)
    for t in range(len(rec["head"]) + 1, t_max + 1):
        entries[t] = ProfileEntry(forms(t) - d * t + rec["tail_h0_offset"], 0, 0)
    return make_profile(d, g, entries)


def verify_profile(p: HilbertProfile) -> list[str]:
    out = []
    ts = sorted(p.entries)
    if ts != list(range(1, len(ts) + 1)):
        out.append(f"twists {ts} are not 1..{len(ts)}")
    for t in ts:
        e = p.entries[t]
        if min(e.h0_ideal, e.h1_ideal, e.h1_curve) < 0:
            out.append(f"t={t}: negative entry {e}")
        rhs = euler_rhs(p.d, p.g, t, e.h1_curve)
        if e.h0_ideal - e.h1_ideal != rhs:
            out.append(f"t={t}: Euler identity {e.h0_ideal} - {e.h1_ideal} != {rhs}")
    if p.flags.acm or p.flags.maximal_rank:
        t0 = hyperplane_vanishing_threshold(p.d)
        for t in ts:
            if t >= t0 and p.entries[t].h1_ideal:
                out.append(f"t={t}: h1 = {p.entries[t].h1_ideal} past threshold {t0}")
    want = derive_flags(p.d, p.entries)
    if p.flags != want:
        out.append(f"flags {p.flags} do not match entries {want}")
    return out
