"""Surface models for smooth curves of given degree and genus in P^5.

Each enumerator solves a small Diophantine system (degree equation plus
adjunction) on one surface of low degree: the Veronese surface, the
abstract quartic scroll in the basis H, L, the quadric F_0, the scroll F_2,
the cone over a rational normal quartic (worked on F_4), and the quintic
del Pezzo surface. Results come back as CurveModel records in a fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Union

from .errors import InvalidInput
from .invariants import castelnuovo_pi
from .surface_cohomology import (
    F2_SCROLL,
    F4_CONE,
    QUADRIC,
    DelPezzoClass,
    FeClass,
    cohomology_fe,
    del_pezzo_cohomology,
    maroni_iterative,
)

AMBIENT_AUT = 35
AUT_DIM = {"F0": 6, "F2": 7, "F4": 9, "P2": 8}
OUTSIDE_STANDARD_RANGE = "outside-standard-range"


@dataclass(frozen=True)
class Veronese:
    s: int

    kind = "veronese"

    def key(self) -> tuple:
        return (self.s,)


@dataclass(frozen=True)
class ScrollAbstract:
    a: int
    b: int

    kind = "scroll"

    def key(self) -> tuple:
        return (self.a, self.b)


@dataclass(frozen=True)
class F0:
    a: int
    b: int

    kind = "F0"

    def key(self) -> tuple:
        return (self.a, self.b)


@dataclass(frozen=True)
class F2:
    a: int
    b: int

    kind = "F2"

    def key(self) -> tuple:
        return (self.a, self.b)


@dataclass(frozen=True)
class ConeF4:
    k: int
    m: int

    kind = "cone"

    def key(self) -> tuple:
        return (self.k, self.m)


@dataclass(frozen=True)
class DelPezzo:
    cls: DelPezzoClass

    kind = "del_pezzo"

    def key(self) -> tuple:
        return (self.cls.a, *self.cls.b)


Surface = Union[Veronese, ScrollAbstract, F0, F2, ConeF4, DelPezzo]
KIND_ORDER = ("veronese", "cone", "scroll", "F0", "F2", "del_pezzo")


@dataclass(frozen=True)
class CurveModel:
    surface: Surface
    degree: int
    genus: int
    ruling_pencils: tuple[int, ...] = ()
    maroni: int | None = None
    flags: tuple[str, ...] = field(default=())

    def ref(self) -> tuple:
        return (self.surface.kind, *self.surface.key())


@dataclass(frozen=True)
class FamilyDimension:
    linear_system_dim: int
    aut_dim: int
    family_dim: int


def degree_genus(surface: Surface) -> tuple[int, int]:
    """Degree and genus read off a class, by the formula for its surface."""
    if isinstance(surface, Veronese):
        return 2 * surface.s, comb(surface.s - 1, 2)
    if isinstance(surface, ScrollAbstract):
        a, b = surface.a, surface.b
        return 4 * a + b, 2 * (a - 1) * (a - 2) + (3 + b) * (a - 1)
    if isinstance(surface, F0):
        return 2 * surface.a + surface.b, (surface.a - 1) * (surface.b - 1)
    if isinstance(surface, F2):
        a, b = surface.a, surface.b
        return a + b, (a - 1) * (b - a - 1)
    if isinstance(surface, ConeF4):
        d = 4 * surface.k + surface.m
        return d, (surface.k - 1) * (2 * d - 4 * surface.k - 2) // 2
    if isinstance(surface, DelPezzo):
        c = del_pezzo_cohomology(surface.cls)
        return c.degree, c.genus
    raise InvalidInput(f"unknown surface {surface!r}")


def fe_class(surface: Surface) -> tuple:
    """The (embedding, class) pair on a ruled surface, for cohomology calls."""
    if isinstance(surface, F0):
        return QUADRIC, FeClass(0, surface.a, surface.b)
    if isinstance(surface, F2):
        return F2_SCROLL, FeClass(2, surface.a, surface.b)
    if isinstance(surface, ConeF4):
        return F4_CONE, FeClass(4, surface.k, 4 * surface.k + surface.m)
    raise InvalidInput(f"{surface!r} is not a ruled-surface model")


def _maroni_or_none(surface: Surface) -> int | None:
    emb, cls = fe_class(surface)
    if isinstance(surface, F0) and cls.x > cls.y:
        # use the ruling cutting the smaller pencil
        cls = FeClass(0, cls.y, cls.x)
    if cls.x < 3:
        return None
    return maroni_iterative(emb, cls)


def _model(surface: Surface, pencils: tuple[int, ...], maroni: int | None = None, flags=()) -> CurveModel:
    d, g = degree_genus(surface)
    return CurveModel(surface, d, g, tuple(sorted(pencils)), maroni, tuple(flags))


def veronese_models(d: int, g: int) -> list[CurveModel]:
    if d < 2:
        raise InvalidInput(f"veronese_models needs d >= 2, got {d}")
    if d % 2 or comb(d // 2 - 1, 2) != g:
        return []
    return [_model(Veronese(d // 2), ())]


def cone_models(d: int, g: int, smooth_only: bool) -> list[CurveModel]:
    if d < 5:
        raise InvalidInput(f"cone_models needs d >= 5, got {d}")
    out = []
    # d = 4k + m with m >= 0 bounds k <= d/4
    for k in range(1, d // 4 + 1):
        m = d - 4 * k
        if smooth_only and m > 1:
            continue
        if (k - 1) * (2 * d - 4 * k - 2) // 2 != g:
            continue
        surface = ConeF4(k, m)
        maroni = _maroni_or_none(surface) if k >= 3 else None
        out.append(_model(surface, (k,), maroni))
    return out


def scroll_models(d: int, g: int) -> list[CurveModel]:
    if d < 5:
        raise InvalidInput(f"scroll_models needs d >= 5, got {d}")
    out = []
    # with b = d - 4a the genus is (a-1)(d-1-2a), negative once 2a > d-1 and a > 1
    for a in range(1, max(1, (d - 1) // 2) + 1):
        surface = ScrollAbstract(a, d - 4 * a)
        if degree_genus(surface)[1] == g:
            out.append(_model(surface, (a,)))
    return out


def f0_f2_models(d: int, g: int) -> list[CurveModel]:
    if d < 5:
        raise InvalidInput(f"f0_f2_models needs d >= 5, got {d}")
    out = []
    # F0: 2a + b = d with b >= 1 gives a < d/2
    for a in range(1, d // 2 + 1):
        b = d - 2 * a
        if b >= 1 and (a - 1) * (b - 1) == g:
            surface = F0(a, b)
            out.append(_model(surface, (a, b), _maroni_or_none(surface)))
    # F2: a + b = d with b >= a gives a <= d/2
    for a in range(1, d // 2 + 1):
        b = d - a
        if (a - 1) * (b - a - 1) != g:
            continue
        surface = F2(a, b)
        flags = () if b >= 2 * a else (OUTSIDE_STANDARD_RANGE,)
        out.append(_model(surface, (a,), _maroni_or_none(surface), flags))
    return out


def del_pezzo_models(d: int, g: int) -> list[CurveModel]:
    if d < 3:
        raise InvalidInput(f"del_pezzo_models needs d >= 3, got {d}")
    out = []
    # sum(b) = 3a - d >= 0 gives a >= d/3; a <= d by convention
    for a in range(max(1, -(-d // 3)), d + 1):
        s = 3 * a - d
        for b1 in range(-(-s // 4), s + 1):
            for b2 in range(-(-(s - b1) // 3), min(b1, s - b1) + 1):
                r2 = s - b1 - b2
                for b3 in range(-(-r2 // 2), min(b2, r2) + 1):
                    b4 = r2 - b3
                    if b4 > b3:
                        continue
                    # L^2 - d + 2 = 2g, screened before building the class
                    if a * a - b1 * b1 - b2 * b2 - b3 * b3 - b4 * b4 - d + 2 != 2 * g:
                        continue
                    cls = DelPezzoClass(a, (b1, b2, b3, b4))
                    pencils = tuple(a - bi for bi in cls.b) + (2 * a - s,)
                    c = del_pezzo_cohomology(cls)
                    flags = () if c.vanishing_verified else ("unverified-vanishing",)
                    out.append(_model(DelPezzo(cls), pencils, None, flags))
    return out


def _sort_key(m: CurveModel) -> tuple:
    return (KIND_ORDER.index(m.surface.kind), m.surface.key())


def enumerate_models(d: int, g: int) -> list[CurveModel]:
    if not 5 <= d <= 20:
        raise InvalidInput(f"enumerate_models needs 5 <= d <= 20, got {d}")
    if not 0 <= g <= castelnuovo_pi(d, 5):
        raise InvalidInput(f"genus {g} outside [0, pi({d},5)]")
    models = (
        veronese_models(d, g)
        + cone_models(d, g, smooth_only=False)
        + scroll_models(d, g)
        + f0_f2_models(d, g)
        + del_pezzo_models(d, g)
    )
    for m in models:
        if degree_genus(m.surface) != (d, g):
            raise AssertionError(f"round trip failed for {m}")
    return sorted(models, key=_sort_key)


def scroll_linear_system_dim(a: int, b: int) -> int:
    value = 2 * a * (a + 1) + (a + 1) * (b + 1) - 1
    if value < 0:
        raise InvalidInput(f"|{a}H+{b}L| is empty")
    return value


def linear_system_dim(surface: Surface) -> tuple[int, int]:
    """(dim |C|, dim Aut of the surface) for a model."""
    if isinstance(surface, Veronese):
        return comb(surface.s + 2, 2) - 1, AUT_DIM["P2"]
    if isinstance(surface, ScrollAbstract):
        # the general quartic scroll is F0
        return scroll_linear_system_dim(surface.a, surface.b), AUT_DIM["F0"]
    if isinstance(surface, DelPezzo):
        # the quintic del Pezzo is rigid; the 35 comes in with the ambient
        return del_pezzo_cohomology(surface.cls).h0 - 1, 0
    _, cls = fe_class(surface)
    aut = {F0: "F0", F2: "F2", ConeF4: "F4"}[type(surface)]
    return cohomology_fe(cls).h0 - 1, AUT_DIM[aut]


def family_dimension_count(model: CurveModel, include_ambient: bool) -> FamilyDimension:
    lin, aut = linear_system_dim(model.surface)
    return FamilyDimension(lin, aut, lin - aut + (AMBIENT_AUT if include_ambient else 0))


def del_pezzo_nonfull(d: int, g: int) -> bool:
    """True iff curves on quintic del Pezzo surfaces fill less than the expected dimension."""
    return 5 * d > 3 * g + 32


def veronese_normal_h1(d: int, g: int) -> int:
    if d % 2:
        raise InvalidInput(f"Veronese curves have even degree, got {d}")
    return 3 * (g - d + 5) - 3 * (d // 2) + 9
