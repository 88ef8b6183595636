"""Line bundle cohomology on the rational surfaces that carry curves in P^5.

Hirzebruch surfaces F_e are written with h the negative section (h^2 = -e)
and f a fibre. On F_e the pushforward of O(xh + yf) to P^1 splits as
O(y) + O(y - e) + ... + O(y - xe), which gives h0 directly; h2 comes from
Serre duality and h1 from Riemann-Roch.

The quadric Q = P^1 x P^1 is F_0 with (x, y) read as the bidegree, and it is
embedded in P^5 by O_Q(1, 2). Curves on the cone over a rational normal
quartic are treated upstairs on F_4 with hyperplane class h + 4f. The
Veronese surface is P^2 with hyperplane class O(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidInput, ParityViolation, SequenceAssumptionViolated

COEFF_GUARD = 10**4


@dataclass(frozen=True)
class FeClass:
    e: int
    x: int
    y: int

    def dot(self, other: FeClass) -> int:
        if self.e != other.e:
            raise InvalidInput("classes live on different Hirzebruch surfaces")
        return -self.e * self.x * other.x + self.x * other.y + other.x * self.y

    def __add__(self, other: FeClass) -> FeClass:
        return FeClass(self.e, self.x + other.x, self.y + other.y)

    def __sub__(self, other: FeClass) -> FeClass:
        return FeClass(self.e, self.x - other.x, self.y - other.y)

    def scale(self, t: int) -> FeClass:
        return FeClass(self.e, t * self.x, t * self.y)


def canonical_class(e: int) -> FeClass:
    return FeClass(e, -2, -e - 2)


@dataclass(frozen=True)
class BidegreeClass:
    a: int
    b: int

    def to_fe(self) -> FeClass:
        # h <-> (1,0), f <-> (0,1)
        return FeClass(0, self.a, self.b)


@dataclass(frozen=True)
class PlaneClass:
    n: int


@dataclass(frozen=True)
class DelPezzoClass:
    a: int
    b: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.b) != 4 or any(self.b[i] < self.b[i + 1] for i in range(3)):
            raise InvalidInput(f"del Pezzo b-vector must be 4 entries, descending: {self.b}")

    @property
    def degree(self) -> int:
        return 3 * self.a - sum(self.b)

    @property
    def self_intersection(self) -> int:
        return self.a * self.a - sum(bi * bi for bi in self.b)


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int


@dataclass(frozen=True)
class DelPezzoCohomology:
    h0: int
    degree: int
    genus: int
    vanishing_verified: bool


DivisorClass = Union[FeClass, PlaneClass]


@dataclass(frozen=True)
class SurfaceEmbedding:
    """A surface with the divisor class pulled back from a hyperplane of P^5."""

    name: str
    hyperplane: DivisorClass

    @property
    def e(self) -> int | None:
        return self.hyperplane.e if isinstance(self.hyperplane, FeClass) else None


QUADRIC = SurfaceEmbedding("Q", FeClass(0, 1, 2))
F2_SCROLL = SurfaceEmbedding("F2", FeClass(2, 1, 3))
F4_CONE = SurfaceEmbedding("F4-cone", FeClass(4, 1, 4))
VERONESE = SurfaceEmbedding("Veronese", PlaneClass(2))

SURFACES = {s.name: s for s in (QUADRIC, F2_SCROLL, F4_CONE, VERONESE)}


def cohomology_p1(n: int) -> tuple[int, int]:
    return max(0, n + 1), max(0, -n - 1)


def _h0_fe(e: int, x: int, y: int) -> int:
    if x < 0:
        return 0
    return sum(max(0, y - j * e + 1) for j in range(x + 1))


def euler_characteristic_fe(c: FeClass) -> int:
    e, x, y = c.e, c.x, c.y
    twice = -e * x * x + 2 * x * y - e * x + 2 * x + 2 * y
    return 1 + twice // 2


def cohomology_fe(c: FeClass) -> CohomologyTriple:
    if c.e < 0:
        raise InvalidInput(f"Hirzebruch parameter must be >= 0, got {c.e}")
    if abs(c.x) > COEFF_GUARD or abs(c.y) > COEFF_GUARD:
        raise InvalidInput(f"coefficients of {c} exceed the guard {COEFF_GUARD}")
    h0 = _h0_fe(c.e, c.x, c.y)
    h2 = _h0_fe(c.e, -2 - c.x, -c.e - 2 - c.y)
    h1 = h0 + h2 - euler_characteristic_fe(c)
    return CohomologyTriple(h0, h1, h2)


def cohomology_bidegree(c: BidegreeClass) -> CohomologyTriple:
    if abs(c.a) > COEFF_GUARD or abs(c.b) > COEFF_GUARD:
        raise InvalidInput(f"coefficients of {c} exceed the guard {COEFF_GUARD}")
    a0, a1 = cohomology_p1(c.a)
    b0, b1 = cohomology_p1(c.b)
    return CohomologyTriple(a0 * b0, a0 * b1 + a1 * b0, a1 * b1)


def cohomology_p2(n: int) -> CohomologyTriple:
    h0 = (n + 1) * (n + 2) // 2 if n >= 0 else 0
    m = -3 - n
    h2 = (m + 1) * (m + 2) // 2 if m >= 0 else 0
    return CohomologyTriple(h0, 0, h2)


def cohomology_on(c: DivisorClass) -> CohomologyTriple:
    if isinstance(c, PlaneClass):
        return cohomology_p2(c.n)
    return cohomology_fe(c)


def _twist(c: DivisorClass, t: int) -> DivisorClass:
    if isinstance(c, PlaneClass):
        return PlaneClass(t * c.n)
    return c.scale(t)


def _minus(a: DivisorClass, b: DivisorClass) -> DivisorClass:
    if isinstance(a, PlaneClass) and isinstance(b, PlaneClass):
        return PlaneClass(a.n - b.n)
    if isinstance(a, FeClass) and isinstance(b, FeClass):
        return a - b
    raise InvalidInput("curve class does not live on the given surface")


def _check_surface(surface: SurfaceEmbedding, curve: DivisorClass) -> None:
    if type(curve) is not type(surface.hyperplane):
        raise InvalidInput(f"{curve} is not a class on {surface.name}")
    if isinstance(curve, FeClass) and curve.e != surface.e:
        raise InvalidInput(f"{curve} is not a class on {surface.name}")


def residual_class(surface: SurfaceEmbedding, curve: DivisorClass, t: int) -> DivisorClass:
    """The class tH - C."""
    _check_surface(surface, curve)
    return _minus(_twist(surface.hyperplane, t), curve)


def curve_twist_cohomology(surface: SurfaceEmbedding, curve: DivisorClass, t: int) -> tuple[int, int]:
    """(h0, h1) of O_X(t) for a curve X in |C| on the surface, via 0 -> O(tH-C) -> O(tH) -> O_X(t) -> 0."""
    _check_surface(surface, curve)
    ambient = cohomology_on(_twist(surface.hyperplane, t))
    if ambient.h1 or ambient.h2:
        raise SequenceAssumptionViolated(
            f"h1 = {ambient.h1}, h2 = {ambient.h2} for O_S({t}H) on {surface.name}"
        )
    res = cohomology_on(residual_class(surface, curve, t))
    return ambient.h0 - res.h0 + res.h1, res.h2


def surface_ideal_h1(surface: SurfaceEmbedding, curve: DivisorClass, t: int) -> int:
    """h1(O_S(tH - C)), which is h1(I_X(t)) when the surface is projectively normal."""
    return cohomology_on(residual_class(surface, curve, t)).h1


def fiber_degree(curve: FeClass) -> int:
    return curve.dot(FeClass(curve.e, 0, 1))


def pencil_dimension_is_expected(curve: FeClass, k: int) -> bool:
    """True iff dim |k g^1_a| = k, where g^1_a is cut by the ruling.

    From 0 -> O(kf - C) -> O(kf) -> O_X(kf) -> 0 with h0(kf - C) = 0 and
    h1(kf) = 0 for k >= 0, this holds iff h1(O(kf - C)) = 0.
    """
    return cohomology_fe(FeClass(curve.e, -curve.x, k - curve.y)).h1 == 0


def maroni_iterative(surface: SurfaceEmbedding, curve: FeClass) -> int:
    _check_surface(surface, curve)
    if not isinstance(curve, FeClass):
        raise InvalidInput("Maroni invariant needs a ruled surface")
    a = fiber_degree(curve)
    if a < 3:
        raise InvalidInput(f"fibre degree {a} < 3")
    k = 0
    # h1(kf - C) is non-decreasing in k and positive once k > y
    while k <= curve.y + 1 and pencil_dimension_is_expected(curve, k + 1):
        k += 1
    return k - 1


def maroni_closed_form(surface_kind: str, a: int, b: int) -> int:
    if surface_kind == "Q":
        if not 3 <= a <= b:
            raise InvalidInput(f"Q closed form needs 3 <= a <= b, got ({a},{b})")
        return b - 2
    if surface_kind == "F2":
        if not 6 <= 2 * a <= b:
            raise InvalidInput(f"F2 closed form needs 6 <= 2a <= b, got ({a},{b})")
        return b - 2 * a
    raise InvalidInput(f"no closed form for surface {surface_kind!r}")


def del_pezzo_cohomology(c: DelPezzoClass) -> DelPezzoCohomology:
    d = c.degree
    if d < 1:
        raise InvalidInput(f"degree {d} < 1 for {c}")
    twice = c.self_intersection - d + 2
    if twice % 2:
        raise ParityViolation(f"non-integral genus for {c}")
    g = twice // 2
    screen = c.a >= 1 and c.b[3] >= 0 and c.a >= c.b[0] + c.b[1]
    return DelPezzoCohomology(g + d, d, g, screen)
