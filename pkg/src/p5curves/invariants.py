"""Classical numerical invariants of a triple (d, g, r).

Everything here is exact integer arithmetic on small inputs. The functions
are the bookkeeping layer used by every other module: Castelnuovo's genus
bound and its del Pezzo refinement in P^5, the Brill-Noether number, the
expected dimension of a Hilbert scheme component, and the dimension of the
fibres of the moduli map described as products of simple factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidInput

PI1_MIN_D = 6
PI1_MAX_D = 100


@dataclass(frozen=True)
class DGR:
    d: int
    g: int
    r: int

    def __post_init__(self):
        if self.d < 1 or self.g < 0 or self.r < 2:
            raise InvalidInput(f"invalid (d, g, r) = ({self.d}, {self.g}, {self.r})")


@dataclass(frozen=True)
class ClassicalInvariants:
    pi: int
    pi1: int | None
    rho: int
    lam: int
    expected_dim: int


# Fibre factors of the moduli map.


@dataclass(frozen=True)
class AutP5Orbit:
    def dimension(self, g: int, r: int) -> int:
        return (r + 1) ** 2 - 1


@dataclass(frozen=True)
class AutP5ModAutP1:
    def dimension(self, g: int, r: int) -> int:
        return (r + 1) ** 2 - 4


@dataclass(frozen=True)
class SymmetricPower:
    k: int

    def dimension(self, g: int, r: int) -> int:
        return self.k


@dataclass(frozen=True)
class Jacobian:
    def dimension(self, g: int, r: int) -> int:
        return g


@dataclass(frozen=True)
class Grassmannian:
    s: int
    n: int

    def dimension(self, g: int, r: int) -> int:
        if self.s >= self.n:
            raise InvalidInput(f"Grassmannian G({self.s},{self.n}) needs s < n")
        return (self.s + 1) * (self.n - self.s)


FiberFactor = Union[AutP5Orbit, AutP5ModAutP1, SymmetricPower, Jacobian, Grassmannian]


@dataclass(frozen=True)
class FiberDescriptor:
    factors: tuple[FiberFactor, ...]


def castelnuovo_pi(d: int, r: int) -> int:
    """Maximal arithmetic genus of a non-degenerate integral curve of degree d in P^r."""
    if r < 2 or d < r:
        raise InvalidInput(f"castelnuovo_pi needs d >= r >= 2, got d={d}, r={r}")
    m, eps = divmod(d - 1, r - 1)
    return m * (m - 1) // 2 * (r - 1) + m * eps


def castelnuovo_pi1_p5(d: int) -> int:
    """Second Castelnuovo bound in P^5, by maximizing over quintic del Pezzo classes.

    Classes are (a; b1..b4) with a - 1 >= b1 >= ... >= b4 >= 0 and
    3a - sum(b) = d. Since every b_i >= 0 we need a >= d/3, and a <= d.
    """
    if not PI1_MIN_D <= d <= PI1_MAX_D:
        raise InvalidInput(f"castelnuovo_pi1_p5 needs {PI1_MIN_D} <= d <= {PI1_MAX_D}, got {d}")
    best = None
    for a in range(-(-d // 3), d + 1):
        s = 3 * a - d
        top = min(a - 1, s)
        for b1 in range(-(-s // 4), top + 1):
            r1 = s - b1
            for b2 in range(-(-r1 // 3), min(b1, r1) + 1):
                r2 = r1 - b2
                for b3 in range(-(-r2 // 2), min(b2, r2) + 1):
                    b4 = r2 - b3
                    if b4 > b3:
                        continue
                    g2 = a * a - b1 * b1 - b2 * b2 - b3 * b3 - b4 * b4 - d + 2
                    if best is None or g2 > best:
                        best = g2
    # a(a-3) and b(b-1) are always even, so the numerator is even
    return best // 2


def brill_noether_rho(d: int, g: int, r: int) -> int:
    DGR(d, g, r)
    return g - (r + 1) * (g - d + r)


def classical_invariants(dgr: DGR) -> ClassicalInvariants:
    d, g, r = dgr.d, dgr.g, dgr.r
    pi = castelnuovo_pi(d, r)
    pi1 = castelnuovo_pi1_p5(d) if r == 5 and PI1_MIN_D <= d <= PI1_MAX_D else None
    rho = brill_noether_rho(d, g, r)
    lam = 3 * g - 3 + rho
    return ClassicalInvariants(pi, pi1, rho, lam, lam + (r + 1) ** 2 - 1)


def expected_dim(d: int, g: int, r: int = 5) -> int:
    """Lower bound for the dimension of every component of the Hilbert scheme."""
    return 3 * g - 3 + brill_noether_rho(d, g, r) + (r + 1) ** 2 - 1


def moduli_dim(g: int) -> int:
    """Dimension of the moduli space of genus g curves."""
    if g < 0:
        raise InvalidInput(f"negative genus {g}")
    return {0: 0, 1: 1}.get(g, 3 * g - 3)


def gonality_locus_dim(g: int, k: int) -> int:
    """Dimension of the locus of k-gonal curves in M_g, for 2 <= k <= (g+2)/2."""
    return 2 * g + 2 * k - 5


def castelnuovo_severi_bound(m: int, h: int, n: int, q: int) -> int:
    if m < 2 or n < 2:
        raise InvalidInput("castelnuovo_severi_bound needs m, n >= 2")
    if h < 0 or q < 0:
        raise InvalidInput("castelnuovo_severi_bound needs h, q >= 0")
    return m * h + n * q + (m - 1) * (n - 1)


def nodal_union_genus(g1: int, g2: int, meeting_points: int) -> int:
    """Arithmetic genus of two curves glued transversally at meeting_points nodes."""
    if meeting_points < 1:
        raise InvalidInput("a connected nodal union needs at least one meeting point")
    return g1 + g2 + meeting_points - 1


def rnc_normal_bundle_profile(n: int, z_degree: int) -> tuple[int, int]:
    """(h0, h1) of N(-Z) for a rational normal curve in P^n, with N = O(n+2)^(n-1)."""
    if n < 3:
        raise InvalidInput(f"rnc_normal_bundle_profile needs n >= 3, got {n}")
    if z_degree < 0:
        raise InvalidInput("z_degree must be non-negative")
    return (n - 1) * max(0, n + 3 - z_degree), (n - 1) * max(0, z_degree - n - 3)


def hyperplane_vanishing_threshold(d: int) -> int:
    """Least t0 >= 2 with h1(I_{X cap H}(t)) = 0 for t >= t0, for d points in P^4."""
    return max(2, -(-(d - 1) // 4))


def acm_vanishing_levels(d: int) -> list[int]:
    """Twists t whose h1(I_X(t)) vanishing already forces ACM, for 5 <= d <= 17."""
    if not 5 <= d <= 17:
        raise InvalidInput(f"acm_vanishing_levels needs 5 <= d <= 17, got {d}")
    return list(range(1, hyperplane_vanishing_threshold(d)))


def maroni_range(g: int) -> tuple[int, int]:
    if g < 5:
        raise InvalidInput(f"maroni_range needs g >= 5, got {g}")
    return -(-(g - 4) // 3), (g - 2) // 2


def fiber_dimension(desc: FiberDescriptor, g: int, r: int) -> int:
    return sum(f.dimension(g, r) for f in desc.factors)
