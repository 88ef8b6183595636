"""The classification catalog for smooth curves in P^5 with 5 <= d <= 15.

Records are read from the shipped JSON dataset. Rows for d <= 10, and the
low-genus rows of each larger degree, all follow one pattern (irreducible,
expected dimension, dominating M_g) and are expanded from compact range
descriptions rather than stored one by one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .data import load_dataset
from .errors import InvalidInput
from .invariants import (
    AutP5ModAutP1,
    AutP5Orbit,
    FiberDescriptor,
    Grassmannian,
    Jacobian,
    SymmetricPower,
    castelnuovo_pi,
    expected_dim,
)
from .models import ConeF4, CurveModel, DelPezzo, F0, F2, ScrollAbstract, Veronese, degree_genus
from .surface_cohomology import DelPezzoClass

D_MIN, D_MAX = 5, 15


@dataclass(frozen=True)
class ComponentRecord:
    id: str
    dimension: int
    relation: tuple  # ("equals_expected",) or ("exceeds", by)
    linearly_normal: bool
    acm_general_member: bool
    profile_ref: tuple  # ("maximal_rank",), ("extremal", model_ref) or ("special", id)
    fiber: FiberDescriptor | None = None
    moduli_image: tuple | None = None  # ("dominant",), ("gonality_locus", k), ("stated", dim)
    gonality: int | None = None
    maroni: int | None = None
    models: tuple = ()
    family_model: tuple | None = None
    notes: str = ""


@dataclass(frozen=True)
class Severi:
    component: str
    ambient: str
    degree: tuple[int, ...]
    delta: int


@dataclass(frozen=True)
class CatalogEntry:
    d: int
    g: int
    status: str  # "empty", "irreducible", "reducible"
    count: int
    components: tuple[ComponentRecord, ...] = ()
    severi: Severi | None = None
    notes: str = ""
    source: str = "transcribed"

    def component(self, cid: str) -> ComponentRecord:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)


_FACTORS = {
    "aut": lambda: AutP5Orbit(),
    "aut_mod_p1": lambda: AutP5ModAutP1(),
    "jac": lambda: Jacobian(),
    "sym": lambda k: SymmetricPower(k),
    "grass": lambda s, n: Grassmannian(s, n),
}


def parse_fiber(raw) -> FiberDescriptor | None:
    if raw is None:
        return None
    return FiberDescriptor(tuple(_FACTORS[f[0]](*f[1:]) for f in raw))


def fiber_to_raw(desc: FiberDescriptor | None):
    if desc is None:
        return None
    out = []
    for f in desc.factors:
        if isinstance(f, AutP5Orbit):
            out.append(["aut"])
        elif isinstance(f, AutP5ModAutP1):
            out.append(["aut_mod_p1"])
        elif isinstance(f, Jacobian):
            out.append(["jac"])
        elif isinstance(f, SymmetricPower):
            out.append(["sym", f.k])
        else:
            out.append(["grass", f.s, f.n])
    return out


def model_surface(ref):
    """Surface object for a stored model reference such as ["F0", 3, 9]."""
    kind, *vals = ref
    if kind == "veronese":
        return Veronese(*vals)
    if kind == "scroll":
        return ScrollAbstract(*vals)
    if kind == "F0":
        return F0(*vals)
    if kind == "F2":
        return F2(*vals)
    if kind == "cone":
        return ConeF4(*vals)
    if kind == "del_pezzo":
        return DelPezzo(DelPezzoClass(vals[0], tuple(vals[1:])))
    raise InvalidInput(f"unknown model kind {kind!r}")


def model_from_ref(ref) -> CurveModel:
    surface = model_surface(ref)
    d, g = degree_genus(surface)
    return CurveModel(surface, d, g)


def nonspecial_fiber(d: int, g: int) -> FiberDescriptor:
    """Fibre of the moduli map for d >= g + 5, where O_X(1) is non-special.

    G(5, 5) is a point and is left out.
    """
    n = d if g == 0 else d - g if g >= 2 else d - 1
    grass = (Grassmannian(5, n),) if n > 5 else ()
    if g == 0:
        return FiberDescriptor((AutP5ModAutP1(), *grass))
    if g == 1:
        return FiberDescriptor((AutP5Orbit(), *grass))
    return FiberDescriptor((Jacobian(), *grass, AutP5Orbit()))


def _component(raw: dict) -> ComponentRecord:
    rel = raw["relation"]
    relation = ("exceeds", rel["by"]) if rel["kind"] == "exceeds" else ("equals_expected",)
    prof = raw["profile"]
    if prof["kind"] == "extremal":
        profile_ref = ("extremal", tuple(prof["model"]))
    elif prof["kind"] == "special":
        profile_ref = ("special", prof["id"])
    else:
        profile_ref = ("maximal_rank",)
    mi = raw.get("moduli_image")
    if mi is None:
        moduli = None
    elif mi["kind"] == "gonality_locus":
        moduli = ("gonality_locus", mi["k"])
    elif mi["kind"] == "stated":
        moduli = ("stated", mi["dim"])
    else:
        moduli = ("dominant",)
    fam = raw.get("family_model")
    return ComponentRecord(
        id=raw["id"],
        dimension=raw["dimension"],
        relation=relation,
        linearly_normal=raw["linearly_normal"],
        acm_general_member=raw["acm"],
        profile_ref=profile_ref,
        fiber=parse_fiber(raw.get("fiber")),
        moduli_image=moduli,
        gonality=raw.get("gonality"),
        maroni=raw.get("maroni"),
        models=tuple(tuple(m) for m in raw.get("models", ())),
        family_model=tuple(fam) if fam else None,
        notes=raw.get("notes", ""),
    )


def _entry(raw: dict) -> CatalogEntry:
    comps = tuple(_component(c) for c in raw["components"])
    status = raw["status"]
    count = raw.get("count", 1 if status == "irreducible" else 0)
    sv = raw.get("severi")
    severi = Severi(sv["component"], sv["ambient"], tuple(sv["degree"]), sv["delta"]) if sv else None
    return CatalogEntry(raw["d"], raw["g"], status, count, comps, severi, raw.get("notes", ""))


def _uniform_entry(d: int, g: int, rule: dict, source: str) -> CatalogEntry:
    fiber = nonspecial_fiber(d, g) if rule["fiber"] == "nonspecial" else None
    comp = ComponentRecord(
        id="H",
        dimension=expected_dim(d, g),
        relation=("equals_expected",),
        linearly_normal=g in rule["linearly_normal_genera"],
        acm_general_member=g in rule["acm_genera"],
        profile_ref=("maximal_rank",),
        fiber=fiber,
        moduli_image=("dominant",) if fiber else None,
        notes=rule["notes"],
    )
    return CatalogEntry(d, g, "irreducible", 1, (comp,), None, "", source)


def low_degree_rules() -> list[dict]:
    """Range rules for d <= 10: nonempty iff g <= pi(d,5), ACM iff linearly normal."""
    rules = []
    for d in range(D_MIN, 10):
        rules.append({"d": d, "g_min": 0, "g_max": d - 5, "linearly_normal_genera": [d - 5],
                      "acm_genera": [d - 5], "fiber": "nonspecial",
                      "notes": "irreducible, dominates M_g; ACM iff d = g + 5"})
    rules.append({"d": 10, "g_min": 0, "g_max": 5, "linearly_normal_genera": [5],
                  "acm_genera": [5], "fiber": "nonspecial",
                  "notes": "irreducible, dominates M_g; ACM iff g >= 5"})
    return rules


def _canonical_decic() -> CatalogEntry:
    comp = ComponentRecord(
        id="H", dimension=expected_dim(10, 6), relation=("equals_expected",),
        linearly_normal=True, acm_general_member=True, profile_ref=("maximal_rank",),
        fiber=FiberDescriptor((AutP5Orbit(),)), moduli_image=("dominant",),
        notes="canonical curves of genus 6",
    )
    return CatalogEntry(10, 6, "irreducible", 1, (comp,), None, "", "generated")


@dataclass
class Catalog:
    entries: dict[tuple[int, int], CatalogEntry]
    profiles: dict
    duplicates: list[tuple[int, int]] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    def query(self, d: int, g: int) -> CatalogEntry:
        if not D_MIN <= d <= D_MAX:
            raise InvalidInput(f"catalog covers {D_MIN} <= d <= {D_MAX}, got {d}")
        if g < 0:
            raise InvalidInput(f"negative genus {g}")
        if g > castelnuovo_pi(d, 5):
            return CatalogEntry(d, g, "empty", 0, (), None,
                                f"g > pi({d},5) = {castelnuovo_pi(d, 5)}", "bound")
        if (d, g) not in self.entries:
            raise InvalidInput(f"no catalog entry for (d, g) = ({d}, {g})")
        return self.entries[(d, g)]

    def degree_table(self, d: int) -> list[CatalogEntry]:
        return [self.query(d, g) for g in range(castelnuovo_pi(d, 5) + 1)]


def build_catalog(dataset: dict) -> Catalog:
    rows: list[CatalogEntry] = []
    errors: list[str] = []

    def expand(rule, source):
        for g in range(rule["g_min"], rule["g_max"] + 1):
            try:
                rows.append(_uniform_entry(rule["d"], g, rule, source))
            except (InvalidInput, KeyError, TypeError) as exc:
                errors.append(f"range rule d={rule['d']} g={g}: {exc}")

    for rule in low_degree_rules():
        expand(rule, "generated")
    rows.append(_canonical_decic())
    for rule in dataset["uniform"]:
        expand(rule, "range")
    for raw in dataset["entries"]:
        try:
            rows.append(_entry(raw))
        except (InvalidInput, KeyError, TypeError) as exc:
            errors.append(f"entry d={raw.get('d')} g={raw.get('g')}: {exc}")
    entries, dups = {}, []
    for row in rows:
        key = (row.d, row.g)
        if key in entries:
            dups.append(key)
        entries[key] = row
    return Catalog(entries, dataset["profiles"], dups, errors)


_DEFAULT: Catalog | None = None


def default_catalog() -> Catalog:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = build_catalog(load_dataset())
    return _DEFAULT


def catalog_query(d: int, g: int) -> CatalogEntry:
    return default_catalog().query(d, g)
