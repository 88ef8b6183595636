"""Cross-validation of every catalog number against the formula modules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .catalog import D_MAX, D_MIN, Catalog, CatalogEntry, ComponentRecord, default_catalog, model_from_ref
from .errors import InvalidInput, SequenceAssumptionViolated, UnknownComponent
from .hilbert import (
    DEFAULT_T_MAX,
    HilbertProfile,
    extremal_profile,
    maximal_rank_profile,
    special_profile,
    verify_profile,
)
from .invariants import castelnuovo_pi, expected_dim, fiber_dimension, gonality_locus_dim, moduli_dim
from .models import AUT_DIM, ConeF4, DelPezzo, F0, F2, Veronese, enumerate_models, family_dimension_count, fe_class
from .surface_cohomology import maroni_closed_form, maroni_iterative, surface_ideal_h1


@dataclass(frozen=True)
class CheckResult:
    d: int
    g: int
    component: str
    check: str
    passed: bool
    details: str

    def as_dict(self) -> dict:
        return {"d": self.d, "g": self.g, "component": self.component, "check": self.check,
                "pass": self.passed, "details": self.details}


def profile_for(entry: CatalogEntry, comp: ComponentRecord, catalog: Catalog,
                t_max: int = DEFAULT_T_MAX) -> HilbertProfile:
    ref = comp.profile_ref
    if ref[0] == "extremal":
        return extremal_profile(model_from_ref(ref[1]), t_max)
    if ref[0] == "special":
        return special_profile(entry.d, entry.g, ref[1], t_max, {"profiles": catalog.profiles})
    return maximal_rank_profile(entry.d, entry.g, t_max)


def severi_moduli_dim(ambient: str, degree: tuple[int, ...], delta: int) -> int:
    """dim |L| - delta - dim Aut for nodal curves in a plane or on a quadric."""
    if ambient == "plane":
        (n,) = degree
        return comb(n + 2, 2) - 1 - delta - AUT_DIM["P2"]
    if ambient == "quadric":
        a, b = degree
        return (a + 1) * (b + 1) - 1 - delta - AUT_DIM["F0"]
    raise InvalidInput(f"unknown Severi ambient {ambient!r}")


def severi_gonality(ambient: str, degree: tuple[int, ...], delta: int) -> int:
    """Gonality of a general nodal curve: project from a node, or use a ruling."""
    if ambient == "plane":
        return degree[0] - 2 if delta else degree[0] - 1
    return min(degree)


def _model_gonality(ref) -> int | None:
    m = model_from_ref(ref)
    s = m.surface
    if isinstance(s, Veronese):
        return s.s - 1
    if isinstance(s, F0):
        return min(s.a, s.b)
    if isinstance(s, (F2, ConeF4)):
        return fe_class(s)[1].x
    if isinstance(s, DelPezzo):
        b = s.cls.b
        return min([s.cls.a - bi for bi in b] + [2 * s.cls.a - sum(b)])
    return None


def _moduli_image_dim(comp: ComponentRecord, g: int) -> int | None:
    mi = comp.moduli_image
    if mi is None:
        return None
    if mi[0] == "dominant":
        return moduli_dim(g)
    if mi[0] == "gonality_locus":
        return gonality_locus_dim(g, mi[1])
    return mi[1]


@lru_cache(maxsize=None)
def _model_refs(d: int, g: int) -> frozenset:
    return frozenset(m.ref() for m in enumerate_models(d, g))


class _Report:
    def __init__(self):
        self.results: list[CheckResult] = []

    def add(self, d, g, comp, name, ok, details=""):
        self.results.append(CheckResult(d, g, comp, name, bool(ok), details))


def _check_component(rep: _Report, cat: Catalog, entry: CatalogEntry, comp: ComponentRecord, models_cache):
    d, g, cid = entry.d, entry.g, comp.id
    add = lambda name, ok, details="": rep.add(d, g, cid, name, ok, details)

    x = expected_dim(d, g)
    excess = comp.dimension - x
    if comp.relation[0] == "exceeds":
        ok = comp.relation[1] > 0 and excess == comp.relation[1]
    else:
        ok = excess == 0
    add("expected_dimension", ok and excess >= 0, f"dim {comp.dimension}, expected {x}, relation {comp.relation}")
    add("acm_implies_linearly_normal", comp.linearly_normal or not comp.acm_general_member)
    if d <= 9:
        add("low_degree_ln_acm", comp.acm_general_member == comp.linearly_normal)

    try:
        prof = profile_for(entry, comp, cat)
        problems = verify_profile(prof)
        add("profile_verify", not problems, "; ".join(problems))
        add("profile_flags",
            prof.flags.acm == comp.acm_general_member and prof.flags.linearly_normal == comp.linearly_normal,
            f"profile acm={prof.flags.acm} ln={prof.flags.linearly_normal}")
    except (InvalidInput, UnknownComponent, SequenceAssumptionViolated) as exc:
        add("profile_verify", False, f"{type(exc).__name__}: {exc}")
        prof = None

    refs = list(comp.models)
    if comp.family_model:
        refs.append(comp.family_model)
    if comp.profile_ref[0] == "extremal":
        refs.append(comp.profile_ref[1])
    if refs:
        have = models_cache(d, g)
        missing = [r for r in refs if tuple(r) not in have]
        add("model_existence", not missing, f"missing {missing}" if missing else "")

    fam = comp.family_model
    if fam:
        try:
            fd = family_dimension_count(model_from_ref(fam), include_ambient=True).family_dim
            add("family_dimension", fd == comp.dimension, f"family {fd} vs stored {comp.dimension}")
        except InvalidInput as exc:
            add("family_dimension", False, str(exc))

    if prof is not None and comp.profile_ref[0] == "special" and fam and fam[0] in ("F0", "F2", "cone"):
        emb, cls = fe_class(model_from_ref(fam).surface)
        surf = [surface_ideal_h1(emb, cls, t) for t in sorted(prof.entries)]
        add("special_vs_surface", surf == prof.h1(), f"surface h1 {surf} vs table {prof.h1()}")

    if comp.maroni is not None:
        if not fam or fam[0] not in ("F0", "F2", "cone"):
            add("maroni", False, "stored Maroni invariant without a ruled-surface model")
        else:
            s = model_from_ref(fam).surface
            emb, cls = fe_class(s)
            it = maroni_iterative(emb, cls)
            ok, details = it == comp.maroni, f"iterative {it} vs stored {comp.maroni}"
            kind = {"F0": "Q", "F2": "F2"}.get(fam[0])
            try:
                if kind:
                    cf = maroni_closed_form(kind, cls.x, cls.y)
                    ok = ok and cf == it
                    details += f", closed form {cf}"
            except InvalidInput:
                pass
            add("maroni", ok, details)

    if comp.gonality is not None:
        sources = []
        if comp.moduli_image and comp.moduli_image[0] == "gonality_locus":
            sources.append(("gonality locus", comp.moduli_image[1]))
        if fam:
            sources.append(("family model", _model_gonality(fam)))
        sv = entry.severi
        if sv and sv.component == cid:
            sources.append(("Severi", severi_gonality(sv.ambient, sv.degree, sv.delta)))
        ok = bool(sources) and all(v == comp.gonality for _, v in sources)
        add("gonality", ok, f"stored {comp.gonality}, sources {sources}")

    mdim = _moduli_image_dim(comp, g)
    if comp.fiber is not None and mdim is not None:
        try:
            fdim = fiber_dimension(comp.fiber, g, 5)
            add("fiber_dimension", fdim + mdim == comp.dimension,
                f"fibre {fdim} + moduli image {mdim} vs {comp.dimension}")
        except InvalidInput as exc:
            add("fiber_dimension", False, str(exc))
    if comp.moduli_image and comp.moduli_image[0] == "gonality_locus":
        k = comp.moduli_image[1]
        add("gonality_locus_range", 2 <= k <= (g + 2) // 2 and (comp.gonality in (None, k)))


def check_all(catalog: Catalog | None = None) -> list[CheckResult]:
    cat = catalog or default_catalog()
    rep = _Report()

    for err in cat.errors:
        rep.add(0, 0, "", "load", False, err)
    for key in cat.duplicates:
        rep.add(*key, "", "coverage", False, "duplicate entry")
    for d in range(D_MIN, D_MAX + 1):
        pi = castelnuovo_pi(d, 5)
        for g in range(pi + 1):
            rep.add(d, g, "", "coverage", (d, g) in cat.entries, "")
        over = cat.query(d, pi + 1)
        rep.add(d, pi + 1, "", "emptiness", over.status == "empty" and not over.components, over.notes)
    for (d, g), entry in cat.entries.items():
        if not (D_MIN <= d <= D_MAX and 0 <= g <= castelnuovo_pi(max(d, 5), 5)):
            rep.add(d, g, "", "coverage", False, "entry outside 5 <= d <= 15, 0 <= g <= pi(d,5)")
            continue
        n = len(entry.components)
        ids = [c.id for c in entry.components]
        if entry.status == "empty":
            ok = n == 0 and entry.count == 0
        elif entry.status == "irreducible":
            ok = n == 1 and entry.count == 1
        else:
            ok = entry.status == "reducible" and n >= 2 and entry.count == n
        rep.add(d, g, "", "status", ok and len(set(ids)) == n, f"{entry.status} count={entry.count} components={n}")
        sv = entry.severi
        if sv:
            try:
                comp = entry.component(sv.component)
                val = severi_moduli_dim(sv.ambient, sv.degree, sv.delta)
                ok = comp.moduli_image is not None and comp.moduli_image[0] == "stated" and comp.moduli_image[1] == val
                rep.add(d, g, sv.component, "severi", ok, f"dim|L| - delta - aut = {val}, stored {comp.moduli_image}")
            except (KeyError, InvalidInput, ValueError) as exc:
                rep.add(d, g, sv.component, "severi", False, str(exc))
        for comp in entry.components:
            try:
                _check_component(rep, cat, entry, comp, _model_refs)
            except (InvalidInput, SequenceAssumptionViolated, UnknownComponent, KeyError, ValueError) as exc:
                rep.add(d, g, comp.id, "internal", False, f"{type(exc).__name__}: {exc}")
    return sorted(rep.results, key=lambda r: (r.d, r.g, r.check, r.component))


def failures(results: list[CheckResult]) -> list[CheckResult]:
    return [r for r in results if not r.passed]
