"""Deterministic text, markdown, CSV and JSON renderings."""

from __future__ import annotations

import csv
import io
import json

from .catalog import Catalog, CatalogEntry, ComponentRecord, default_catalog, fiber_to_raw
from .checks import profile_for
from .errors import UnsupportedFormat
from .hilbert import HilbertProfile
from .invariants import castelnuovo_pi, expected_dim

FORMATS = ("text", "markdown", "csv", "json")
SCHEMA = 1
PROFILE_COLUMNS = 5


def _relation(c: ComponentRecord) -> str:
    return f"exceeds by {c.relation[1]}" if c.relation[0] == "exceeds" else "expected"


def _profile_ref(c: ComponentRecord) -> str:
    ref = c.profile_ref
    if ref[0] == "extremal":
        return "extremal " + " ".join(str(v) for v in ref[1])
    if ref[0] == "special":
        return f"special {ref[1]}"
    return "maximal rank"


def _fiber(c: ComponentRecord) -> str:
    raw = fiber_to_raw(c.fiber)
    if raw is None:
        return ""
    return " x ".join(f[0] if len(f) == 1 else f"{f[0]}({' '.join(map(str, f[1:]))})" for f in raw)


def _opt(v) -> str:
    return "" if v is None else str(v)


def _yn(v: bool) -> str:
    return "yes" if v else "no"


def _entry_rows(entry: CatalogEntry, cat: Catalog, sep: str) -> tuple[list[str], list[list[str]]]:
    header = ["d", "g", "status", "component", "dim", "expected", "relation", "gonality", "maroni",
              "linearly_normal", "acm", "fiber", "profile", "h0(I(t)) t=1.."]
    rows = []
    x = expected_dim(entry.d, entry.g)
    for c in entry.components:
        prof = profile_for(entry, c, cat, PROFILE_COLUMNS)
        rows.append([str(entry.d), str(entry.g), entry.status, c.id, str(c.dimension), str(x), _relation(c),
                     _opt(c.gonality), _opt(c.maroni), _yn(c.linearly_normal), _yn(c.acm_general_member),
                     _fiber(c), _profile_ref(c), sep.join(map(str, prof.h0()))])
    if not entry.components:
        rows.append([str(entry.d), str(entry.g), entry.status] + [""] * (len(header) - 3))
    return header, rows


def _table_rows(entries: list[CatalogEntry]) -> tuple[list[str], list[list[str]]]:
    header = ["d", "g", "pi", "expected", "status", "components", "ids", "dims"]
    rows = []
    for e in entries:
        rows.append([str(e.d), str(e.g), str(castelnuovo_pi(e.d, 5)), str(expected_dim(e.d, e.g)), e.status,
                     str(len(e.components)), ";".join(c.id for c in e.components),
                     ";".join(str(c.dimension) for c in e.components)])
    return header, rows


def _profile_rows(p: HilbertProfile) -> tuple[list[str], list[list[str]]]:
    header = ["t", "h0_ideal", "h1_ideal", "h1_curve"]
    rows = [[str(t), str(e.h0_ideal), str(e.h1_ideal), str(e.h1_curve)] for t, e in sorted(p.entries.items())]
    return header, rows


def component_json(entry: CatalogEntry, c: ComponentRecord, cat: Catalog) -> dict:
    prof = profile_for(entry, c, cat)
    return {
        "id": c.id,
        "dimension": c.dimension,
        "expected_dim": expected_dim(entry.d, entry.g),
        "relation": {"kind": c.relation[0], **({"by": c.relation[1]} if c.relation[0] == "exceeds" else {})},
        "gonality": c.gonality,
        "maroni": c.maroni,
        "linearly_normal": c.linearly_normal,
        "acm": c.acm_general_member,
        "fiber": fiber_to_raw(c.fiber),
        "profile": {"ref": _profile_ref(c), "h0": prof.h0(), "h1": prof.h1(), "h1_curve": prof.h1_curve()},
        "models": [list(m) for m in c.models],
        "notes": c.notes,
    }


def entry_json(entry: CatalogEntry, cat: Catalog) -> dict:
    out = {"d": entry.d, "g": entry.g, "status": entry.status,
           "components": [component_json(entry, c, cat) for c in entry.components]}
    if entry.severi:
        s = entry.severi
        out["severi"] = {"component": s.component, "ambient": s.ambient, "degree": list(s.degree), "delta": s.delta}
    if entry.notes:
        out["notes"] = entry.notes
    out["schema"] = SCHEMA
    return out


def profile_json(p: HilbertProfile) -> dict:
    return {"d": p.d, "g": p.g,
            "entries": [{"t": t, "h0_ideal": e.h0_ideal, "h1_ideal": e.h1_ideal, "h1_curve": e.h1_curve}
                        for t, e in sorted(p.entries.items())],
            "flags": {"acm": p.flags.acm, "linearly_normal": p.flags.linearly_normal,
                      "maximal_rank": p.flags.maximal_rank},
            "schema": SCHEMA}


def _text(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines) + "\n"


def _markdown(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render(obj, fmt: str, catalog: Catalog | None = None) -> bytes:
    """Render a CatalogEntry, a list of entries (degree table) or a HilbertProfile."""
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"unsupported format {fmt!r}; choose from {', '.join(FORMATS)}")
    cat = catalog or default_catalog()
    if fmt == "json":
        if isinstance(obj, HilbertProfile):
            data = profile_json(obj)
        elif isinstance(obj, CatalogEntry):
            data = entry_json(obj, cat)
        else:
            data = {"entries": [entry_json(e, cat) for e in obj], "schema": SCHEMA}
        return (json.dumps(data, ensure_ascii=False) + "\n").encode("utf-8")
    if isinstance(obj, HilbertProfile):
        header, rows = _profile_rows(obj)
    elif isinstance(obj, CatalogEntry):
        header, rows = _entry_rows(obj, cat, ";" if fmt == "csv" else ",")
    else:
        header, rows = _table_rows(list(obj))
    body = {"text": _text, "markdown": _markdown, "csv": _csv}[fmt](header, rows)
    return body.encode("utf-8")
