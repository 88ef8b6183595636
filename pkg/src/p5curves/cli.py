"""Command line interface.

Exit status is 0 on success, 1 when ``check`` finds failures, and 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import build_catalog, catalog_query, default_catalog
from .checks import check_all, failures, profile_for
from .data import read_dataset
from .errors import InvalidInput, ParityViolation, SequenceAssumptionViolated, UnknownComponent, UnsupportedFormat
from .hilbert import DEFAULT_T_MAX, maximal_rank_profile, special_profile
from .invariants import (
    PI1_MAX_D,
    PI1_MIN_D,
    DGR,
    castelnuovo_pi,
    castelnuovo_pi1_p5,
    classical_invariants,
)
from .models import enumerate_models, family_dimension_count
from .render import FORMATS, render
from .surface_cohomology import BidegreeClass, FeClass, cohomology_bidegree, cohomology_fe


def _emit(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def _kv(pairs: list[tuple[str, object]], fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(dict(pairs)) + "\n").encode()
    if fmt not in ("text", "csv", "markdown"):
        raise UnsupportedFormat(fmt)
    if fmt == "csv":
        return (",".join(k for k, _ in pairs) + "\n" + ",".join("" if v is None else str(v) for _, v in pairs) + "\n").encode()
    w = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(w)}  {'' if v is None else v}\n" for k, v in pairs).encode()


def cmd_bounds(a) -> int:
    pairs = [("pi", castelnuovo_pi(a.d, a.r))]
    if a.r == 5 and PI1_MIN_D <= a.d <= PI1_MAX_D:
        pairs.append(("pi1", castelnuovo_pi1_p5(a.d)))
    _emit(_kv(pairs, a.format))
    return 0


def cmd_invariants(a) -> int:
    inv = classical_invariants(DGR(a.d, a.g, a.r))
    _emit(_kv([("pi", inv.pi), ("pi1", inv.pi1), ("rho", inv.rho), ("lambda", inv.lam),
               ("expected_dim", inv.expected_dim)], a.format))
    return 0


def cmd_enumerate(a) -> int:
    rows = []
    for m in enumerate_models(a.d, a.g):
        try:
            fam = family_dimension_count(m, include_ambient=True).family_dim
        except InvalidInput:
            fam = None
        rows.append({"surface": m.surface.kind, "class": list(m.surface.key()), "degree": m.degree,
                     "genus": m.genus, "pencils": list(m.ruling_pencils), "maroni": m.maroni,
                     "family_dim": fam, "flags": list(m.flags)})
    if a.format == "json":
        _emit((json.dumps({"d": a.d, "g": a.g, "models": rows, "schema": 1}) + "\n").encode())
        return 0
    if a.format not in FORMATS:
        raise UnsupportedFormat(a.format)
    sep = "," if a.format == "csv" else "  "
    lines = [sep.join(["surface", "class", "pencils", "maroni", "family_dim", "flags"])]
    for r in rows:
        lines.append(sep.join([r["surface"], " ".join(map(str, r["class"])), " ".join(map(str, r["pencils"])),
                               "" if r["maroni"] is None else str(r["maroni"]),
                               "" if r["family_dim"] is None else str(r["family_dim"]), " ".join(r["flags"])]))
    _emit(("\n".join(lines) + "\n").encode())
    return 0


def cmd_cohomology(a) -> int:
    if a.kind == "fe":
        c = cohomology_fe(FeClass(a.e, a.x, a.y))
    else:
        c = cohomology_bidegree(BidegreeClass(a.a, a.b))
    _emit(_kv([("h0", c.h0), ("h1", c.h1), ("h2", c.h2)], a.format))
    return 0


def cmd_hilbert(a) -> int:
    profiles = {}
    if a.component:
        profiles[a.component] = special_profile(a.d, a.g, a.component, a.tmax)
    elif 5 <= a.d <= 15:
        entry = catalog_query(a.d, a.g)
        if not entry.components:
            raise InvalidInput(f"H({a.d},{a.g},5) is empty")
        for c in entry.components:
            profiles[c.id] = profile_for(entry, c, default_catalog(), a.tmax)
    else:
        profiles["maximal-rank"] = maximal_rank_profile(a.d, a.g, a.tmax)
    for label, p in profiles.items():
        if len(profiles) > 1 and a.format in ("text", "markdown"):
            _emit(f"component {label}\n".encode())
        _emit(render(p, a.format))
    if a.figure:
        from .plotting import plot_profiles

        plot_profiles(profiles, a.figure)
    return 0


def cmd_catalog(a) -> int:
    if a.g is None:
        _emit(render(default_catalog().degree_table(a.d), a.format))
    else:
        _emit(render(catalog_query(a.d, a.g), a.format))
    return 0


def cmd_table(a) -> int:
    entries = default_catalog().degree_table(a.d) if 5 <= a.d <= 15 else catalog_query(a.d, 0)
    _emit(render(entries, a.format))
    if a.figure:
        from .plotting import plot_degree_table

        plot_degree_table(entries, a.figure)
    return 0


def cmd_check(a) -> int:
    cat = None
    if a.data:
        try:
            cat = build_catalog(read_dataset(a.data))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InvalidInput(f"cannot load {a.data}: {exc}") from exc
    results = check_all(cat)
    bad = failures(results)
    if a.json:
        _emit((json.dumps({"schema": 1, "total": len(results), "failed": len(bad),
                           "results": [r.as_dict() for r in results]}) + "\n").encode())
    else:
        for r in bad:
            _emit(f"FAIL d={r.d} g={r.g} {r.component} {r.check}: {r.details}\n".encode())
        _emit(f"{len(results) - len(bad)}/{len(results)} checks passed\n".encode())
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p5curves", description="Curves in P^5: invariants, models, Hilbert functions, catalog.")
    sub = p.add_subparsers(dest="cmd", required=True)

    def fmt(sp, default="text"):
        sp.add_argument("--format", default=default, help=f"one of {', '.join(FORMATS)}")

    sp = sub.add_parser("bounds", help="Castelnuovo bounds pi(d,r), and pi1 in P^5")
    sp.add_argument("d", type=int)
    sp.add_argument("r", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("invariants", help="rho, lambda and expected dimension")
    sp.add_argument("d", type=int)
    sp.add_argument("g", type=int)
    sp.add_argument("r", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("enumerate", help="surface models of degree d and genus g")
    sp.add_argument("d", type=int)
    sp.add_argument("g", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("cohomology", help="line bundle cohomology on F_e or P^1 x P^1")
    csub = sp.add_subparsers(dest="kind", required=True)
    fe = csub.add_parser("fe")
    fe.add_argument("--e", type=int, required=True)
    fe.add_argument("--x", type=int, required=True)
    fe.add_argument("--y", type=int, required=True)
    fmt(fe)
    bd = csub.add_parser("bidegree")
    bd.add_argument("--a", type=int, required=True)
    bd.add_argument("--b", type=int, required=True)
    fmt(bd)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("hilbert", help="Hilbert function profile h0, h1 of I_X(t)")
    sp.add_argument("d", type=int)
    sp.add_argument("g", type=int)
    sp.add_argument("--component")
    sp.add_argument("--tmax", type=int, default=DEFAULT_T_MAX)
    sp.add_argument("--figure", help="also write a plot of the profiles to this file")
    fmt(sp)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("catalog", help="catalog entry for (d, g), or the whole degree")
    sp.add_argument("d", type=int)
    sp.add_argument("g", type=int, nargs="?")
    fmt(sp)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("check", help="cross-validate the catalog")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--data", help="check this dataset file instead of the shipped one")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("table", help="one row per genus for degree d")
    sp.add_argument("d", type=int)
    sp.add_argument("--figure", help="also write a plot of the table to this file")
    fmt(sp)
    sp.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, UnsupportedFormat, UnknownComponent, ParityViolation, SequenceAssumptionViolated) as exc:
        msg = exc.args[0] if exc.args else type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
