"""Helpers for single-integer mutations of the shipped dataset."""

from __future__ import annotations

import copy


def int_paths(obj, path=()):
    """Paths to every stored integer (booleans and the schema tag excluded)."""
    if isinstance(obj, bool):
        return
    if isinstance(obj, int):
        yield path
        return
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k != "schema":
                yield from int_paths(v, path + (k,))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from int_paths(v, path + (i,))


def mutate(dataset: dict, path: tuple, delta: int) -> dict:
    out = copy.deepcopy(dataset)
    node = out
    for k in path[:-1]:
        node = node[k]
    node[path[-1]] += delta
    return out


def targeted_paths(dataset: dict) -> list[tuple]:
    """Every component dimension, every stored h0 value and every component count."""
    paths = []
    for i, e in enumerate(dataset["entries"]):
        if "count" in e:
            paths.append(("entries", i, "count"))
        for j, _ in enumerate(e["components"]):
            paths.append(("entries", i, "components", j, "dimension"))
    for key, rec in dataset["profiles"].items():
        for t, _ in enumerate(rec["head"]):
            paths.append(("profiles", key, "head", t, 0))
        paths.append(("profiles", key, "tail_h0_offset"))
    return paths
