"""Shipped representatives: zones of the pencil at 1, the four six-point
classes, the eleven coconic arrangements and the fourteen seven-point
classes.  Coordinates are exact integers read from ``data/catalog.txt``."""

from __future__ import annotations

import functools
import re
from importlib import resources

from .exact import primitive_ints

CATALOG_VERSION = 1

SIX_ZONES = {"alpha": "A", "beta": "B", "gamma": "C", "delta": "D"}


def _parse_coord(tok: str):
    from fractions import Fraction

    return Fraction(tok)


def parse_points(lines) -> dict[int, tuple[int, int, int]]:
    """Points from text lines "x0 x1 x2" (integers or rationals), labelled
    1, 2, ... in order; blank lines and '#' comments are skipped."""
    from math import lcm

    out = {}
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ValueError(f"expected three coordinates, got {line!r}")
        vals = [_parse_coord(t) for t in toks]
        d = lcm(*(v.denominator for v in vals))
        out[len(out) + 1] = primitive_ints([int(v * d) for v in vals])
    return out


def format_points(pts) -> str:
    return "\n".join(" ".join(str(c) for c in pts[k]) for k in sorted(pts)) + "\n"


@functools.lru_cache(maxsize=None)
def _entries() -> dict[tuple[str, str], dict]:
    text = resources.files("rp2conf").joinpath("data/catalog.txt").read_text(encoding="utf-8")
    out: dict[tuple[str, str], list] = {}
    cur = None
    version = None
    for line in text.splitlines():
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        m = re.fullmatch(r"\[(\w+) (.+)\]", s)
        if m:
            cur = (m.group(1), m.group(2))
            out[cur] = []
        elif s.startswith("version"):
            version = int(s.split()[1])
        elif cur is not None:
            out[cur].append(s)
    if version != CATALOG_VERSION:
        raise ValueError(f"catalog version {version} is not supported")
    return {k: parse_points(v) for k, v in out.items()}


def entry(kind: str, name: str) -> dict[int, tuple[int, int, int]]:
    return dict(_entries()[(kind, name)])


def names(kind: str) -> list[str]:
    return [n for k, n in _entries() if k == kind]


def zone_representative(letter: str) -> dict:
    return entry("zone", letter)


def six_representatives() -> dict[str, dict]:
    return {name: zone_representative(z) for name, z in SIX_ZONES.items()}


def coconic_representative(letter: str) -> dict:
    """Points 1..6 in this order on a conic, 7 in the zone ``letter``."""
    return entry("coconic", letter)


def seven_representatives() -> dict[str, dict]:
    """The fourteen seven-point classes keyed by construction name."""
    return {n: entry("seven", n) for n in names("seven")}


def representatives_catalog() -> dict[str, dict[str, dict]]:
    out = {"six": six_representatives(), "seven": seven_representatives()}
    for kind in ("zone", "coconic", "pushed"):
        out[kind] = {n: entry(kind, n) for n in names(kind)}
    return out


@functools.lru_cache(maxsize=None)
def zone_table() -> dict[tuple, str]:
    from .classify import zone_code

    return {zone_code(zone_representative(z), 1): z for z in names("zone")}
