"""Parser for the shipped golden tables (``data/golden_tables.txt``)."""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class Member:
    """One entry of a pencil row: ``line`` holds the pair ``(node, m)`` of a
    reducible cubic or the two pairs of a line pair; ``word`` is a conic word."""

    line: tuple | None
    word: tuple | None


def _digits(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


def parse_member(tok: str) -> Member:
    if "∪" in tok:
        a, b = tok.split("∪")
        if len(b) == 2:
            return Member((_digits(a), _digits(b)), None)
        return Member(_digits(a), _digits(b))
    return Member(None, _digits(tok))


@functools.lru_cache(maxsize=None)
def raw_sections() -> dict[str, list[str]]:
    text = resources.files("rp2conf").joinpath("data/golden_tables.txt").read_text(encoding="utf-8")
    out: dict[str, list[str]] = {}
    cur = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"\[(\w+)\]", line)
        if m:
            cur = m.group(1)
            out[cur] = []
        elif cur is not None:
            out[cur].append(line)
    return out


def _split(line: str) -> list[list[str]]:
    return [part.split() for part in line.split("|")]


@functools.lru_cache(maxsize=None)
def cubic_pencils() -> dict[str, list[Member]]:
    return {h[0]: [parse_member(t) for t in body] for h, body in map(_split, raw_sections()["cubic_pencils"])}


@functools.lru_cache(maxsize=None)
def conic_pencils() -> dict[str, tuple[tuple[int, ...], list[Member]]]:
    out = {}
    for h, body in map(_split, raw_sections()["conic_pencils"]):
        out[h[0]] = (_digits(h[1]), [parse_member(t) for t in body])
    return out


@dataclass(frozen=True)
class SixListRow:
    cls: str
    zone: str
    node: int
    interior: bool
    conic: tuple[int, ...]
    members: tuple[Member, ...]


@functools.lru_cache(maxsize=None)
def six_lists() -> list[SixListRow]:
    rows = []
    for h, body in map(_split, raw_sections()["six_lists"]):
        cls, zone, node, side, conic = h
        rows.append(SixListRow(cls, zone, int(node), side == "<", _digits(conic), tuple(parse_member(t) for t in body)))
    return rows


@functools.lru_cache(maxsize=None)
def quadruples() -> dict[str, str]:
    return {h[0]: b[0] for h, b in map(_split, raw_sections()["quadruples"])}


@dataclass(frozen=True)
class AdjacencyRow:
    start: str
    triple: tuple[int, ...]
    wall: str
    end: str


@functools.lru_cache(maxsize=None)
def line_adjacency() -> list[AdjacencyRow]:
    return [AdjacencyRow(h[0], _digits(b[0]), b[1], b[2]) for h, b in map(_split, raw_sections()["line_adjacency"])]


@functools.lru_cache(maxsize=None)
def conic_adjacency() -> list[tuple[str, str, str]]:
    return [(h[0], b[0], b[1]) for h, b in map(_split, raw_sections()["conic_adjacency"])]


@functools.lru_cache(maxsize=None)
def coconic_triples() -> dict[str, list[tuple[int, ...]]]:
    return {h[0]: [_digits(t) for t in b] for h, b in map(_split, raw_sections()["coconic_triples"])}


@dataclass(frozen=True)
class LineConicWall:
    letter_triple: str
    wall: str
    conic: tuple[int, ...]
    equivalents: tuple[str, ...]


@functools.lru_cache(maxsize=None)
def line_conic_walls() -> list[LineConicWall]:
    out = []
    for h, w, e in map(_split, raw_sections()["line_conic_walls"]):
        out.append(LineConicWall(h[0], w[0], _digits(w[1]), tuple(e)))
    return out


@dataclass(frozen=True)
class RefinedRow:
    start: str
    wall: str
    end: str
    representative: str
    triple: tuple[int, ...]


@functools.lru_cache(maxsize=None)
def refined_adjacency() -> list[RefinedRow]:
    out = []
    for a, w, b, r in map(_split, raw_sections()["refined_adjacency"]):
        out.append(RefinedRow(a[0], w[0], b[0], r[0], _digits(r[1])))
    return out
