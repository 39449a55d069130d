"""Reproducible random censuses of six, seven and coconic configurations."""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .classify import UnknownClass, seven_class, six_class_name, six_data, six_fingerprint_of
from .exact import genericity_report, positive_multiple
from .walls import COCONIC, NonRealizableDiagram, conic_wall_code, conic_wall_table, degeneracy_detect

KINDS = ("six", "seven", "coconic")


def substream(seed: int, index: int) -> random.Random:
    """Independent generator for sample ``index``; string seeds are hashed
    deterministically, so results do not depend on worker scheduling."""
    return random.Random(f"rp2conf:{seed}:{index}")


def random_point(rng: random.Random, bound: int) -> tuple[int, int, int]:
    while True:
        p = tuple(rng.randint(-bound, bound) for _ in range(3))
        if any(p):
            return p


def random_generic(rng: random.Random, n: int, bound: int) -> tuple[dict, int]:
    """Generic integer points with coordinates in [-bound, bound], and the
    number of rejected draws."""
    rejected = 0
    while True:
        pts = {i: random_point(rng, bound) for i in range(1, n + 1)}
        if genericity_report(pts).fully_generic:
            return pts, rejected
        rejected += 1


def circle_point(t: Fraction) -> tuple[int, int, int]:
    u, v = t.numerator, t.denominator
    return positive_multiple((v * v - u * u, 2 * u * v, v * v + u * u))


def random_coconic(rng: random.Random, bound: int) -> tuple[dict, int]:
    """Points 1..6 at random rational points of the unit circle, 7 at a
    random integer point; only the six coconic points may be special."""
    rejected = 0
    while True:
        ts = set()
        while len(ts) < 6:
            ts.add(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        pts = {i + 1: circle_point(t) for i, t in enumerate(rng.sample(sorted(ts), 6))}
        pts[7] = random_point(rng, bound)
        d = degeneracy_detect(pts)
        if d.kind == COCONIC and d.labels == (1, 2, 3, 4, 5, 6):
            return pts, rejected
        rejected += 1


@dataclass
class CensusResult:
    kind: str
    samples: int
    histogram: Counter = field(default_factory=Counter)
    fingerprints: set = field(default_factory=set)
    rejected: int = 0
    failures: list = field(default_factory=list)  # (index, message)

    @property
    def ok(self) -> bool:
        return not self.failures


def _one(kind: str, seed: int, index: int, bound: int):
    rng = substream(seed, index)
    if kind == "six":
        pts, rej = random_generic(rng, 6, bound)
        data = six_data(pts)
        fp = six_fingerprint_of(data)
        try:
            return six_class_name(data), fp, rej, None
        except UnknownClass as e:
            return None, fp, rej, str(e)
    if kind == "seven":
        pts, rej = random_generic(rng, 7, bound)
        try:
            return seven_class(pts).name, None, rej, None
        except UnknownClass as e:
            return None, None, rej, str(e)
    pts, rej = random_coconic(rng, bound)
    try:
        code = conic_wall_code(pts, 7)
    except NonRealizableDiagram as e:
        return None, None, rej, str(e)
    letter = conic_wall_table().get(code)
    if letter is None:
        return None, code, rej, f"conic-wall code {code} not in the catalog"
    return letter, code, rej, None


def _chunk(args):
    kind, seed, start, stop, bound = args
    return [_one(kind, seed, i, bound) for i in range(start, stop)]


def run_census(kind: str, samples: int, seed: int = 0, bound: int = 50, jobs: int = 1) -> CensusResult:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if samples < 1 or bound < 2:
        raise ValueError("samples >= 1 and bound >= 2 are required")
    step = max(1, samples // (8 * max(1, jobs)))
    chunks = [(kind, seed, s, min(s + step, samples), bound) for s in range(0, samples, step)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_chunk, chunks))
    else:
        parts = [_chunk(c) for c in chunks]
    out = CensusResult(kind, samples)
    index = 0
    for part in parts:
        for name, fp, rej, err in part:
            out.rejected += rej
            if err is not None:
                out.failures.append((index, err))
            else:
                out.histogram[name] += 1
            if fp is not None:
                out.fingerprints.add(fp)
            index += 1
    return out
