"""Exact univariate real-root counting over the rationals.

Polynomials are coefficient lists in increasing degree, entries ``int`` or
``Fraction``.  Everything here is exact; nothing is ever evaluated in floating
point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def evaluate(p: Sequence, x) -> Fraction | int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def rem(p: Sequence, q: Sequence) -> Poly:
    """Remainder of p modulo q in Q[x]."""
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    lead = q[-1]
    while len(p) - 1 >= dq and p:
        f = p[-1] / lead
        shift = len(p) - 1 - dq
        for i, c in enumerate(q):
            p[shift + i] -= f * c
        p = trim(p)
    return p


def quotient(p: Sequence, q: Sequence) -> Poly:
    """Exact quotient of p by q in Q[x] (the remainder is discarded)."""
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    out = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        f = p[-1] / q[-1]
        shift = len(p) - len(q)
        out[shift] = f
        for i, c in enumerate(q):
            p[shift + i] -= f * c
        p = trim(p)
    return trim(out)


def gcd(p: Sequence, q: Sequence) -> Poly:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, rem(p, q)
    return p


def signed_remainder_sequence(p: Sequence, q: Sequence) -> list[Poly]:
    seq = [trim(p), trim(q)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return [s for s in seq if s]


def sturm_sequence(p: Sequence) -> list[Poly]:
    return signed_remainder_sequence(p, derivative(p))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at_infinity(seq: Sequence[Poly], positive: bool) -> list[int]:
    out = []
    for s in seq:
        lead = _sign(s[-1])
        if not positive and (len(s) - 1) % 2 == 1:
            lead = -lead
        out.append(lead)
    return out


def variations_at(seq: Sequence[Poly], x) -> int:
    return _variations([_sign(evaluate(s, x)) for s in seq])


def count_real_roots(p: Sequence, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval
    (lo, hi]; ``None`` bounds mean infinity."""
    p = trim(p)
    if len(p) <= 1:
        if not p:
            raise ValueError("the zero polynomial has infinitely many roots")
        return 0
    seq = sturm_sequence(p)
    v_lo = _variations(_signs_at_infinity(seq, False)) if lo is None else variations_at(seq, lo)
    v_hi = _variations(_signs_at_infinity(seq, True)) if hi is None else variations_at(seq, hi)
    return v_lo - v_hi


def tarski_query(q: Sequence, p: Sequence) -> int:
    """Sum of sign(q(x)) over the distinct real roots x of p (Sylvester)."""
    p = trim(p)
    if len(p) <= 1:
        return 0
    seq = signed_remainder_sequence(p, mul(derivative(p), q))
    return _variations(_signs_at_infinity(seq, False)) - _variations(_signs_at_infinity(seq, True))


def root_bound(p: Sequence) -> Fraction:
    """Cauchy bound: every real root lies in (-B, B)."""
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max(abs(Fraction(c)) for c in p[:-1]) / lead if len(p) > 1 else Fraction(1)


def isolate_roots(p: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each containing exactly one real root of p."""
    p = trim(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    b = root_bound(p)
    out = []

    def count(lo, hi):
        return variations_at(seq, lo) - variations_at(seq, hi)

    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = count(lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def refine(p: Sequence, interval: tuple[Fraction, Fraction], width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval until it is narrower than ``width``."""
    seq = sturm_sequence(p)
    lo, hi = interval
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if variations_at(seq, lo) - variations_at(seq, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi
