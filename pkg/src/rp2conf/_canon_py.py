"""Pure-Python versions of the relabelling kernels."""

from __future__ import annotations

import itertools

_PAIR = [[-1] * 8 for _ in range(8)]
for _k, (_a, _b) in enumerate(itertools.combinations(range(1, 8), 2)):
    _PAIR[_a][_b] = _PAIR[_b][_a] = _k


def relabel_mask(pairs, sigma) -> int:
    """Bit mask of the relabelled edge set ``pairs`` (labels 1..7)."""
    m = 0
    for a, b in pairs:
        m |= 1 << _PAIR[sigma[a]][sigma[b]]
    return m


def best_labelling(encode, data, candidates):
    """Smallest ``encode(data, sigma)`` over the candidate labellings, with
    the first labelling achieving it."""
    best = arg = None
    for sigma in candidates:
        enc = encode(data, sigma)
        if best is None or enc < best:
            best, arg = enc, sigma
    return best, arg


def best_encoding(encode, data, candidates):
    return best_labelling(encode, data, candidates)[0]


def six_best(pairs, interior, perms):
    """Minimum six-point encoding over candidate relabellings.

    ``pairs[i]`` lists the ten edges (first the five of the conic word,
    then the five of the pencil sequence) attached to point ``i`` (0..5),
    with endpoints 0..5; ``interior[i]`` is 0 or 1; each permutation maps
    point ``i`` to the new label ``perm[i]`` (0..5).  The encoding is the
    integer list (interior bits, six word masks, six pencil masks) in the
    order of the new labels.  Returns (encoding, indices of the minimising
    permutations)."""
    best = None
    args: list[int] = []
    for k, perm in enumerate(perms):
        inv = [0] * 6
        for i in range(6):
            inv[perm[i]] = i
        bits = 0
        for j in range(6):
            if interior[inv[j]]:
                bits |= 1 << j
        enc = [bits]
        for half in (0, 5):
            for j in range(6):
                m = 0
                for a, b in pairs[inv[j]][half : half + 5]:
                    m |= 1 << _PAIR[perm[a] + 1][perm[b] + 1]
                enc.append(m)
        if best is None or enc < best:
            best, args = enc, [k]
        elif enc == best:
            args.append(k)
    return tuple(best), args
