# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled relabelling kernels (same results as _canon_py)."""

import itertools

cdef int PAIR[8][8]
for _a in range(8):
    for _b in range(8):
        PAIR[_a][_b] = -1
for _k, (_a, _b) in enumerate(itertools.combinations(range(1, 8), 2)):
    PAIR[_a][_b] = _k
    PAIR[_b][_a] = _k


def relabel_mask(pairs, sigma):
    cdef long m = 0
    for a, b in pairs:
        m |= 1L << PAIR[<int>sigma[a]][<int>sigma[b]]
    return m


def best_labelling(encode, data, candidates):
    best = arg = None
    for sigma in candidates:
        enc = encode(data, sigma)
        if best is None or enc < best:
            best, arg = enc, sigma
    return best, arg


def best_encoding(encode, data, candidates):
    return best_labelling(encode, data, candidates)[0]


def six_best(pairs, interior, perms):
    cdef int ea[6][10]
    cdef int eb[6][10]
    cdef int inter[6]
    cdef int perm[6]
    cdef int inv[6]
    cdef long enc[13]
    cdef long best[13]
    cdef int i, j, h, k, n, better, tie
    args = []
    cdef long m
    for i in range(6):
        inter[i] = interior[i]
        for j in range(10):
            ea[i][j] = pairs[i][j][0]
            eb[i][j] = pairs[i][j][1]
    n = len(perms)
    for k in range(n):
        p = perms[k]
        for i in range(6):
            perm[i] = p[i]
            inv[perm[i]] = i
        m = 0
        for j in range(6):
            if inter[inv[j]]:
                m |= 1L << j
        enc[0] = m
        for h in range(2):
            for j in range(6):
                m = 0
                for i in range(5 * h, 5 * h + 5):
                    m |= 1L << PAIR[perm[ea[inv[j]][i]] + 1][perm[eb[inv[j]][i]] + 1]
                enc[1 + 6 * h + j] = m
        better = not args
        tie = 0
        if not better:
            tie = 1
            for i in range(13):
                if enc[i] != best[i]:
                    better = enc[i] < best[i]
                    tie = 0
                    break
        if better:
            args = [k]
            for i in range(13):
                best[i] = enc[i]
        elif tie:
            args.append(k)
    return tuple([best[i] for i in range(13)]), args
