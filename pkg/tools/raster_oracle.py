"""Floating-point oracle for the walls bounding the region of one point.

Samples the sphere (double cover of the plane) densely, flood-fills the
component of the moving point in the complement of the obstacle curves and
reports which curves its boundary touches.  Independent of the exact code
path search; used only to cross-check it.
"""
import itertools
import numpy as np
from scipy.spatial import cKDTree


def sphere(n):
    i = np.arange(n) + 0.5
    phi = np.arccos(1 - 2 * i / n)
    th = np.pi * (1 + 5 ** 0.5) * i
    return np.stack([np.cos(th) * np.sin(phi), np.sin(th) * np.sin(phi), np.cos(phi)], 1)


def conic_through(ps):
    rows = [[x * x, y * y, z * z, x * y, x * z, y * z] for x, y, z in ps]
    _, _, vt = np.linalg.svd(np.array(rows, float))
    return vt[-1]


def walls(pts, x, n=400000, k=8, conics=True):
    P = {k_: np.array(v, float) / np.linalg.norm(v) for k_, v in pts.items()}
    others = [y for y in P if y != x]
    obs = []
    for p, q in itertools.combinations(others, 2):
        obs.append(((p, q), "l", np.cross(P[p], P[q])))
    if conics:
        for five in itertools.combinations(others, 5):
            obs.append((five, "c", conic_through([P[y] for y in five])))
    X = sphere(n)
    start = P[x]
    X = np.vstack([X, start[None]])

    def vals(o, V):
        if o[1] == "l":
            return V @ o[2]
        c = o[2]
        return (c[0] * V[:, 0] ** 2 + c[1] * V[:, 1] ** 2 + c[2] * V[:, 2] ** 2
                + c[3] * V[:, 0] * V[:, 1] + c[4] * V[:, 0] * V[:, 2] + c[5] * V[:, 1] * V[:, 2])

    S = np.stack([np.sign(vals(o, X)) for o in obs], 1).astype(np.int8)
    tree = cKDTree(X)
    _, nb = tree.query(X, k=k + 1)
    s0 = S[-1]
    same = np.all(S == s0, axis=1)
    comp = np.zeros(len(X), bool)
    comp[-1] = True
    stack = [len(X) - 1]
    while stack:
        i = stack.pop()
        for j in nb[i, 1:]:
            if same[j] and not comp[j]:
                comp[j] = True
                stack.append(j)
    out = set()
    idx = np.nonzero(comp)[0]
    for i in idx:
        for j in nb[i, 1:]:
            if not comp[j]:
                diff = np.nonzero(S[j] != s0)[0]
                if len(diff) == 1:
                    out.add(tuple(sorted(obs[diff[0]][0])))
    return out, int(comp.sum())
