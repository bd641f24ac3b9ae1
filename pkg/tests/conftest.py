"""Shared helpers: small builders, an independent brute-force polygon
enumerator, and random map generators used across the suite."""

import random
from itertools import combinations

from lattice_equiv import LatticePolytope, oracle_equivalent


def poly(*verts):
    return LatticePolytope(2, tuple(verts))


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def strict_hull(points):
    """Monotone-chain hull keeping only strict vertices.  Deliberately a
    second implementation, kept independent of the package's internals so
    it can serve as an enumeration oracle."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return None
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]
    return cycle if len(cycle) >= 3 else None


def brute_polygon_sets(points):
    """Every vertex set of a convex polygon on the given points, found by
    checking all subsets for strict convex position.  Exponential, for
    tiny regions only."""
    pts = sorted(set(points))
    found = set()
    for size in range(3, len(pts) + 1):
        for subset in combinations(pts, size):
            hull = strict_hull(subset)
            if hull is not None and len(hull) == size:
                found.add(frozenset(subset))
    return found


def oracle_class_count(polys, mode):
    reps = []
    for p in polys:
        if not any(oracle_equivalent(p, r, mode) for r in reps):
            reps.append(p)
    return len(reps)


def random_unimodular(rng, shears=4):
    """Random 2x2 integer matrix with determinant +-1, as a product of
    shears, with an optional swap for determinant -1."""
    m = [[1, 0], [0, 1]]
    for _ in range(shears):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            m = [[m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]], m[1]]
        else:
            m = [m[0], [m[1][0] + k * m[0][0], m[1][1] + k * m[0][1]]]
    if rng.random() < 0.5:
        m = [m[1], m[0]]
    return tuple(tuple(row) for row in m)


def apply_int_map(points, matrix, shift):
    d = len(shift)
    return [tuple(sum(p[i] * matrix[i][j] for i in range(d)) + shift[j]
                  for j in range(d)) for p in points]


def random_polygon(rng, span=4, tries=50):
    """Random small polygon: hull of a handful of random points."""
    for _ in range(tries):
        pts = {(rng.randint(-span, span), rng.randint(-span, span))
               for _ in range(rng.randint(3, 7))}
        hull = strict_hull(pts)
        if hull is not None:
            return LatticePolytope(2, tuple(hull))
    raise AssertionError("random polygon generation failed")


def seeded(seed):
    return random.Random(seed)
