"""Census experiments: enumerate convex lattice polygons in small regions
and deduplicate them into unimodular and affine classes.

The enumerator is an anchored depth-first search.  Each polygon is
generated exactly once, rooted at its lexicographically smallest vertex:
the remaining vertices appear in counterclockwise order, which as seen
from the root is strictly increasing angular order, so chains are built
over an angle-sorted candidate list with exact integer turn tests.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key

from .caps import resolve
from .equivalence import (
    affine_equivalent,
    canonical_polygon,
    canonical_triangle,
)
from .errors import (
    CapExceeded,
    DegenerateInput,
    DimensionMismatch,
    RegionTooLarge,
)
from .geometry import LatticePolytope, Region, lattice_points, normalized_volume
from .invariants import primitive_decomposition, volume_vector
from .lattices import sublattice_info


@dataclass(frozen=True)
class ClassCensus:
    region: Region
    h: int  # polygons in the region
    k: int  # unimodular classes among them
    a: int  # affine classes among them
    volume_histogram: tuple  # sorted (normalized volume, polygon count) pairs


@dataclass(frozen=True)
class PrimitivityReport:
    region: Region
    examined: int            # polygons whose vertex differences span Z^2
    counterexamples: tuple   # those among them with volume-vector content > 1


@dataclass(frozen=True)
class AffineMapCensus:
    region: Region
    examined_pairs: int
    distinct_maps: int
    max_row_norm_sq: object        # exact Fraction, or None if no witness
    normalized_constant_sq: object  # max_row_norm_sq / r**4 for balls


def _angle_sorted(root, points):
    """(direction, point) pairs sorted counterclockwise around the root,
    nearer point first on a shared ray.  All inputs are lex-greater than
    the root, so every direction lies in the right half plane and the
    cross-product comparison is a total order on rays."""
    items = [((q[0] - root[0], q[1] - root[1]), q) for q in points]

    def compare(a, b):
        (ax, ay), _ = a
        (bx, by), _ = b
        c = ax * by - ay * bx
        if c:
            return -1 if c > 0 else 1
        return (ax * ax + ay * ay) - (bx * bx + by * by)

    return sorted(items, key=cmp_to_key(compare))


def _root_polygons(points, root_index, max_vertices, max_volume, exact_only):
    """All strictly convex polygons whose lex-least vertex is
    points[root_index], as counterclockwise vertex tuples."""
    v0 = points[root_index]
    cands = _angle_sorted(v0, points[root_index + 1:])
    dirs = [c[0] for c in cands]
    pos = [c[1] for c in cands]
    m = len(cands)
    out = []
    chain = [v0]

    def extend(last, partial):
        tip = chain[-1]
        prev = chain[-2]
        for j in range(last + 1, m):
            pj = pos[j]
            if ((tip[0] - prev[0]) * (pj[1] - tip[1])
                    - (tip[1] - prev[1]) * (pj[0] - tip[0])) <= 0:
                continue  # not a strict left turn at the chain tip
            fan = dirs[last][0] * dirs[j][1] - dirs[last][1] * dirs[j][0]
            if fan <= 0:
                continue  # same ray through the root
            vol = partial + fan
            if max_volume is not None and vol > max_volume:
                continue
            close_tip = ((pj[0] - tip[0]) * (v0[1] - pj[1])
                         - (pj[1] - tip[1]) * (v0[0] - pj[0]))
            close_root = ((v0[0] - pj[0]) * (chain[1][1] - v0[1])
                          - (v0[1] - pj[1]) * (chain[1][0] - v0[0]))
            chain.append(pj)
            if close_tip > 0 and close_root > 0 and (
                    not exact_only or vol == max_volume):
                out.append(tuple(chain))
            if (max_vertices is None or len(chain) < max_vertices) and (
                    max_volume is None or vol < max_volume):
                extend(j, vol)
            chain.pop()

    for i in range(m):
        chain.append(pos[i])
        extend(i, 0)
        chain.pop()
    return out


def _root_worker(task):
    return _root_polygons(*task)


def enumerate_convex_polygons(region, max_vertices=None, *, caps=None,
                              workers=None):
    """Every full-dimensional convex polygon whose vertex set lies in the
    region's lattice points, each exactly once, sorted by (vertex count,
    serialized vertex cycle).  Points interior to the hull or to an edge
    never count as vertices.  The root branches are independent, so they
    can be distributed over worker processes without changing the output.
    """
    if region.dim != 2:
        raise DimensionMismatch("polygon enumeration requires dimension 2")
    caps = resolve(caps)
    pts = tuple(lattice_points(region))
    if len(pts) > caps.region_points:
        raise RegionTooLarge(
            f"{region.label()} has {len(pts)} lattice points, "
            f"cap is {caps.region_points}")
    tasks = [(pts, i, max_vertices, None, False) for i in range(len(pts))]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_root_worker, tasks))
    else:
        chunks = [_root_worker(task) for task in tasks]
    polys = [LatticePolytope(2, verts) for chunk in chunks for verts in chunk]
    polys.sort(key=lambda p: (len(p.vertices), p.serialize()))
    return polys


def _box_points(side):
    return tuple((x, y) for x in range(side + 1) for y in range(side + 1))


def _volume_bounded_polygons(side, volume):
    """Polygons with vertices in [0, side]^2 and normalized volume exactly
    `volume`, via the budgeted variant of the root search (no region-size
    cap: the volume budget itself prunes the tree)."""
    pts = _box_points(side)
    out = []
    for i in range(len(pts)):
        out.extend(_root_polygons(pts, i, None, volume, True))
    return [LatticePolytope(2, verts) for verts in out]


def census(region, *, caps=None, workers=None):
    """Counts (|H|, |K|, |A|): all polygons in the region, their
    unimodular classes, and their affine classes."""
    polys = enumerate_convex_polygons(region, caps=caps, workers=workers)
    canon = {}
    for poly in polys:
        canon.setdefault(canonical_polygon(poly).serialize(), poly)
    reps = [canon[key] for key in sorted(canon)]
    class_reps = []
    for rep in reps:
        if not any(affine_equivalent(rep, seen) for seen in class_reps):
            class_reps.append(rep)
    histogram = tuple(sorted(Counter(
        normalized_volume(poly) for poly in polys).items()))
    return ClassCensus(region, len(polys), len(canon), len(class_reps),
                       histogram)


def _divisors(v):
    return [i for i in range(1, v + 1) if v % i == 0]


def classes_by_volume(volume, shape="all", search_box_side=None, *, caps=None):
    """Number of unimodular classes with the given normalized volume.

    shape="triangles" generates the canonical candidates (g, b, a) with
    g*b = volume and 0 <= a < b directly and deduplicates them over
    relabelings; this is exact and needs no search box.  shape="all"
    searches the box [0, side]^2 (default side = volume) and counts
    canonical forms, so it is exact only for classes that have a member
    in that box.
    """
    caps = resolve(caps)
    if volume < 1:
        raise DegenerateInput("volume must be a positive integer")
    if volume > caps.max_volume:
        raise CapExceeded(f"volume {volume} above cap {caps.max_volume}")
    if shape == "triangles":
        keys = set()
        for g in _divisors(volume):
            b = volume // g
            for a in range(b):
                tri = LatticePolytope(2, ((0, 0), (g, 0), (a, b)))
                keys.add(canonical_triangle(tri).key)
        return len(keys)
    if shape != "all":
        raise DegenerateInput(f"unknown shape {shape!r}")
    side = volume if search_box_side is None else search_box_side
    if side < 1:
        raise DegenerateInput("search box side must be a positive integer")
    if side > caps.max_volume:
        raise CapExceeded(f"box side {side} above cap {caps.max_volume}")
    keys = set()
    for poly in _volume_bounded_polygons(side, volume):
        keys.add(canonical_polygon(poly).serialize())
    return len(keys)


def _minimal_volume_class_reps(volume, caps):
    """Canonical representatives, one per affine class, of the polygons
    with normalized volume `volume` whose vertex differences already
    generate Z^2 (so the class minimum is attained).  Searched within
    the box [0, volume]^2."""
    canon = {}
    for poly in _volume_bounded_polygons(volume, volume):
        if sublattice_info(poly).index != 1:
            continue
        form = canonical_polygon(poly)
        canon.setdefault(form.serialize(), form)
    forms = sorted(canon.values(), key=lambda p: (len(p.vertices), p.serialize()))
    class_reps = []
    for form in forms:
        if not any(affine_equivalent(form, seen) for seen in class_reps):
            class_reps.append(form)
    return class_reps


def build_volume_representatives(volume, *, caps=None):
    """Pairwise unimodular-inequivalent polytopes of normalized volume V,
    one per affine class with minimum volume V/i, over the divisors i.

    A representative whose class minimum is m = V/i is an index-1 polygon
    of volume m; applying the determinant-i embedding (x, y) -> (i*x, y)
    yields volume V again.  Distinct divisors give distinct class minima,
    so the combined list stays pairwise non-equivalent.
    """
    caps = resolve(caps)
    if volume < 1:
        raise DegenerateInput("volume must be a positive integer")
    if volume > caps.max_volume:
        raise CapExceeded(f"volume {volume} above cap {caps.max_volume}")
    out = []
    for i in _divisors(volume):
        for rep in _minimal_volume_class_reps(volume // i, caps):
            out.append(LatticePolytope(
                2, tuple((i * x, y) for x, y in rep.vertices)))
    return out


def primitivity_scan(region, *, caps=None, workers=None):
    """Look for polygons whose vertex differences generate all of Z^2 but
    whose volume vector still has content larger than 1.  An empty
    counterexample list means none exists at this scale."""
    polys = enumerate_convex_polygons(region, caps=caps, workers=workers)
    examined = 0
    bad = []
    for poly in polys:
        if sublattice_info(poly).index != 1:
            continue
        examined += 1
        content = primitive_decomposition(
            volume_vector(poly.vertices, 2)).content
        if abs(content) > 1:
            bad.append(poly)
    return PrimitivityReport(region, examined, tuple(bad))


def affine_map_census(region, budget, *, caps=None):
    """Collect the distinct witness matrices over ordered polygon pairs
    of the region, up to `budget` pairs, with the largest squared row
    norm seen.  The distinct count is bounded by the number of ordered
    simplex pairs, since a witness matrix is determined by an anchor
    simplex and its image."""
    if budget < 1:
        raise DegenerateInput("budget must be a positive integer")
    polys = enumerate_convex_polygons(region, caps=caps)
    examined = 0
    matrices = set()
    max_sq = None
    for first in polys:
        if examined >= budget:
            break
        for second in polys:
            if examined >= budget:
                break
            examined += 1
            witness = affine_equivalent(first, second)
            if witness:
                matrices.add(witness.map.matrix)
                for row in witness.map.matrix:
                    norm_sq = sum(x * x for x in row)
                    if max_sq is None or norm_sq > max_sq:
                        max_sq = norm_sq
    constant = None
    if max_sq is not None and region.kind != "box" and region.size:
        constant = max_sq / region.size ** 2
    return AffineMapCensus(region, examined, len(matrices), max_sq, constant)
