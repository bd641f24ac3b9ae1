"""Ordering-sensitive invariants of finite lattice point sets.

The volume vector collects the simplex determinants of all (d+1)-subsets
of an ordered point set; its primitive decomposition splits off the gcd
content.  The lattice height vector collects, for every point, its exact
integer heights over the hyperplanes spanned by the remaining points.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import linalg
from .errors import DegenerateInput, DimensionMismatch, ZeroVector
from .geometry import simplex_determinant


@lru_cache(maxsize=None)
def index_combinations(n, k):
    """Lexicographically ordered k-subsets of range(n)."""
    return tuple(combinations(range(n), k))


@dataclass(frozen=True)
class VolumeVector:
    n: int
    dim: int
    entries: tuple

    def combinations(self):
        return index_combinations(self.n, self.dim + 1)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class PrimitiveVolumeVector:
    content: int      # signed: content * direction reproduces the vector
    direction: tuple  # gcd 1, first nonzero entry positive


@dataclass(frozen=True)
class PrimitiveHyperplane:
    """Primitive integer equation normal . x + offset = 0."""

    normal: tuple
    offset: int

    def height(self, point):
        return linalg.vec_dot(self.normal, point) + self.offset


@dataclass(frozen=True)
class LatticeHeightVector:
    n: int
    dim: int
    blocks: tuple  # blocks[i][j]: height of point i over j-th d-subset of the rest

    def abs_signature(self):
        """Relabeling-invariant summary: sorted |heights| plus the count of
        degenerate (undefined) entries."""
        values = []
        undefined = 0
        for block in self.blocks:
            for e in block:
                if e is None:
                    undefined += 1
                else:
                    values.append(abs(e))
        return tuple(sorted(values)), undefined


def _infer_dim(points, dim):
    if dim is None:
        if not points:
            raise DegenerateInput("empty point set")
        dim = len(points[0])
    for p in points:
        if len(p) != dim:
            raise DimensionMismatch(f"point {p} does not have {dim} coordinates")
    return dim


def volume_vector(points, dim=None):
    """Simplex determinants of all (d+1)-subsets, in lexicographic order.

    The order of the input points matters: swapping two points permutes
    the entries and flips the signs of entries containing both.
    """
    pts = [tuple(p) for p in points]
    d = _infer_dim(pts, dim)
    if len(pts) < d + 1:
        raise DegenerateInput(f"need at least {d + 1} points in dimension {d}")
    entries = tuple(simplex_determinant([pts[i] for i in combo])
                    for combo in index_combinations(len(pts), d + 1))
    if not any(entries):
        raise DegenerateInput("points are not full-dimensional")
    return VolumeVector(len(pts), d, entries)


def primitive_decomposition(w):
    """Split a volume vector as content * direction with primitive direction.

    The direction has coprime entries and a positive first nonzero entry;
    the signed content absorbs the rest.  Raises ZeroVector on the zero
    vector.
    """
    entries = tuple(w.entries) if isinstance(w, VolumeVector) else tuple(w)
    g = linalg.vec_gcd(entries)
    if g == 0:
        raise ZeroVector("volume vector is identically zero")
    first = next(e for e in entries if e)
    if first < 0:
        g = -g
    return PrimitiveVolumeVector(g, tuple(e // g for e in entries))


def primitive_hyperplane(points):
    """Primitive integer equation of the hyperplane through d points in Z^d.

    The normal is normalized to gcd 1 with positive first nonzero entry.
    Raises DegenerateInput when the points do not span a hyperplane.
    """
    pts = [tuple(p) for p in points]
    d = _infer_dim(pts, None)
    if len(pts) != d:
        raise DimensionMismatch(f"need exactly {d} points in dimension {d}")
    diffs = [linalg.vec_sub(p, pts[0]) for p in pts[1:]]
    normal = []
    sign = 1
    for j in range(d):
        minor = [[row[c] for c in range(d) if c != j] for row in diffs]
        normal.append(sign * (linalg.int_det(minor) if minor else 1))
        sign = -sign
    g = linalg.vec_gcd(normal)
    if g == 0:
        raise DegenerateInput("points do not span a hyperplane")
    normal = [c // g for c in normal]
    first = next(c for c in normal if c)
    if first < 0:
        normal = [-c for c in normal]
    normal = tuple(normal)
    return PrimitiveHyperplane(normal, -linalg.vec_dot(normal, pts[0]))


def lattice_height_vector(points, dim=None):
    """Heights of each point over the hyperplanes through the other points.

    Block i lists, for every d-subset of the remaining points in
    lexicographic index order, the integer height of point i over that
    subset's hyperplane, or None when the subset is degenerate.  Only the
    absolute values are ordering-independent; signs follow the primitive
    normal convention of primitive_hyperplane.
    """
    pts = [tuple(p) for p in points]
    d = _infer_dim(pts, dim)
    n = len(pts)
    if n < d + 1:
        raise DegenerateInput(f"need at least {d + 1} points in dimension {d}")
    if len(set(pts)) != n:
        raise DegenerateInput("points must be distinct")
    planes = {}
    for combo in index_combinations(n, d):
        try:
            planes[combo] = primitive_hyperplane([pts[i] for i in combo])
        except DegenerateInput:
            planes[combo] = None
    blocks = []
    for i in range(n):
        rest = tuple(j for j in range(n) if j != i)
        block = []
        for sub in combinations(rest, d):
            plane = planes[sub]
            block.append(None if plane is None else plane.height(pts[i]))
        blocks.append(tuple(block))
    return LatticeHeightVector(n, d, tuple(blocks))
