"""Doubled orthant-ball hulls with a one-step cap, and lattice shaving.

The base polytope is twice the convex hull of the nonnegative lattice
points of a ball.  Appending the half-integer cap next to its extreme
x-coordinate and doubling again adds exactly one new lattice point
column, which the report verifies against the expected two-case formula.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput, DegenerateResult, DimensionMismatch
from .geometry import (
    LatticePolytope,
    Region,
    convex_hull_2d,
    dilate,
    lattice_points,
    normalized_volume,
)


@dataclass(frozen=True)
class ConstructionReport:
    radius_sq: Fraction
    p: int                   # largest x over the quarter-ball lattice points
    case: int                # 1 if (p, 0) is alone on x = p, else 2
    base: LatticePolytope        # doubled quarter-ball hull
    augmented: LatticePolytope   # base plus the doubled cap
    b: tuple                 # cap column: ((x, 0), (x, 1)) at x = 2p or 2p+1
    volume_delta: int
    added_points: tuple      # lattice points of augmented not in base
    identity_holds: bool     # added_points == b without its first element


def orthant_hull_construction(r=None, *, radius_sq=None):
    """Build the doubled quarter-ball hull and its capped extension.

    The cap column sits at x = 2p when (p, 0) is the only lattice point
    of the hull on x = p (case 1), and at x = 2p + 1 when the points
    (p, 0) and (p, 1) are both present (case 2).  Non-integer radii are
    supported through their exact square.
    """
    region = Region.orthant_ball(radius=r, radius_sq=radius_sq)
    if region.size < 1:
        raise DegenerateInput("construction needs radius at least 1")
    pts = lattice_points(region)
    base = dilate(convex_hull_2d(pts), 2)
    p = max(x for x, _ in pts)
    column = [pt for pt in pts if pt[0] == p]
    case = 1 if column == [(p, 0)] else 2
    anchor = 2 * p if case == 1 else 2 * p + 1
    b = ((anchor, 0), (anchor, 1))
    augmented = convex_hull_2d(base.vertices + b)
    base_points = set(lattice_points(base))
    added = tuple(sorted(
        pt for pt in lattice_points(augmented) if pt not in base_points))
    return ConstructionReport(
        radius_sq=region.size,
        p=p,
        case=case,
        base=base,
        augmented=augmented,
        b=b,
        volume_delta=normalized_volume(augmented) - normalized_volume(base),
        added_points=added,
        identity_holds=added == b[1:],
    )


def shave(q, w):
    """Remove the vertices `w` from the polytope's lattice points and
    retake the hull.

    Returns (polytope, normalized volume removed).  Removing the members
    of `w` one at a time, in any order, gives the same result, because a
    vertex never re-enters the hull of the remaining points.
    """
    if q.dim != 2:
        raise DimensionMismatch("shaving is implemented for polygons")
    doomed = set(map(tuple, w))
    if not doomed <= set(q.vertices):
        raise DegenerateInput("can only shave vertices of the polytope")
    if not doomed:
        return q, 0
    remaining = [pt for pt in lattice_points(q) if pt not in doomed]
    try:
        shaved = convex_hull_2d(remaining)
    except DegenerateInput as exc:
        raise DegenerateResult(
            "remainder is not full-dimensional") from exc
    return shaved, normalized_volume(q) - normalized_volume(shaved)
