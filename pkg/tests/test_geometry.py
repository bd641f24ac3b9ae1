"""Hulls, volumes, lattice point enumeration, regions."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import poly, strict_hull
from lattice_equiv import (
    DegenerateInput,
    DimensionMismatch,
    LatticePolytope,
    RationalAffineMap,
    Region,
    convex_hull_2d,
    dilate,
    lattice_points,
    normalized_volume,
    simplex_determinant,
)

coord = st.integers(min_value=-8, max_value=8)
point = st.tuples(coord, coord)


def test_hull_square():
    hull = convex_hull_2d([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert hull.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))


def test_hull_drops_edge_point():
    hull = convex_hull_2d([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert hull.vertices == ((0, 0), (2, 0), (0, 2))


def test_hull_drops_interior_point():
    hull = convex_hull_2d([(0, 0), (3, 0), (0, 3), (1, 1)])
    assert set(hull.vertices) == {(0, 0), (3, 0), (0, 3)}


def test_hull_collinear_raises():
    with pytest.raises(DegenerateInput):
        convex_hull_2d([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(DegenerateInput):
        convex_hull_2d([(0, 0), (1, 1)])


@given(st.lists(point, min_size=3, max_size=12))
def test_hull_idempotent_and_minimal(pts):
    try:
        hull = convex_hull_2d(pts)
    except (DegenerateInput, DimensionMismatch):
        return
    again = convex_hull_2d(hull.vertices)
    assert again.vertices == hull.vertices
    # every input point is inside the hull
    for p in pts:
        assert hull.contains(p)


def test_polytope_rejects_bad_cycles():
    with pytest.raises(DegenerateInput):
        LatticePolytope(2, ((0, 0), (1, 0), (1, 1), (0, 1), (2, 2)))
    with pytest.raises(DegenerateInput):
        LatticePolytope(2, ((0, 0), (1, 1), (1, 0), (0, 1)))  # crossing order
    with pytest.raises(DegenerateInput):
        LatticePolytope(2, ((0, 0), (1, 0), (0, 0)))


def test_polytope_accepts_any_rotation_and_reversal():
    base = poly((0, 0), (1, 0), (1, 1), (0, 1))
    rotated = LatticePolytope(2, ((1, 0), (1, 1), (0, 1), (0, 0)))
    reversed_ = LatticePolytope(2, ((0, 0), (0, 1), (1, 1), (1, 0)))
    assert rotated.vertices == base.vertices
    assert reversed_.vertices == base.vertices


def test_normalized_volume_examples():
    assert normalized_volume(poly((0, 0), (1, 0), (0, 1))) == 1
    assert normalized_volume(poly((0, 0), (9, 0), (0, 10))) == 90
    assert normalized_volume(poly((0, 0), (1, 0), (1, 1), (0, 1))) == 2


def test_simplex_determinant_examples():
    assert simplex_determinant([(0, 0), (1, 0), (0, 1)]) == 1
    assert simplex_determinant([(0, 0), (0, 1), (1, 0)]) == -1
    assert simplex_determinant([(0, 0), (1, 1), (2, 2)]) == 0


@given(st.permutations([(0, 0), (3, 1), (1, 4)]))
def test_simplex_determinant_alternating(pts):
    ref = simplex_determinant([(0, 0), (3, 1), (1, 4)])
    got = simplex_determinant(pts)
    assert abs(got) == abs(ref)


def test_simplex_determinant_3d():
    assert simplex_determinant([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1


def test_lattice_points_ball():
    assert lattice_points(Region.ball(1)) == [
        (-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]
    assert lattice_points(Region.ball(0)) == [(0, 0)]


def test_lattice_points_orthant_and_box():
    assert lattice_points(Region.orthant_ball(1)) == [(0, 0), (0, 1), (1, 0)]
    assert len(lattice_points(Region.box(1))) == 4


def test_lattice_points_fractional_radius():
    # sqrt(2): corners of the unit square all make it in
    assert lattice_points(Region.ball(radius_sq=Fraction(2))) == sorted(
        (x, y) for x in (-1, 0, 1) for y in (-1, 0, 1))


def test_lattice_points_of_polytope():
    tri = poly((0, 0), (2, 0), (0, 2))
    assert lattice_points(tri) == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


def test_dilate():
    tri = poly((0, 0), (1, 0), (0, 1))
    assert dilate(tri, 2).vertices == ((0, 0), (2, 0), (0, 2))
    assert dilate(tri, 1) == tri
    assert normalized_volume(dilate(tri, 3)) == 9
    with pytest.raises(DegenerateInput):
        dilate(tri, 0)


def test_region_validation_and_labels():
    assert Region.ball(2).label() == "ball:2"
    assert Region.ball(radius_sq=Fraction(2)).label() == "ball:sqrt(2)"
    assert Region.box(3).label() == "box:3"
    assert Region.orthant_ball(1).label() == "orthant-ball:1"
    with pytest.raises(DegenerateInput):
        Region.ball(1, radius_sq=1)
    with pytest.raises(DegenerateInput):
        Region("ball", -1)


def test_affine_map_apply():
    move = RationalAffineMap(((0, 1), (1, 0)), (1, 0))
    assert move.apply((2, 3)) == (4, 2)
    tri = poly((0, 0), (2, 0), (0, 2))
    image = move.apply_polytope(tri)
    assert set(image.vertices) == {(1, 0), (1, 2), (3, 0)}
    assert move.is_unimodular


def test_affine_map_rejects_fractional_image():
    half = RationalAffineMap(((Fraction(1, 2), 0), (0, 1)), (0, 0))
    with pytest.raises(DegenerateInput):
        half.apply_polytope(poly((0, 0), (1, 0), (0, 1)))


def test_affine_map_compose():
    a = RationalAffineMap(((1, 0), (0, 1)), (1, 2))
    b = RationalAffineMap(((2, 0), (0, 2)), (0, 0))
    assert a.then(b).apply((0, 0)) == (2, 4)
    assert b.then(a).apply((0, 0)) == (1, 2)


def test_volume_3d_prism():
    # unit cube: 3! * 1
    cube = LatticePolytope(3, tuple(
        (x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)))
    assert normalized_volume(cube) == 6
    # square pyramid: 3! * (1/3 * 1 * 1)
    pyramid = LatticePolytope(3, (
        (0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 1)))
    assert normalized_volume(pyramid) == 2


def test_contains_3d():
    cube = LatticePolytope(3, tuple(
        (x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)))
    assert cube.contains((1, 1, 1))
    assert cube.contains((0, 0, 2))
    assert not cube.contains((3, 0, 0))
    assert len(lattice_points(cube)) == 27


def test_strict_hull_oracle_agrees_with_hull():
    pts = [(0, 0), (4, 1), (2, 3), (1, 1), (3, 2), (0, 3)]
    assert tuple(strict_hull(pts)) == convex_hull_2d(pts).vertices
