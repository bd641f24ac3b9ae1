"""Equivalence deciders, canonical forms, and the brute-force oracle."""

from fractions import Fraction

import pytest

from conftest import (
    apply_int_map,
    oracle_class_count,
    poly,
    random_polygon,
    random_unimodular,
    seeded,
)
from lattice_equiv import (
    DegenerateInput,
    TooLarge,
    affine_equivalent,
    canonical_polygon,
    canonical_triangle,
    convex_hull_2d,
    dilate,
    lattice_points,
    oracle_equivalent,
    primitive_decomposition,
    Region,
    unimodular_affine_equivalent,
    unimodular_equivalent,
    volume_vector,
)

UNIT = poly((0, 0), (1, 0), (0, 1))
SQUARE = poly((0, 0), (1, 0), (1, 1), (0, 1))
WIDE = poly((0, 0), (9, 0), (0, 10))
TALL = poly((0, 0), (6, 0), (0, 15))


def check_witness(w, p, q):
    assert w
    assert sorted(w.bijection) == list(range(len(p.vertices)))
    for i, v in enumerate(p.vertices):
        assert w.map.apply(v) == q.vertices[w.bijection[i]]


def test_rescaled_triangle_pair_affine():
    w = affine_equivalent(WIDE, TALL)
    check_witness(w, WIDE, TALL)
    assert w.map.matrix == ((Fraction(2, 3), 0), (0, Fraction(3, 2)))
    assert w.map.translation == (0, 0)


def test_rescaled_triangle_pair_unimodular():
    ne = unimodular_equivalent(WIDE, TALL)
    assert not ne
    assert "height" in ne.reason


def test_rescaled_triangle_pair_determinant_one():
    w = unimodular_affine_equivalent(WIDE, TALL)
    check_witness(w, WIDE, TALL)
    assert w.map.determinant == 1
    assert w.map.matrix == ((Fraction(2, 3), 0), (0, Fraction(3, 2)))


def test_self_comparison_is_identity():
    for p in (UNIT, SQUARE, WIDE):
        for decide in (affine_equivalent, unimodular_equivalent,
                       unimodular_affine_equivalent):
            w = decide(p, p)
            assert w.bijection == tuple(range(len(p.vertices)))
            assert w.map.matrix == ((1, 0), (0, 1))
            assert w.map.translation == (0, 0)


def test_square_vs_rectangle():
    rect = poly((0, 0), (2, 0), (2, 1), (0, 1))
    assert primitive_decomposition(
        volume_vector(rect.vertices, 2)).direction == (1, 1, 1, 1)
    w = affine_equivalent(SQUARE, rect)
    check_witness(w, SQUARE, rect)
    ne = unimodular_equivalent(SQUARE, rect)
    assert not ne and "volume" in ne.reason


def test_shear_image_is_unimodular():
    shear = poly((0, 0), (1, 0), (1, 1))
    w = unimodular_equivalent(UNIT, shear)
    check_witness(w, UNIT, shear)
    assert w.map.is_unimodular


def test_mirror_triangle_determinant_one():
    tri = poly((0, 0), (2, 0), (1, 3))
    mirror = poly(*[(y, x) for x, y in tri.vertices])
    w = unimodular_affine_equivalent(tri, mirror)
    check_witness(w, tri, mirror)
    assert w.map.determinant == 1


def test_dilated_triangle_not_determinant_one():
    assert not unimodular_affine_equivalent(UNIT, dilate(UNIT, 2))


def test_affine_round_trip_random_matrices():
    rng = seeded(41)
    for _ in range(120):
        p = random_polygon(rng)
        while True:
            m = tuple(tuple(rng.randint(-5, 5) for _ in range(2))
                      for _ in range(2))
            if m[0][0] * m[1][1] - m[0][1] * m[1][0]:
                break
        t = (rng.randint(-4, 4), rng.randint(-4, 4))
        q = convex_hull_2d(apply_int_map(p.vertices, m, t))
        w = affine_equivalent(p, q)
        check_witness(w, p, q)
        reordered = [None] * len(p.vertices)
        for i in range(len(p.vertices)):
            reordered[i] = q.vertices[w.bijection[i]]
        assert primitive_decomposition(volume_vector(reordered, 2)).direction \
            == primitive_decomposition(volume_vector(p.vertices, 2)).direction


def test_unimodular_round_trip_random_maps():
    rng = seeded(43)
    for _ in range(120):
        p = random_polygon(rng)
        m = random_unimodular(rng)
        t = (rng.randint(-4, 4), rng.randint(-4, 4))
        q = convex_hull_2d(apply_int_map(p.vertices, m, t))
        w = unimodular_equivalent(p, q)
        check_witness(w, p, q)
        assert w.map.is_unimodular


def test_coprime_volume_vector_forces_unimodular():
    # when the shared volume vector has coprime entries, an affine witness
    # is automatically unimodular
    rng = seeded(47)
    seen = 0
    for _ in range(200):
        p = random_polygon(rng)
        if abs(primitive_decomposition(
                volume_vector(p.vertices, 2)).content) != 1:
            continue
        seen += 1
        m = random_unimodular(rng)
        q = convex_hull_2d(apply_int_map(p.vertices, m, (0, 1)))
        assert unimodular_equivalent(p, q)
    assert seen > 20


MODES = ("affine", "unimodular", "det-one")
DECIDERS = (affine_equivalent, unimodular_equivalent,
            unimodular_affine_equivalent)


def test_deciders_agree_with_oracle_on_random_pairs():
    rng = seeded(53)
    for _ in range(60):
        p = random_polygon(rng, span=3)
        q = random_polygon(rng, span=3)
        if len(p.vertices) > 6 or len(q.vertices) > 6:
            continue
        for mode, decide in zip(MODES, DECIDERS):
            got = decide(p, q)
            expect = oracle_equivalent(p, q, mode)
            assert bool(got) == bool(expect), (p, q, mode)


def test_oracle_on_unit_ball_polygons():
    polys = []
    pts = lattice_points(Region.ball(1))
    from itertools import combinations
    for size in (3, 4):
        for sub in combinations(pts, size):
            try:
                hull = convex_hull_2d(sub)
            except DegenerateInput:
                continue
            if len(hull.vertices) == size and hull not in polys:
                polys.append(hull)
    assert len(polys) == 9
    for p in polys:
        for q in polys:
            assert bool(affine_equivalent(p, q)) == \
                bool(oracle_equivalent(p, q, "affine"))
    assert oracle_class_count(polys, "affine") == 2


def test_oracle_rejects_large_input():
    big = convex_hull_2d(lattice_points(Region.ball(4)))
    assert len(big.vertices) == 12
    with pytest.raises(TooLarge):
        oracle_equivalent(big, big, "unimodular")


def test_canonical_triangle_examples():
    ct = canonical_triangle(poly((0, 0), (2, 0), (1, 2)))
    assert (ct.g, ct.b, ct.a) == (1, 4, 2)
    assert ct.key == (1, 4, 2)
    assert ct.as_polytope().vertices == ((0, 0), (1, 0), (2, 4))
    assert ct.normalized_volume == 4
    assert canonical_triangle(UNIT).key == (1, 1, 0)


def test_canonical_triangle_shape():
    rng = seeded(59)
    for _ in range(200):
        p = random_polygon(rng)
        if len(p.vertices) != 3:
            continue
        ct = canonical_triangle(p)
        assert ct.g >= 1 and ct.b >= 1 and 0 <= ct.a < ct.b
        assert unimodular_equivalent(p, ct.as_polytope())


def test_canonical_triangle_invariance():
    rng = seeded(61)
    base = poly((0, 0), (3, 1), (1, 4))
    key = canonical_triangle(base).key
    for _ in range(80):
        m = random_unimodular(rng)
        t = (rng.randint(-6, 6), rng.randint(-6, 6))
        image = convex_hull_2d(apply_int_map(base.vertices, m, t))
        assert canonical_triangle(image).key == key


def test_canonical_triangle_keys_classify():
    rng = seeded(67)
    tris = []
    while len(tris) < 40:
        p = random_polygon(rng, span=3)
        if len(p.vertices) == 3:
            tris.append(p)
    for p in tris:
        for q in tris:
            same_key = canonical_triangle(p).key == canonical_triangle(q).key
            assert same_key == bool(oracle_equivalent(p, q, "unimodular"))


def test_canonical_polygon_square_fixed_point():
    assert canonical_polygon(SQUARE) == SQUARE
    assert canonical_polygon(canonical_polygon(SQUARE)) == \
        canonical_polygon(SQUARE)


def test_canonical_polygon_diamond():
    diamond = poly((1, 0), (0, 1), (-1, 0), (0, -1))
    canon = canonical_polygon(diamond)
    assert canon.vertices == ((0, 0), (1, 0), (2, 2), (1, 2))
    assert canonical_polygon(canon) == canon


def test_canonical_polygon_invariance_and_classification():
    rng = seeded(71)
    for _ in range(60):
        p = random_polygon(rng, span=3)
        m = random_unimodular(rng)
        t = (rng.randint(-5, 5), rng.randint(-5, 5))
        q = convex_hull_2d(apply_int_map(p.vertices, m, t))
        assert canonical_polygon(p) == canonical_polygon(q)
        assert canonical_polygon(canonical_polygon(p)) == canonical_polygon(p)
    for _ in range(40):
        p = random_polygon(rng, span=3)
        q = random_polygon(rng, span=3)
        if len(p.vertices) > 6 or len(q.vertices) > 6:
            continue
        assert (canonical_polygon(p) == canonical_polygon(q)) == \
            bool(unimodular_equivalent(p, q))


def test_not_equivalent_reason_is_reported():
    ne = affine_equivalent(UNIT, SQUARE)
    assert not ne
    assert isinstance(ne.reason, str) and ne.reason


def test_oracle_accepts_det_one_alias():
    w = oracle_equivalent(WIDE, TALL, "det_one")
    assert w and w.map.determinant == 1
