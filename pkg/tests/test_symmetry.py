import math

import pytest
from hypothesis import given, settings, strategies as st

from sandbubbler.pattern import Burrow, GenConfig, Pattern, Pellet, Point2, Trench, generate_pattern
from sandbubbler.symmetry import (BreakMode, BreakSpec, IsoKind, Isometry, affected_count,
                                  apply_isometry, break_symmetry)


def single(x, y):
    return Pattern((Burrow(Point2(0.0, 0.0), (Trench(0.0, (Pellet(Point2(x, y)),), (1.0,)),)),))


def image_position(p):
    img = p.burrows[p.image_indices()[0]]
    return img.trenches[0].pellets[0].position


@pytest.mark.parametrize("iso, start, expected", [
    (Isometry(IsoKind.REFLECTION), (1, 2), (-1, 2)),
    (Isometry(IsoKind.ROTATION, n=4), (1, 0), (0, 1)),
    (Isometry(IsoKind.GLIDE, dx=3), (1, 2), (4, -2)),
    (Isometry(IsoKind.TRANSLATION, dx=3, dy=-1), (1, 2), (4, 1)),
])
def test_isometry_examples(iso, start, expected):
    out = apply_isometry(single(*start), iso)
    assert len(out.burrows) == 2
    assert out.burrows[0] == single(*start).burrows[0]
    assert image_position(out) == pytest.approx(expected, abs=1e-12)


def test_rotation_matches_hand_computation():
    iso = Isometry(IsoKind.ROTATION, n=3)
    x, y = iso.point(2.0, 1.0)
    a = 2 * math.pi / 3
    assert (x, y) == pytest.approx((2 * math.cos(a) - math.sin(a), 2 * math.sin(a) + math.cos(a)))


def test_rotation_order_validated():
    with pytest.raises(ValueError):
        Isometry(IsoKind.ROTATION, n=1)


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        apply_isometry(Pattern(), Isometry(IsoKind.REFLECTION))


coords = st.floats(-500, 500, allow_nan=False)
isometries = st.one_of(
    st.just(Isometry(IsoKind.REFLECTION)),
    st.integers(2, 12).map(lambda n: Isometry(IsoKind.ROTATION, n=n)),
    st.tuples(coords, coords).map(lambda d: Isometry(IsoKind.TRANSLATION, dx=d[0], dy=d[1])),
    coords.map(lambda d: Isometry(IsoKind.GLIDE, dx=d)),
)


@settings(max_examples=200)
@given(iso=isometries, a=st.tuples(coords, coords), b=st.tuples(coords, coords))
def test_distance_preserved(iso, a, b):
    d0 = math.dist(a, b)
    d1 = math.dist(iso.point(*a), iso.point(*b))
    assert abs(d0 - d1) < 1e-9


def test_image_burrows_are_isometric_copies():
    p = generate_pattern(GenConfig(seed=2))
    out = apply_isometry(p, Isometry(IsoKind.ROTATION, n=5))
    n = len(p.burrows)
    orig = [pel.position for _, pel in Pattern(out.burrows[:n]).pellets()]
    img = [pel.position for _, pel in Pattern(out.burrows[n:]).pellets()]
    for i in range(0, len(orig), 17):
        for j in range(0, len(orig), 13):
            assert abs(math.dist(orig[i], orig[j]) - math.dist(img[i], img[j])) < 1e-9


def test_image_colors_copied():
    p = generate_pattern(GenConfig(seed=2))
    out = apply_isometry(p, Isometry(IsoKind.REFLECTION))
    n = len(p.burrows)
    assert [q.color for _, q in Pattern(out.burrows[:n]).pellets()] == \
           [q.color for _, q in Pattern(out.burrows[n:]).pellets()]


def test_break_zero_is_identity():
    p = generate_pattern(GenConfig(seed=3))
    assert break_symmetry(p, BreakSpec(0.0, seed=1)) == p


def test_break_one_removes_scope():
    p = apply_isometry(generate_pattern(GenConfig(seed=3)), Isometry(IsoKind.REFLECTION))
    scope = p.image_indices()
    out = break_symmetry(p, BreakSpec(1.0, seed=1), scope)
    for (i, _, _), pel in out.pellets():
        assert pel.visible == (i not in scope)


def test_ceiling_count_example():
    assert affected_count(0.3, 100) == 30
    assert affected_count(0.07, 100) == 7
    assert affected_count(0.301, 100) == 31
    assert affected_count(1e-6, 5) == 1


def _changed(a, b):
    return sum(x != y for (_, x), (_, y) in zip(a.pellets(), b.pellets()))


@pytest.mark.parametrize("mode", list(BreakMode))
def test_break_counts_exact(mode):
    p = generate_pattern(GenConfig(seed=6))
    n = p.pellet_count
    for k in range(0, 101, 7):
        s = k / 100
        out = break_symmetry(p, BreakSpec(s, mode, displace_std=3.0, seed=k))
        assert _changed(p, out) == -(-k * n // 100)


def test_displace_keeps_visibility_and_is_seeded():
    p = generate_pattern(GenConfig(seed=6))
    spec = BreakSpec(0.5, BreakMode.DISPLACE, displace_std=2.0, seed=9)
    a, b = break_symmetry(p, spec), break_symmetry(p, spec)
    assert a == b
    assert all(pel.visible for _, pel in a.pellets())


def test_break_rate_validated():
    with pytest.raises(ValueError):
        BreakSpec(1.5)
