from fractions import Fraction

import pytest

from cubica.errors import CoincidentPoints, SingularMap
from cubica.projective import (
    ProjLine,
    ProjMap,
    ProjPoint,
    apply_map,
    line_through,
    map_four_points,
    meet,
    proj_distance,
)


def test_point_equality_is_projective():
    assert ProjPoint(1, 2, 3) == ProjPoint(2, 4, 6)
    assert ProjPoint(1, 2, 3) == ProjPoint(Fraction(1, 3), Fraction(2, 3), 1)
    assert ProjPoint(1, 2, 3) != ProjPoint(1, 2, 4)


def test_point_equality_mixed_exactness():
    assert ProjPoint(1, -1, 0) == ProjPoint(-1.0, 1.0, 0.0)
    assert ProjPoint(0, 1, -1) == ProjPoint(0.0, -0.5, 0.5)


def test_zero_triple_rejected():
    with pytest.raises(Exception):
        ProjPoint(0, 0, 0)


def test_proj_distance_basics():
    p = ProjPoint(1.0, 2.0, 3.0)
    assert proj_distance(p, p) == 0.0
    q = ProjPoint(-2.0, -4.0, -6.0)
    assert proj_distance(p, q) < 1e-15
    e1, e2 = ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)
    assert abs(proj_distance(e1, e2) - 1.0) < 1e-15


def test_proj_distance_small_perturbation():
    p = ProjPoint(1.0, 1.0, 1.0)
    q = ProjPoint(1.0, 1.0, 1.0 + 3e-9)
    d = proj_distance(p, q)
    assert 1e-10 < d < 1e-8


def test_line_through_frozen():
    ln = line_through(ProjPoint(2, 3, 1), ProjPoint(0, 1, 1))
    assert ln == ProjLine(1, -1, 1)


def test_meet_inverts_join():
    p, q = ProjPoint(2, 3, 1), ProjPoint(0, 1, 1)
    ln = line_through(p, q)
    other = ProjLine(1, 0, 0)
    pt = meet(ln, other)
    assert ln.contains(pt) and other.contains(pt)


def test_line_through_coincident():
    with pytest.raises(CoincidentPoints):
        line_through(ProjPoint(1, 2, 3), ProjPoint(2, 4, 6))


def test_map_compose_inverse():
    m = ProjMap(((1, 2, 0), (0, 1, 5), (1, 0, 1)))
    ident = m.compose(m.inverse())
    p = ProjPoint(3, -1, 2)
    assert apply_map(ident, p) == p


def test_singular_map_rejected():
    with pytest.raises(SingularMap):
        ProjMap(((1, 2, 3), (2, 4, 6), (0, 0, 1))).inverse()


def test_map_four_points():
    src = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
           ProjPoint(1, 1, 1)]
    dst = [ProjPoint(1, 2, 3), ProjPoint(0, 1, 1), ProjPoint(2, 0, 1),
           ProjPoint(1, 1, 1)]
    m = map_four_points(src, dst)
    for s, d in zip(src, dst):
        assert apply_map(m, s) == d


def test_map_four_points_degenerate():
    # three of the four on one line
    src = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
           ProjPoint(1, 1, 1)]
    dst = [ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
           ProjPoint(1, 1, 1)]
    with pytest.raises(CoincidentPoints):
        map_four_points(src, dst)


def test_line_image_preserves_incidence():
    m = ProjMap(((2, 0, 1), (1, 1, 0), (0, 3, 1)))
    p, q = ProjPoint(1, 2, 1), ProjPoint(0, 1, 3)
    ln = line_through(p, q)
    img = m.line_image(ln)
    assert img.contains(apply_map(m, p))
    assert img.contains(apply_map(m, q))
