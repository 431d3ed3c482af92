import math

import numpy as np

from cubica.march import implicit_curve, is_closed


def test_circle_closes():
    polys = implicit_curve(lambda x, y: x * x + y * y - 1.0,
                           (-2, 2, -2, 2), 201)
    assert len(polys) == 1
    (poly,) = polys
    assert is_closed(poly)
    for (x, y) in poly:
        assert abs(math.hypot(x, y) - 1.0) < 2e-2


def test_line_stays_open():
    polys = implicit_curve(lambda x, y: y - 0.5 * x,
                           (-1, 1, -1, 1), 101)
    assert len(polys) == 1
    assert not is_closed(polys[0])


def test_nan_mask_clips_domain():
    def fn(x, y):
        inside = x * x + y * y < 1.0
        return np.where(inside, y - x, np.nan)

    polys = implicit_curve(fn, (-2, 2, -2, 2), 201)
    assert len(polys) == 1
    for (x, y) in polys[0]:
        assert x * x + y * y <= 1.0 + 1e-6


def test_two_components_separate():
    # (x^2 + y^2 - 1)(x^2 + y^2 - 4) has two nested circles
    def fn(x, y):
        r2 = x * x + y * y
        return (r2 - 1.0) * (r2 - 4.0)

    polys = implicit_curve(fn, (-3, 3, -3, 3), 241)
    assert len(polys) == 2
    assert all(is_closed(p) for p in polys)


def test_empty_field():
    polys = implicit_curve(lambda x, y: x * 0 + y * 0 + 1.0,
                           (-1, 1, -1, 1), 51)
    assert polys == []
