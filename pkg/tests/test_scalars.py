from fractions import Fraction

import pytest

from cubica.errors import InvalidInput, ZeroLeadingCoefficient
from cubica.scalars import (
    is_exact,
    parse_scalar,
    poly_roots,
    roots_cubic,
    scalar_from_json,
    scalar_to_json,
    scalars_close,
)


def test_parse_scalar_exact_forms():
    assert parse_scalar("3") == 3 and isinstance(parse_scalar("3"), int)
    v = parse_scalar("-2/7")
    assert v == Fraction(-2, 7) and isinstance(v, Fraction)


def test_parse_scalar_floating_forms():
    assert parse_scalar("1.5") == 1.5
    assert parse_scalar("1e-3") == 1e-3
    assert parse_scalar("2j") == 2j
    assert parse_scalar("1+2j") == 1 + 2j


def test_parse_scalar_comma_pair():
    assert parse_scalar("0.6,0.8") == complex(0.6, 0.8)
    # zero imaginary part collapses to a float
    v = parse_scalar("2.5,0")
    assert v == 2.5 and isinstance(v, float)


@pytest.mark.parametrize("bad", ["", "zzz", "1/0", "1,2,3"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(InvalidInput):
        parse_scalar(bad)


def test_is_exact():
    assert is_exact(4) and is_exact(Fraction(1, 3))
    assert not is_exact(1.0) and not is_exact(1j)


@pytest.mark.parametrize("v", [5, Fraction(-3, 8), 0.25, 1.5 - 0.5j])
def test_json_round_trip(v):
    back = scalar_from_json(scalar_to_json(v))
    assert scalars_close(back, v, tol=0)
    assert back == v


def test_json_exact_stays_exact():
    assert scalar_to_json(Fraction(2, 6)) == "1/3"
    assert isinstance(scalar_from_json("7/2"), Fraction)


def test_scalars_close_relative():
    assert scalars_close(1e12, 1e12 * (1 + 1e-12))
    assert not scalars_close(1.0, 1.001)


def test_roots_cubic_frozen():
    # x^3 - 3x + 2 = (x - 1)^2 (x + 2)
    rs = roots_cubic(1, 0, -3, 2)
    assert abs(rs[0] - (-2)) < 1e-9
    assert abs(rs[1] - 1) < 1e-7 and abs(rs[2] - 1) < 1e-7


def test_roots_cubic_needs_cubic():
    with pytest.raises(ZeroLeadingCoefficient):
        roots_cubic(0, 1, 2, 3)


def test_roots_sorted_by_real_then_imag():
    rs = roots_cubic(1, 0, 1, 0)  # 0, +-i
    assert [round(r.imag, 9) for r in rs] == [-1, 0, 1]


def test_poly_roots_strips_tiny_lead():
    rs = poly_roots([1e-20, 1.0, -2.0])
    assert len(rs) == 1 and abs(rs[0] - 2.0) < 1e-9
