"""The normal form y^2 = x^3 + ax + b and everything read off from it.

The reduction from a general cubic with a marked flex runs in four steps:
move the flex to (0:1:0) with tangent z=0, scale so the x^3 and y^2 z
coefficients match up to sign, then two shears to kill the remaining
mixed terms.  Over exact rational input with a rational flex every step
stays in exact arithmetic; no root extraction is needed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cubic import (
    CubicForm,
    ConvergenceFailure,
    _line_second_point,
    flex_defect,
    tangent_line,
    transform,
)
from .errors import (
    InvalidInput,
    NotAFlex,
    SingularAtFlex,
    SingularCurve,
    ZeroScale,
)
from .projective import ProjMap, ProjPoint
from .scalars import all_exact, is_exact


def _collapse(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


@dataclass(frozen=True)
class StandardCurve:
    """The curve y^2 z = x^3 + a x z^2 + b z^3."""

    a: object
    b: object

    @property
    def is_exact(self) -> bool:
        return all_exact((self.a, self.b))

    def discriminant(self):
        return -(4 * self.a ** 3 + 27 * self.b ** 2)

    def is_smooth(self) -> bool:
        d = self.discriminant()
        if self.is_exact:
            return d != 0
        scale = max(abs(complex(4 * self.a ** 3)), abs(complex(27 * self.b ** 2)), 1e-300)
        return abs(complex(d)) > 1e-12 * scale

    def cubic_form(self) -> CubicForm:
        a, b = self.a, self.b
        return CubicForm((1, 0, 0, 0, 0, a, 0, -1, 0, b))

    def roots(self):
        """Roots of x^3 + ax + b, sorted by (real, imaginary)."""
        rs = np.roots(np.array([1.0, 0.0, complex(self.a), complex(self.b)], dtype=complex))
        out = []
        for r in rs:
            x = complex(r)
            # one Newton step against the exact coefficients
            d = 3 * x * x + complex(self.a)
            if abs(d) > 1e-12:
                x = x - (x ** 3 + complex(self.a) * x + complex(self.b)) / d
            out.append(x)
        out.sort(key=lambda c: (c.real, c.imag))
        return tuple(out)

    def to_json(self):
        from .scalars import scalar_to_json

        return {"standard": [scalar_to_json(self.a), scalar_to_json(self.b)]}


def j_invariant(c: StandardCurve):
    """J = 4a^3 / (4a^3 + 27b^2); exact for exact curves."""
    a, b = c.a, c.b
    if c.is_exact:
        den = 4 * Fraction(a) ** 3 + 27 * Fraction(b) ** 2
        if den == 0:
            raise SingularCurve("4a^3 + 27b^2 = 0")
        return _collapse(4 * Fraction(a) ** 3 / den)
    a4 = 4 * complex(a) ** 3
    b27 = 27 * complex(b) ** 2
    den = a4 + b27
    if abs(den) <= 1e-12 * max(abs(a4), abs(b27), 1e-300):
        raise SingularCurve("4a^3 + 27b^2 vanishes within tolerance")
    val = a4 / den
    if val.imag == 0.0 or (not isinstance(a, complex) and not isinstance(b, complex)):
        return val.real
    return val


def rescale(c: StandardCurve, t) -> StandardCurve:
    """The substitution X = t^2 x, Y = t^3 y: (a, b) -> (t^4 a, t^6 b)."""
    if is_exact(t):
        if t == 0:
            raise ZeroScale("rescaling by t = 0")
    elif complex(t) == 0:
        raise ZeroScale("rescaling by t = 0")
    return StandardCurve(_collapse(t ** 4 * c.a), _collapse(t ** 6 * c.b))


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------


def _third_basis_column(c0, c1):
    """The unit vector making the best-conditioned basis with c0, c1."""
    best = None
    best_mag = -1.0
    for idx in range(3):
        e = tuple(1 if n == idx else 0 for n in range(3))
        rows = (c0, c1, e)
        det = (
            rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
        )
        mag = abs(complex(det))
        if mag > best_mag:
            best, best_mag = e, mag
    if best_mag <= 0.0:
        raise SingularAtFlex("tangent direction and flex are dependent")
    return best


def to_standard(form: CubicForm, flex: ProjPoint):
    """Reduce a cubic with a marked flex to y^2 = x^3 + ax + b.

    Returns (StandardCurve, A) with transform(form, A) proportional to
    the standard-form cubic.  Exact input (rational coefficients, rational
    flex) produces exact (a, b) and an exact map.
    """
    p = flex.normalized()
    line = tangent_line(form, p)
    if line is None:
        raise SingularAtFlex("gradient vanishes at the marked point")
    defect = flex_defect(form, p)
    if defect > 1e-6:
        raise NotAFlex(f"tangent contact residual {defect:.2e}")

    t_pt = _line_second_point(line.normalized(), p).normalized()
    c0, c1 = t_pt.coords, p.coords
    c2 = _third_basis_column(c0, c1)
    m = ProjMap.from_columns(c0, c1, c2)

    # step 1: flex at (0:1:0), tangent z=0
    psi = transform(form, m.inverse())
    exact = psi.is_exact
    top = max(abs(complex(c)) for c in psi.coeffs)
    g = psi.coeff(3, 0, 0)
    h = psi.coeff(0, 2, 1)

    def tiny(v):
        return v == 0 if exact else abs(complex(v)) <= 1e-10 * top

    if tiny(g):
        raise NotAFlex("tangent line meets the curve beyond the flex")
    if tiny(h):
        raise SingularAtFlex("curve is singular at the marked flex")

    # step 2: x -> ax, y -> ay with a = -h/g makes the x^3 and y^2 z
    # coefficients negatives of each other
    alpha = (-Fraction(h) / Fraction(g)) if exact else -complex(h) / complex(g)
    s2 = ProjMap(((alpha, 0, 0), (0, alpha, 0), (0, 0, 1)))
    psi = transform(psi, s2.inverse())

    # step 3: y -> y + (sx + tz)/2 removes the xyz and yz^2 terms
    sc = psi.coeff(0, 2, 1)
    s = psi.coeff(1, 1, 1) / (-sc) if exact else complex(psi.coeff(1, 1, 1)) / -complex(sc)
    t = psi.coeff(0, 1, 2) / (-sc) if exact else complex(psi.coeff(0, 1, 2)) / -complex(sc)
    half = Fraction(1, 2) if exact else 0.5
    s3 = ProjMap(((1, 0, 0), (half * s, 1, half * t), (0, 0, 1)))
    psi = transform(psi, s3.inverse())

    # step 4: x -> x - (p'/3) z removes the x^2 z term
    pp = psi.coeff(2, 0, 1) / psi.coeff(3, 0, 0) if exact else complex(
        psi.coeff(2, 0, 1)
    ) / complex(psi.coeff(3, 0, 0))
    third = Fraction(1, 3) if exact else (1.0 / 3.0)
    s4 = ProjMap(((1, 0, -third * pp), (0, 1, 0), (0, 0, 1)))
    psi = transform(psi, s4.inverse())

    b_map = m.compose(s2).compose(s3).compose(s4)
    a_map = b_map.inverse()

    cs = psi.coeffs
    lead = cs[0]
    if exact:
        if cs[7] != -lead or any(cs[i] != 0 for i in (1, 2, 3, 4, 6, 8)):
            raise ConvergenceFailure("reduction left non-standard terms")
        a = _collapse(Fraction(cs[5]) / Fraction(lead))
        b = _collapse(Fraction(cs[9]) / Fraction(lead))
    else:
        ctop = max(abs(complex(c)) for c in cs)
        stray = max(abs(complex(cs[i])) for i in (1, 2, 3, 4, 6, 8))
        if stray > 1e-6 * ctop or abs(complex(cs[7]) + complex(lead)) > 1e-6 * ctop:
            raise ConvergenceFailure("reduction left non-standard terms")
        a = complex(cs[5]) / complex(lead)
        b = complex(cs[9]) / complex(lead)
        # complex dust below working precision reads as real
        if abs(a.imag) <= 1e-12 * max(1.0, abs(a)):
            a = a.real
        if abs(b.imag) <= 1e-12 * max(1.0, abs(b)):
            b = b.real
    return StandardCurve(a, b), a_map


# ---------------------------------------------------------------------------
# the triangle of roots
# ---------------------------------------------------------------------------

_SHAPE_TOL = 1e-7


@dataclass(frozen=True)
class TriangleShape:
    """Shape class of the root triangle of x^3 + ax + b.

    The tag is one of: equilateral, isosceles, collinear-with-midpoint,
    collinear, generic-upper, generic-lower.  It only depends on the curve
    up to projective equivalence, like J.  For a scalene triangle the
    upper/lower half distinguishes Im J > 0 from Im J < 0; mirroring the
    triangle conjugates J.
    """

    vertices: tuple
    edge_lengths: tuple
    tag: str


def triangle_shape(c: StandardCurve) -> TriangleShape:
    if not c.is_smooth():
        raise SingularCurve("root triangle is degenerate")
    r = c.roots()
    pairs = ((r[0], r[1]), (r[0], r[2]), (r[1], r[2]))
    lengths = sorted(abs(p - q) for p, q in pairs)
    e1, e2, e3 = lengths
    scale = e3

    area2 = abs(((r[1] - r[0]).conjugate() * (r[2] - r[0])).imag)
    if area2 <= _SHAPE_TOL * scale * scale:
        mid = min(
            abs(r[i] - (r[j] + r[l]) / 2)
            for i, j, l in ((0, 1, 2), (1, 0, 2), (2, 0, 1))
        )
        tag = "collinear-with-midpoint" if mid <= _SHAPE_TOL * scale else "collinear"
    elif (e3 - e1) <= _SHAPE_TOL * scale:
        tag = "equilateral"
    elif (e2 - e1) <= _SHAPE_TOL * scale or (e3 - e2) <= _SHAPE_TOL * scale:
        tag = "isosceles"
    else:
        # scalene: the half-plane of J is read from the orientation of the
        # vertices labeled by their opposite edge lengths
        by_opp = sorted(range(3), key=lambda i: abs(r[(i + 1) % 3] - r[(i + 2) % 3]))
        va, vb, vc = (r[i] for i in by_opp)
        orient = ((vb - va).conjugate() * (vc - va)).imag
        tag = "generic-upper" if orient > 0 else "generic-lower"
    return TriangleShape(r, tuple(lengths), tag)


def automorphism_order(c: StandardCurve) -> tuple[int, int]:
    """(total, point-stabilizer) order of the projective automorphism group
    of a smooth curve: stabilizer 6 at J=0, 4 at J=1, 2 otherwise; the
    total is always 9 times that.
    """
    j = j_invariant(c)
    if is_exact(j):
        stab = 6 if j == 0 else 4 if j == 1 else 2
    else:
        jc = complex(j)
        stab = 6 if abs(jc) <= 1e-9 else 4 if abs(jc - 1) <= 1e-9 else 2
    return 9 * stab, stab
