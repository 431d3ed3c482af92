"""Real cubic curves: real flexes, components, the complete invariant,
real symmetries, and the canonical affine picture.

The classification route never reads the pencil parameter off the
coefficients, even when the input visibly sits in the pencil: it reduces
to y^2 = x^3 + ax + b at a real flex, reads (J, sign b, sign a), and
inverts J on the branch the sign selects.  The coefficient pattern is
used only to pick an exact flex when one is available, which keeps the
whole reduction in rational arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .cubic import (
    CubicForm,
    _match_hesse_pattern,
    _point_sort_key,
    evaluate_grid,
    find_flexes,
    transform,
)
from .errors import (
    ComplexCoefficients,
    ConvergenceFailure,
    InvalidInput,
    OneComponent,
    SingularCurve,
)
from .hesse import (
    _flex_group_add,
    _generator_frame,
    _incidence_third,
    hesse_form,
    real_parameters_for_j,
)
from .march import implicit_curve, is_closed
from .projective import (
    ProjLine,
    ProjMap,
    ProjPoint,
    _flat_proportional,
    map_four_points,
)
from .scalars import is_exact, roots_cubic
from .standard import StandardCurve, j_invariant, to_standard

_SQRT3 = math.sqrt(3.0)


def _realify_form(form: CubicForm) -> CubicForm:
    """The same form with real coefficients, or ComplexCoefficients."""
    top = max(abs(complex(c)) for c in form.coeffs)
    out = []
    for c in form.coeffs:
        if isinstance(c, complex):
            if abs(c.imag) > 1e-9 * top:
                raise ComplexCoefficients(
                    f"coefficient {c!r} has a non-real part"
                )
            out.append(c.real)
        else:
            out.append(c)
    return CubicForm(tuple(out))


def count_components(c: StandardCurve) -> int:
    """2 when x^3 + ax + b has three real roots, else 1."""
    for v in (c.a, c.b):
        if isinstance(v, complex) and v.imag != 0:
            raise ComplexCoefficients("curve coefficients must be real")
    expr = 4 * c.a ** 3 + 27 * c.b ** 2
    if c.is_exact:
        if expr == 0:
            raise SingularCurve("4a^3 + 27b^2 = 0")
        return 2 if expr < 0 else 1
    scale = max(abs(complex(4 * c.a ** 3)), abs(complex(27 * c.b ** 2)), 1e-300)
    val = complex(expr).real
    if abs(val) <= 1e-12 * scale:
        raise SingularCurve("4a^3 + 27b^2 vanishes within tolerance")
    return 2 if val < 0 else 1


_HESSE_REAL_FLEXES = (
    ProjPoint(0, 1, -1),
    ProjPoint(1, -1, 0),
    ProjPoint(1, 0, -1),
)


def real_flexes(form: CubicForm):
    """The three conjugation-fixed flexes of a smooth real cubic."""
    form = _realify_form(form)
    hit = _match_hesse_pattern(form)
    if hit is not None:
        kind, k = hit
        if kind == "infinity":
            raise SingularCurve("the triangle member has no flexes")
        if isinstance(k, complex):
            raise ComplexCoefficients("pencil parameter is not real")
        return _HESSE_REAL_FLEXES
    fs = find_flexes(form)
    reals = []
    for p in fs.points:
        if p.is_real(1e-6):
            n = p.normalized()
            coords = tuple(
                c.real if isinstance(c, complex) else c for c in n.coords
            )
            reals.append(ProjPoint(*coords).normalized())
    if len(reals) != 3:
        raise ConvergenceFailure(
            f"found {len(reals)} real flexes, expected exactly 3"
        )
    reals.sort(key=_point_sort_key)
    return tuple(reals)


@dataclass(frozen=True)
class RealClassification:
    """The complete invariant of a smooth real cubic.

    k is the unique real pencil parameter (never 1); J, sign_b and
    sign_a are read from the reduction to y^2 = x^3 + ax + b at a real
    flex.
    """

    k: object
    J: object
    sign_b: int
    sign_a: int
    components: int
    real_flexes: tuple


def _sign_of(v, other, weight) -> int:
    """Sign with a scale-aware zero: v is compared against |other|^weight."""
    if is_exact(v):
        return 0 if v == 0 else (1 if v > 0 else -1)
    vv = complex(v).real
    scale = max(abs(complex(other)) ** weight, abs(vv), 1e-300)
    if abs(vv) <= 1e-10 * scale:
        return 0
    return 1 if vv > 0 else -1


_K_LO = 1.0 - _SQRT3
_K_HI = 1.0 + _SQRT3


def _select_real_k(j_val: float, sign_b: int, components: int) -> float:
    if sign_b == 0:
        return _K_LO if components == 1 else _K_HI
    cands = real_parameters_for_j(j_val)
    inside = [k for k in cands if _K_LO < k < _K_HI]
    outside = [k for k in cands if not (_K_LO < k < _K_HI)]
    pool = inside if sign_b < 0 else outside
    if not pool:
        pool = cands
    if len(pool) > 1:
        keyed = [k for k in pool if (k < 1.0) == (components == 1)]
        if keyed:
            pool = keyed
    if not pool:
        raise ConvergenceFailure(f"no real parameter found for J = {j_val}")
    return pool[0]


def classify_real(form: CubicForm) -> RealClassification:
    form = _realify_form(form)
    flexes = real_flexes(form)
    curve, _ = to_standard(form, flexes[0])
    a, b = curve.a, curve.b
    if isinstance(a, complex):
        a = a.real
    if isinstance(b, complex):
        b = b.real
    curve = StandardCurve(a, b)
    j = j_invariant(curve)
    sign_b = _sign_of(b, a, 1.5)
    sign_a = _sign_of(a, b, 2.0 / 3.0)
    components = count_components(curve)
    k = _select_real_k(float(j), sign_b, components)
    return RealClassification(
        k=k,
        J=j,
        sign_b=sign_b,
        sign_a=sign_a,
        components=components,
        real_flexes=flexes,
    )


# ---------------------------------------------------------------------------
# the six real symmetries
# ---------------------------------------------------------------------------

_PERM_MAPS = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
)


def _realify_map(m: ProjMap) -> ProjMap:
    flat = [complex(v) for r in m.rows for v in r]
    pivot = max(flat, key=abs)
    rows = []
    worst = 0.0
    for r in m.rows:
        row = []
        for v in r:
            w = complex(v) / pivot
            worst = max(worst, abs(w.imag))
            row.append(w.real)
        rows.append(tuple(row))
    if worst > 1e-6:
        raise ConvergenceFailure("symmetry candidate is not a real map")
    return ProjMap(tuple(rows))


def real_automorphisms(form: CubicForm):
    """The six real projective maps preserving the curve: the permutation
    group of the three real flexes."""
    form = _realify_form(form)
    hit = _match_hesse_pattern(form)
    if hit is not None and hit[0] == "finite" and not isinstance(hit[1], complex):
        return tuple(ProjMap(rows) for rows in _PERM_MAPS)
    fs = find_flexes(form)
    pts = list(fs.points)
    third = _incidence_third(pts)
    real_idx = sorted(
        (i for i, p in enumerate(pts) if p.is_real(1e-6)),
        key=lambda i: _point_sort_key(pts[i]),
    )
    if len(real_idx) != 3:
        raise ConvergenceFailure("expected exactly 3 real flexes")
    o, f, f2 = real_idx
    addf, negf = _flex_group_add(third, o)
    if addf(f, f) != f2:
        f2, f = f, f2
        if addf(f, f) != f2:
            raise ConvergenceFailure("real flexes are not collinear")
    u, v, w = _generator_frame(third, o)
    frame = (o, u, v, w)
    src = [pts[i] for i in frame]
    out = []
    gs = (o, f, addf(f, f))
    for eps in (1, -1):
        for g in gs:
            if eps == 1 and g == o:
                out.append(ProjMap.identity())
                continue

            def phi(i):
                base = i if eps == 1 else negf(i)
                return addf(base, g)

            dst = [pts[phi(i)] for i in frame]
            m = _realify_map(map_four_points(src, dst))
            if not _flat_proportional(
                transform(form, m).coeffs, form.coeffs, 1e-6
            ):
                raise ConvergenceFailure("candidate map does not preserve the curve")
            out.append(m)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical affine picture
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalPicture:
    """Affine view with the real flexes at infinity and the center at 0.

    chart maps pencil coordinates to the picture plane; branches are
    sampled polylines in picture coordinates; asymptotes are affine
    lines (u, v, w) meaning u*X + v*Y + w = 0.
    """

    k: object
    chart: ProjMap
    scale: float
    branches: tuple
    closed: tuple
    asymptotes: tuple
    isolated_point: object
    window: tuple


def _base_chart_rows():
    return (
        (1.0, -1.0, 0.0),
        (1.0 / _SQRT3, 1.0 / _SQRT3, -2.0 / _SQRT3),
        (1.0, 1.0, 1.0),
    )


def _axis_crossing_scale(k: float) -> float:
    """1/Y* where Y* is the essential branch's Y-axis crossing.

    On the axis x = y, the curve restricts to 2t^3 - 3k t^2 + 1 in
    t = x/z; the essential crossing is the one farthest from the origin
    (a two-component curve's oval carries the other two).
    """
    roots = roots_cubic(2.0, -3.0 * k, 0.0, 1.0)
    best = None
    for r in roots:
        if abs(r.imag) > 1e-9:
            continue
        t = r.real
        den = 2.0 * t + 1.0
        if abs(den) < 1e-12:
            continue
        y = (2.0 * t - 2.0) / (_SQRT3 * den)
        if best is None or abs(y) > abs(best):
            best = y
    if best is None or best == 0.0:
        raise ConvergenceFailure("no axis crossing found")
    return 1.0 / best


def _clip_line_to_window(u, v, w, window):
    if max(abs(u), abs(v)) <= 1e-12 * abs(w):
        return None
    xmin, xmax, ymin, ymax = window
    pts = []
    if abs(v) > abs(u):
        for x in (xmin, xmax):
            y = -(w + u * x) / v
            if ymin - 1e-9 <= y <= ymax + 1e-9:
                pts.append((x, y))
        for y in (ymin, ymax):
            if abs(u) > 1e-15:
                x = -(w + v * y) / u
                if xmin - 1e-9 <= x <= xmax + 1e-9:
                    pts.append((x, y))
    else:
        for y in (ymin, ymax):
            x = -(w + v * y) / u
            if xmin - 1e-9 <= x <= xmax + 1e-9:
                pts.append((x, y))
        for x in (xmin, xmax):
            if abs(v) > 1e-15:
                y = -(w + u * x) / v
                if ymin - 1e-9 <= y <= ymax + 1e-9:
                    pts.append((x, y))
    if len(pts) < 2:
        return None
    pts.sort()
    return (pts[0], pts[-1])


_K_ONE_DELTA = 1e-2


def canonical_picture(k, window=(-3.2, 3.2, -3.2, 3.2), resolution=401) -> CanonicalPicture:
    """The affine picture of the real pencil member.

    k = 1 produces the limit picture: the branches of the nearby member
    k = 1 - 0.01 plus the isolated point at the origin.  k = +-inf
    produces the three-line picture of the triangle member.
    """
    if isinstance(k, complex):
        if k.imag != 0:
            raise ComplexCoefficients("picture parameter must be real")
        k = k.real
    infinite = isinstance(k, float) and math.isinf(k)
    isolated = None
    if infinite:
        lam = _SQRT3
        asym_src = (ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1))
        curve = None
        k_draw = k
    else:
        k = float(k)
        k_draw = k
        if abs(k - 1.0) < 1e-9:
            k_draw = 1.0 - _K_ONE_DELTA
            isolated = (0.0, 0.0)
        lam = _axis_crossing_scale(k_draw)
        asym_src = (
            ProjLine(k_draw, 1.0, 1.0),
            ProjLine(1.0, k_draw, 1.0),
            ProjLine(1.0, 1.0, k_draw),
        )
        curve = hesse_form(k_draw)
    c = _base_chart_rows()
    chart = ProjMap((
        tuple(lam * t for t in c[0]),
        tuple(lam * t for t in c[1]),
        c[2],
    ))
    asymptotes = []
    for line in asym_src:
        img = chart.line_image(line)
        cs = tuple(complex(t).real for t in img.normalized().coeffs)
        asymptotes.append(cs)
    if infinite:
        branches = []
        for (u, v, w) in asymptotes:
            seg = _clip_line_to_window(u, v, w, window)
            if seg is not None:
                branches.append((seg[0], seg[1]))
        return CanonicalPicture(
            k=k, chart=chart, scale=lam, branches=tuple(branches),
            closed=tuple(False for _ in branches),
            asymptotes=tuple(asymptotes), isolated_point=None, window=window,
        )
    g = transform(curve, chart)
    gr = CubicForm(tuple(complex(t).real for t in g.normalized().coeffs))

    def field(gx, gy):
        return evaluate_grid(gr, gx, gy, 1.0)

    polys = implicit_curve(field, window, resolution)
    branches = tuple(tuple(p) for p in polys if len(p) >= 2)
    closed = tuple(is_closed(list(p)) for p in branches)
    return CanonicalPicture(
        k=k, chart=chart, scale=lam, branches=branches, closed=closed,
        asymptotes=tuple(asymptotes), isolated_point=isolated, window=window,
    )


def cross_ratio_chi(c: StandardCurve):
    """chi = (r2 - r3)/(r1 - r2) over the ascending real roots r1 < r2 < r3."""
    for v in (c.a, c.b):
        if isinstance(v, complex) and v.imag != 0:
            raise ComplexCoefficients("curve coefficients must be real")
    if count_components(c) != 2:
        raise OneComponent("the cross-ratio needs three real roots")
    rs = sorted(r.real for r in c.roots())
    r1, r2, r3 = rs
    return (r2 - r3) / (r1 - r2)
