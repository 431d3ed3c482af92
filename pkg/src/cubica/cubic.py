"""Homogeneous cubic forms in three variables and their geometry.

A form is stored as ten coefficients in the fixed monomial order

    x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3.

Everything here works over both coefficient regimes: exact (int/Fraction)
and floating (float/complex).  Exact input gives exact output wherever the
operation itself is algebraic (evaluate, hessian, transform); root finding
is always floating.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    ConvergenceFailure,
    DegenerateForm,
    InvalidInput,
    SingularCurve,
)
from .projective import ProjLine, ProjMap, ProjPoint, _flat_proportional, proj_distance
from .scalars import all_exact, is_exact, scalar_from_json, scalar_to_json

MONOMIALS = (
    (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
    (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
)
_MONO_INDEX = {m: i for i, m in enumerate(MONOMIALS)}

# ---------------------------------------------------------------------------
# small polynomial kernels: dicts {(i,j,k): coeff} for ternary work,
# plain lists (index = degree) for univariate elimination work
# ---------------------------------------------------------------------------


def _pd_add(a, b):
    out = dict(a)
    for m, v in b.items():
        w = out.get(m, 0) + v
        if w == 0:
            out.pop(m, None)
        else:
            out[m] = w
    return out


def _pd_mul(a, b):
    out = {}
    for (i1, j1, k1), v1 in a.items():
        for (i2, j2, k2), v2 in b.items():
            m = (i1 + i2, j1 + j2, k1 + k2)
            w = out.get(m, 0) + v1 * v2
            if w == 0:
                out.pop(m, None)
            else:
                out[m] = w
    return out


def _pd_scale(a, s):
    if s == 0:
        return {}
    return {m: s * v for m, v in a.items()}


def _pd_diff(a, var):
    out = {}
    for m, v in a.items():
        e = m[var]
        if e == 0:
            continue
        m2 = list(m)
        m2[var] = e - 1
        out[tuple(m2)] = out.get(tuple(m2), 0) + e * v
    return out


def _ladd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = out[i] + v
    return out


def _lmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y == 0:
                continue
            out[i + j] = out[i + j] + x * y
    return out


def _polydet(mat):
    """Determinant of a small matrix of list-polynomials (None = zero)."""
    n = len(mat)
    prev = {0: [1]}
    for k in range(n):
        cur = {}
        row = mat[k]
        for mask, poly in prev.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                ent = row[j]
                if ent is None:
                    continue
                term = _lmul(poly, ent)
                if bin(mask >> (j + 1)).count("1") & 1:
                    term = [-c for c in term]
                key = mask | bit
                if key in cur:
                    cur[key] = _ladd(cur[key], term)
                else:
                    cur[key] = term
        prev = cur
    return prev.get((1 << n) - 1, [0])


# ---------------------------------------------------------------------------
# the form itself
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CubicForm:
    """A ternary cubic, identified projectively (up to a global factor)."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if len(cs) != 10:
            raise InvalidInput("a cubic form needs exactly 10 coefficients")
        if all(c == 0 for c in cs):
            raise InvalidInput("the zero polynomial is not a cubic form")
        object.__setattr__(self, "coeffs", cs)

    @property
    def is_exact(self) -> bool:
        return all_exact(self.coeffs)

    def as_dict(self):
        return {m: c for m, c in zip(MONOMIALS, self.coeffs) if c != 0}

    def coeff(self, i: int, j: int, k: int):
        return self.coeffs[_MONO_INDEX[(i, j, k)]]

    def evaluate(self, point):
        """Value at a point (ProjPoint or coordinate triple)."""
        x, y, z = point.coords if isinstance(point, ProjPoint) else point
        c = self.coeffs
        x2, y2, z2 = x * x, y * y, z * z
        return (
            c[0] * x2 * x + c[1] * x2 * y + c[2] * x2 * z
            + c[3] * x * y2 + c[4] * x * y * z + c[5] * x * z2
            + c[6] * y2 * y + c[7] * y2 * z + c[8] * y * z2 + c[9] * z2 * z
        )

    def gradient(self, point):
        x, y, z = point.coords if isinstance(point, ProjPoint) else point
        c = self.coeffs
        x2, y2, z2 = x * x, y * y, z * z
        gx = 3 * c[0] * x2 + 2 * c[1] * x * y + 2 * c[2] * x * z + c[3] * y2 + c[4] * y * z + c[5] * z2
        gy = c[1] * x2 + 2 * c[3] * x * y + c[4] * x * z + 3 * c[6] * y2 + 2 * c[7] * y * z + c[8] * z2
        gz = c[2] * x2 + c[4] * x * y + 2 * c[5] * x * z + c[7] * y2 + 2 * c[8] * y * z + 3 * c[9] * z2
        return (gx, gy, gz)

    def hessian(self) -> "CubicForm":
        """Determinant of the matrix of second partials, again a cubic."""
        d = self.as_dict()
        firsts = [_pd_diff(d, v) for v in range(3)]
        m = [[_pd_diff(firsts[a], b) for b in range(3)] for a in range(3)]
        acc = {}
        for sign, (p, q, r) in (
            (1, (0, 1, 2)), (1, (1, 2, 0)), (1, (2, 0, 1)),
            (-1, (0, 2, 1)), (-1, (1, 0, 2)), (-1, (2, 1, 0)),
        ):
            term = _pd_mul(_pd_mul(m[0][p], m[1][q]), m[2][r])
            acc = _pd_add(acc, term if sign > 0 else _pd_scale(term, -1))
        coeffs = tuple(acc.get(mon, 0) for mon in MONOMIALS)
        if all(c == 0 for c in coeffs):
            raise DegenerateForm("hessian vanishes identically")
        return CubicForm(coeffs)

    def normalized(self) -> "CubicForm":
        """Scale to a projective normal form (same convention as points)."""
        if self.is_exact:
            fracs = [Fraction(c) for c in self.coeffs]
            den = math.lcm(*(f.denominator for f in fracs))
            ints = [int(f * den) for f in fracs]
            g = math.gcd(*ints)
            ints = [v // g for v in ints]
            lead = next(v for v in ints if v != 0)
            if lead < 0:
                ints = [-v for v in ints]
            return CubicForm(tuple(ints))
        cs = [complex(c) for c in self.coeffs]
        pivot = max(range(10), key=lambda i: abs(cs[i]))
        div = cs[pivot]
        out = [c / div for c in cs]
        out[pivot] = 1.0 + 0.0j
        if all(v.imag == 0 for v in out):
            out = [v.real for v in out]
        return CubicForm(tuple(out))

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return _flat_proportional(list(self.coeffs), list(other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"CubicForm({self.coeffs!r})"

    def to_json(self):
        return {"coeffs": [scalar_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        """Parse a form; accepts {"coeffs": [...]}, {"hesse": k} and
        {"standard": [a, b]} shorthand."""
        if not isinstance(obj, dict):
            raise InvalidInput("a cubic form is a JSON object")
        if "coeffs" in obj:
            cs = obj["coeffs"]
            if not isinstance(cs, (list, tuple)) or len(cs) != 10:
                raise InvalidInput("coeffs must list 10 scalars")
            return cls(tuple(scalar_from_json(c) for c in cs))
        if "hesse" in obj:
            from .hesse import hesse_form

            k = obj["hesse"]
            if isinstance(k, str) and k.strip().lower() in ("inf", "infinity", "oo"):
                k = math.inf
            else:
                k = scalar_from_json(k)
            return hesse_form(k)
        if "standard" in obj:
            from .standard import StandardCurve

            ab = obj["standard"]
            if not isinstance(ab, (list, tuple)) or len(ab) != 2:
                raise InvalidInput("standard shorthand needs [a, b]")
            return StandardCurve(*(scalar_from_json(v) for v in ab)).cubic_form()
        raise InvalidInput("unknown cubic form description")


def evaluate_grid(form: CubicForm, x, y, z):
    """Vectorized evaluation on numpy arrays (used by the renderers)."""
    acc = np.zeros(np.broadcast(x, y, z).shape)
    for (i, j, k), c in zip(MONOMIALS, form.coeffs):
        if c == 0:
            continue
        acc = acc + float(c) * (x ** i) * (y ** j) * (z ** k)
    return acc


# ---------------------------------------------------------------------------
# coordinate changes
# ---------------------------------------------------------------------------


def transform(form: CubicForm, a: ProjMap) -> CubicForm:
    """The form in new coordinates: returns literally form o a^{-1}.

    No renormalization is applied, so scalar identities such as the
    Hessian change-of-coordinates law hold coefficient for coefficient.
    """
    b = a.inverse().rows
    lin = [
        {(1, 0, 0): b[r][0], (0, 1, 0): b[r][1], (0, 0, 1): b[r][2]}
        for r in range(3)
    ]
    powers = []
    for l in lin:
        ps = [{(0, 0, 0): 1}, l]
        ps.append(_pd_mul(ps[1], l))
        ps.append(_pd_mul(ps[2], l))
        powers.append(ps)
    acc = {}
    for (i, j, k), c in zip(MONOMIALS, form.coeffs):
        if c == 0:
            continue
        term = _pd_mul(_pd_mul(powers[0][i], powers[1][j]), powers[2][k])
        acc = _pd_add(acc, _pd_scale(term, c))
    return CubicForm(tuple(acc.get(mon, 0) for mon in MONOMIALS))


def restrict_to_line(form: CubicForm, p: ProjPoint, q: ProjPoint):
    """Coefficients [c0, c1, c2, c3] of t -> form(s*p + t*q).

    c0 = form(p), c1 = grad(p).q, c2 = grad(q).p, c3 = form(q).
    """
    pc, qc = p.coords, q.coords
    gp, gq = form.gradient(pc), form.gradient(qc)
    c0 = form.evaluate(pc)
    c1 = sum(g * c for g, c in zip(gp, qc))
    c2 = sum(g * c for g, c in zip(gq, pc))
    c3 = form.evaluate(qc)
    return [c0, c1, c2, c3]


def tangent_line(form: CubicForm, p: ProjPoint) -> ProjLine | None:
    """Gradient line at a point; None when the gradient vanishes there."""
    pn = p.normalized()
    g = form.gradient(pn)
    if all_exact(g) and pn.is_exact:
        if all(v == 0 for v in g):
            return None
        return ProjLine(*g)
    scale = max(abs(complex(c)) for c in form.coeffs)
    if max(abs(complex(v)) for v in g) <= 1e-12 * scale:
        return None
    return ProjLine(*g)


def _line_second_point(line: ProjLine, p: ProjPoint) -> ProjPoint:
    """A deterministic point on the line distinct from p."""
    u, v, w = line.coeffs
    candidates = []
    for c in ((v, -u, 0), (w, 0, -u), (0, w, -v)):
        if any(x != 0 for x in c):
            candidates.append(ProjPoint(*c))
    best = None
    best_d = -1.0
    for cand in candidates:
        d = proj_distance(cand, p)
        if d > 0.1:
            return cand
        if d > best_d:
            best, best_d = cand, d
    if best is None or best_d <= 1e-12:
        raise InvalidInput("line has no second point distinct from p")
    return best


def flex_defect(form: CubicForm, p: ProjPoint) -> float:
    """How far the point is from being a flex.

    Zero means: p is on the curve and its tangent meets the curve with
    multiplicity three there.  Computed from the restriction of the form
    to the tangent line, scale-free.
    """
    fn = form.normalized()
    pn = p.normalized()
    line = tangent_line(fn, pn)
    if line is None:
        return math.inf
    q = _line_second_point(line.normalized(), pn)
    if not q.is_exact:
        q = q.normalized()
    c = restrict_to_line(fn, pn, q)
    mags = [abs(complex(v)) for v in c]
    top = max(mags)
    if top == 0.0:
        return math.inf
    return max(mags[0], mags[1], mags[2]) / top


def is_flex(form: CubicForm, p: ProjPoint, tol: float = 1e-6) -> bool:
    return flex_defect(form, p) <= tol


# ---------------------------------------------------------------------------
# elimination helpers
# ---------------------------------------------------------------------------

# variable permutations used when the z-resultant degenerates; each entry
# maps new exponents from old: sigma = (a, b, c) means the new variable
# order is (old_a, old_b, old_c), i.e. we eliminate old_c.
_ELIM_PERMS = ((0, 1, 2), (0, 2, 1), (2, 1, 0))


def _permute_coeffs(coeffs, sigma):
    out = [0] * 10
    for (i, j, k), c in zip(MONOMIALS, coeffs):
        exps = (i, j, k)
        new = tuple(exps[sigma[n]] for n in range(3))
        out[_MONO_INDEX[new]] = c
    return tuple(out)


def _permute_point(coords, sigma):
    out = [0, 0, 0]
    for n in range(3):
        out[sigma[n]] = coords[n]
    return tuple(out)


def _z_split(coeffs):
    """c[k][i]: coefficient of x^i y^(3-k-i) z^k, with y read as 1."""
    out = [[0] * (4 - k) for k in range(4)]
    for (i, j, k), v in zip(MONOMIALS, coeffs):
        out[k][i] = out[k][i] + v
    return out


def _as_listpoly(seq):
    return None if all(v == 0 for v in seq) else list(seq)


def _sylvester_det(f_cs, g_cs, nf, ng):
    """Resultant in z of two polynomials with list-poly coefficients.

    f_cs[j] is the coefficient of z^j (a list-poly in x), degree nf; same
    for g.  Returns a list-poly in x.
    """
    n = nf + ng
    mat = []
    frow = [_as_listpoly(f_cs[j]) if f_cs[j] is not None else None for j in range(nf + 1)]
    grow = [_as_listpoly(g_cs[j]) if g_cs[j] is not None else None for j in range(ng + 1)]
    fdesc = list(reversed(frow))
    gdesc = list(reversed(grow))
    for i in range(ng):
        mat.append([None] * i + fdesc + [None] * (ng - 1 - i))
    for i in range(nf):
        mat.append([None] * i + gdesc + [None] * (nf - 1 - i))
    return _polydet(mat)


def _complex_form(form: CubicForm) -> CubicForm:
    cs = [complex(c) for c in form.coeffs]
    top = max(abs(c) for c in cs)
    return CubicForm(tuple(c / top for c in cs))


def _cluster_values(values, tol):
    """Greedy clustering of complex numbers; returns representatives."""
    reps = []
    for v in sorted(values, key=lambda c: (c.real, c.imag)):
        for i, r in enumerate(reps):
            if abs(v - r[0] / r[1]) <= tol * max(1.0, abs(v)):
                reps[i] = (r[0] + v, r[1] + 1)
                break
        else:
            reps.append((v, 1))
    return [s / n for s, n in reps]


def _ratio_candidates(res_poly, total_degree):
    """Projective (x:y) roots of a homogeneous polynomial given by its
    y=1 coefficient list."""
    mags = [abs(c) for c in res_poly]
    top = max(mags)
    if top == 0.0:
        return None
    deg = 0
    for i, m in enumerate(mags):
        if m > 1e-10 * top:
            deg = i
    if all(m <= 1e-10 * top for m in mags):
        return None
    coeffs_desc = list(reversed(res_poly[: deg + 1]))
    ratios = []
    if deg > 0:
        finite = np.roots(np.array(coeffs_desc, dtype=complex))
        for t in _cluster_values([complex(r) for r in finite], 1e-7):
            if abs(t) <= 1.0:
                ratios.append((t, 1.0 + 0j))
            else:
                ratios.append((1.0 + 0j, 1.0 / t))
    if deg < total_degree:
        ratios.append((1.0 + 0j, 0.0 + 0j))
    return ratios


def _eval_zcoeffs(zc, x0, y0):
    """Univariate polynomial in z at fixed (x0, y0): descending coeffs."""
    out = []
    for k in range(3, -1, -1):
        row = zc[k]
        acc = 0j
        d = len(row) - 1  # degree in x of this row
        for i, c in enumerate(row):
            if c == 0:
                continue
            acc += complex(c) * (x0 ** i) * (y0 ** (d - i))
        out.append(acc)
    return out  # [z^3, z^2, z^1, z^0]


def _solve2(a11, a12, a21, a22, b1, b2):
    det = a11 * a22 - a12 * a21
    if abs(det) < 1e-300:
        return None
    return ((b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det)


def _polish_pair(f: CubicForm, g: CubicForm, coords, iters: int = 16):
    """Newton iteration for the 2-equation system f = g = 0 near coords."""
    p = [complex(c) for c in coords]
    top = max(abs(c) for c in p)
    p = [c / top for c in p]
    pivot = max(range(3), key=lambda i: abs(p[i]))
    free = [i for i in range(3) if i != pivot]

    def residual(q):
        return max(abs(f.evaluate(q)), abs(g.evaluate(q)))

    best = list(p)
    best_r = residual(p)
    stall = 0
    for _ in range(iters):
        fv = f.evaluate(p)
        gv = g.evaluate(p)
        gf = f.gradient(p)
        gg = g.gradient(p)
        step = _solve2(
            gf[free[0]], gf[free[1]], gg[free[0]], gg[free[1]], fv, gv
        )
        if step is None:
            break
        p[free[0]] -= step[0]
        p[free[1]] -= step[1]
        r = residual(p)
        if r < best_r:
            best, best_r = list(p), r
            stall = 0
        else:
            stall += 1
            if stall >= 2:
                break
        if best_r < 1e-14:
            break
    return tuple(best), best_r


@dataclass(frozen=True)
class FlexSet:
    """The nine flexes of a smooth cubic, with polish residuals.

    The residual of a flex is max(|form|, |hessian|) evaluated at the
    normalized point, with both forms scaled to unit largest coefficient.
    """

    points: tuple
    residuals: tuple

    def __post_init__(self):
        if len(self.points) != 9:
            raise ConvergenceFailure("a flex set holds exactly nine points")

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return 9

    def __getitem__(self, i):
        return self.points[i]


def _point_sort_key(p: ProjPoint):
    n = p.normalized().to_complex()
    return tuple((round(c.real, 9) + 0.0, round(c.imag, 9) + 0.0) for c in n)


def _true_zdeg(zc, top):
    for k in range(3, -1, -1):
        if any(abs(complex(v)) > 1e-12 * top for v in zc[k]):
            return k
    return -1


def _flex_candidates_for_perm(f: CubicForm, h: CubicForm):
    """Flex candidates for one choice of elimination variable.

    Returns None when the z-resultant degenerates for this orientation.
    The Sylvester block uses the true z-degrees: the Hessian routinely
    drops z-degree (e.g. a multiple of xyz).
    """
    fz = _z_split(f.coeffs)
    hz = _z_split(h.coeffs)
    df = _true_zdeg(fz, max(abs(complex(c)) for c in f.coeffs))
    dh = _true_zdeg(hz, max(abs(complex(c)) for c in h.coeffs))
    if df < 1 or dh < 1:
        return None
    res = _sylvester_det(fz[: df + 1], hz[: dh + 1], df, dh)
    total = dh * (3 - df) + df * (3 - dh) + df * dh
    ratios = _ratio_candidates(res, total)
    if ratios is None:
        return None
    found = []
    seeds = []
    for (x0, y0) in ratios:
        zc = _eval_zcoeffs(fz, x0, y0)
        ztop = max(abs(c) for c in zc)
        if ztop == 0.0:
            continue
        lead = 0
        while lead < 3 and abs(zc[lead]) <= 1e-12 * ztop:
            lead += 1
        poly = zc[lead:]
        if len(poly) < 2:
            continue
        for z in np.roots(np.array(poly, dtype=complex)):
            seeds.append((x0, y0, complex(z)))
    # points on the coordinate axes can hide from a z-resultant when the
    # leading z-coefficients degenerate there
    seeds.extend(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    for raw in seeds:
        top = max(abs(complex(c)) for c in raw)
        coords = tuple(complex(c) / top for c in raw)
        if abs(h.evaluate(coords)) > 1e-3 or abs(f.evaluate(coords)) > 1e-3:
            continue
        polished, r = _polish_pair(f, h, coords)
        if r < 1e-8:
            found.append((polished, r))
    return found


def find_flexes(form: CubicForm) -> FlexSet:
    """All nine flexes of a smooth cubic, as floating projective points.

    Solved by eliminating z from the curve and its Hessian, with fallback
    elimination variables when the leading coefficients degenerate.
    """
    f0 = _complex_form(form)
    h0 = _complex_form(f0.hessian())
    last_error = None
    for sigma in _ELIM_PERMS:
        f = CubicForm(_permute_coeffs(f0.coeffs, sigma))
        h = CubicForm(_permute_coeffs(h0.coeffs, sigma))
        found = _flex_candidates_for_perm(f, h)
        if found is None:
            continue
        # cluster candidates into distinct projective points
        clusters: list[tuple[ProjPoint, float]] = []
        for coords, r in sorted(found, key=lambda t: t[1]):
            p = ProjPoint(*_permute_point(coords, sigma)).normalized()
            if all(proj_distance(p, q) > 1e-6 for q, _ in clusters):
                clusters.append((p, r))
        if len(clusters) == 9:
            clusters.sort(key=lambda t: _point_sort_key(t[0]))
            return FlexSet(
                tuple(p for p, _ in clusters), tuple(r for _, r in clusters)
            )
        last_error = ConvergenceFailure(
            f"found {len(clusters)} distinct flexes, expected 9"
        )
    # distinguish a singular curve from a numerical failure
    try:
        sing = singular_points(form)
    except DegenerateForm:
        raise SingularCurve("form has a repeated factor") from None
    if sing:
        raise SingularCurve(f"curve is singular at {sing[0]!r}")
    raise last_error if last_error is not None else ConvergenceFailure(
        "flex search failed in every elimination variable"
    )


# ---------------------------------------------------------------------------
# singular locus
# ---------------------------------------------------------------------------

_SHEAR_MAPS = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
    ((2, 1, -1), (1, -2, 1), (0, 1, 3)),
    ((1, -1, 2), (3, 1, 0), (-1, 2, 1)),
)


def _match_hesse_pattern(form: CubicForm):
    """(kind, value) for recognizably Hesse-shaped coefficient tuples."""
    c = form.coeffs
    top = max(abs(complex(v)) for v in c)
    zero = (
        (lambda v: v == 0)
        if form.is_exact
        else (lambda v: abs(complex(v)) <= 1e-14 * top)
    )
    others = [c[i] for i in (1, 2, 3, 5, 7, 8)]
    if not all(zero(v) for v in others):
        return None
    cubes = (c[0], c[6], c[9])
    if all(zero(v) for v in cubes):
        if zero(c[4]):
            return None
        return ("infinity", None)
    if form.is_exact:
        if not (c[0] == c[6] == c[9] != 0):
            return None
        k = -Fraction(c[4]) / (3 * Fraction(c[0]))
        return ("finite", int(k) if k.denominator == 1 else k)
    if any(zero(v) for v in cubes):
        return None
    if not all(abs(complex(v) - complex(c[0])) <= 1e-12 * top for v in cubes):
        return None
    k = -complex(c[4]) / (3 * complex(c[0]))
    if abs(k.imag) == 0.0:
        k = k.real
    return ("finite", k)


def _match_standard_pattern(form: CubicForm):
    """(a, b) when the form is -y^2 z + x^3 + a x z^2 + b z^3 up to scale."""
    c = form.coeffs
    top = max(abs(complex(v)) for v in c)
    zero = (
        (lambda v: v == 0)
        if form.is_exact
        else (lambda v: abs(complex(v)) <= 1e-14 * top)
    )
    if not all(zero(c[i]) for i in (1, 2, 3, 4, 6, 8)):
        return None
    s = c[0]
    if zero(s):
        return None
    if form.is_exact:
        if c[7] != -s:
            return None
        a = Fraction(c[5]) / Fraction(s)
        b = Fraction(c[9]) / Fraction(s)
        return (
            int(a) if a.denominator == 1 else a,
            int(b) if b.denominator == 1 else b,
        )
    if abs(complex(c[7]) + complex(s)) > 1e-12 * top:
        return None
    a = complex(c[5]) / complex(s)
    b = complex(c[9]) / complex(s)
    if a.imag == 0.0:
        a = a.real
    if b.imag == 0.0:
        b = b.real
    return (a, b)


def _k_is_singular(k) -> bool:
    if is_exact(k):
        return k ** 3 == 1
    if isinstance(k, complex):
        return abs(k ** 3 - 1) <= 1e-9
    if math.isinf(k):
        return True
    return abs(k ** 3 - 1) <= 1e-9


def _hesse_singular_points(k):
    """Singular points of a Hesse member with k^3 = 1: the vertices of the
    triangle of lines alpha*x + beta*y + z with alpha^3 = beta^3 = 1 and
    alpha*beta = k."""
    from .projective import meet

    g = complex(-0.5, math.sqrt(3) / 2)
    kk = complex(k)
    lines = []
    for a_exp in range(3):
        alpha = g ** a_exp
        beta = kk / alpha
        lines.append(ProjLine(alpha, beta, 1.0))
    pts = []
    for i in range(3):
        p = meet(lines[i], lines[(i + 1) % 3]).normalized()
        if all(proj_distance(p, q) > 1e-9 for q in pts):
            pts.append(p)
    pts.sort(key=_point_sort_key)
    return pts


def _gn_polish(partials, coords, iters=14):
    """Gauss-Newton for the overdetermined gradient system (3 eqs, chart)."""
    p = [complex(c) for c in coords]
    top = max(abs(c) for c in p)
    p = [c / top for c in p]
    pivot = max(range(3), key=lambda i: abs(p[i]))
    free = [i for i in range(3) if i != pivot]

    def residual(q):
        return max(abs(pf.evaluate(q)) for pf in partials)

    best, best_r = list(p), residual(p)
    for _ in range(iters):
        vals = [pf.evaluate(p) for pf in partials]
        grads = [pf.gradient(p) for pf in partials]
        # normal equations for the 3x2 complex Jacobian
        a11 = sum(g[free[0]].conjugate() * g[free[0]] for g in grads)
        a12 = sum(g[free[0]].conjugate() * g[free[1]] for g in grads)
        a21 = sum(g[free[1]].conjugate() * g[free[0]] for g in grads)
        a22 = sum(g[free[1]].conjugate() * g[free[1]] for g in grads)
        b1 = sum(g[free[0]].conjugate() * v for g, v in zip(grads, vals))
        b2 = sum(g[free[1]].conjugate() * v for g, v in zip(grads, vals))
        step = _solve2(a11, a12, a21, a22, b1, b2)
        if step is None:
            break
        p[free[0]] -= step[0]
        p[free[1]] -= step[1]
        r = residual(p)
        if r < best_r:
            best, best_r = list(p), r
        if best_r < 1e-14:
            break
    return tuple(best), best_r


def _quadratic_forms(form: CubicForm):
    """The three partial derivatives as 6-coefficient quadratic dicts."""
    d = form.as_dict()
    return [_pd_diff(d, v) for v in range(3)]


def _quad_z_split(q):
    out = [[0] * (3 - k) for k in range(3)]
    for (i, j, k), v in q.items():
        out[k][i] = out[k][i] + v
    return out


def _sheared_singular_candidates(form: CubicForm):
    """Common zeros of the gradient in (assumed generic) coordinates.

    Returns None when the elimination degenerates, meaning the gradient
    polynomials share a component in every tested pairing.
    """
    parts = _quadratic_forms(form)
    splits = [_quad_z_split(q) for q in parts]
    leads = [abs(complex(s[2][0])) for s in splits]
    order = sorted(range(3), key=lambda i: -leads[i])
    if leads[order[1]] < 1e-10:
        return None
    ia, ib = order[0], order[1]
    res = _sylvester_det(splits[ia], splits[ib], 2, 2)
    # partials sharing a component give an identically-zero resultant;
    # under floating arithmetic that shows up as coefficients far below
    # the product of the input scales
    scales = []
    for idx in (ia, ib):
        scales.append(max(
            (abs(complex(c)) for row in splits[idx] for c in row), default=0.0
        ))
    res_top = max((abs(complex(c)) for c in res), default=0.0)
    if res_top <= 1e-10 * (scales[0] * scales[1]) ** 2:
        return None
    ratios = _ratio_candidates(res, 4)
    if ratios is None:
        return None
    cands = []
    for (x0, y0) in ratios:
        desc = []
        for k in (2, 1, 0):
            row = splits[ia][k]
            d = len(row) - 1
            desc.append(
                sum(complex(c) * x0 ** i * y0 ** (d - i) for i, c in enumerate(row))
            )
        if abs(desc[0]) < 1e-12:
            # leading z^2 coefficient vanished at this ratio: fall back to
            # the linear part
            if abs(desc[1]) < 1e-12:
                continue
            zs = [-desc[2] / desc[1]]
        else:
            zs = [complex(z) for z in np.roots(np.array(desc, dtype=complex))]
        for z in zs:
            coords = (x0, y0, z)
            t = max(abs(c) for c in coords)
            coords = tuple(c / t for c in coords)
            vals = [
                sum(
                    complex(v) * coords[0] ** i * coords[1] ** j * coords[2] ** kk
                    for (i, j, kk), v in parts[m].items()
                )
                for m in range(3)
            ]
            if max(abs(v) for v in vals) > 1e-4:
                continue
            cands.append(coords)
    return cands


class _PartialForm:
    """Adapter exposing a quadratic dict through the evaluate/gradient API."""

    def __init__(self, d):
        self.d = d

    def evaluate(self, p):
        x, y, z = p
        return sum(v * x ** i * y ** j * z ** k for (i, j, k), v in self.d.items())

    def gradient(self, p):
        return tuple(
            self._eval(_pd_diff(self.d, var), p) for var in range(3)
        )

    @staticmethod
    def _eval(d, p):
        x, y, z = p
        return sum(v * x ** i * y ** j * z ** k for (i, j, k), v in d.items())


def singular_points(form: CubicForm) -> list[ProjPoint]:
    """All singular points of the curve; empty for a smooth curve.

    Forms with a repeated linear factor have a whole curve of singular
    points and raise DegenerateForm instead of returning a list.
    """
    pat = _match_hesse_pattern(form)
    if pat is not None:
        kind, k = pat
        if kind == "infinity":
            pts = [ProjPoint(0, 0, 1), ProjPoint(0, 1, 0), ProjPoint(1, 0, 0)]
            pts.sort(key=_point_sort_key)
            return pts
        if not _k_is_singular(k):
            return []
        return _hesse_singular_points(k)
    std = _match_standard_pattern(form)
    if std is not None:
        a, b = std
        disc = -(4 * a ** 3 + 27 * b ** 2)
        if all_exact((a, b)):
            if disc != 0:
                return []
            r = -3 * Fraction(b) / (2 * Fraction(a)) if a != 0 else Fraction(0)
            return [ProjPoint(r, 0, 1).normalized()]
        scale = max(1.0, abs(complex(a)) ** 1.5, abs(complex(b)))
        if abs(complex(disc)) > 1e-9 * scale ** 2:
            return []
        r = complex(-3 * b) / complex(2 * a) if abs(complex(a)) > 1e-12 else 0.0
        return [ProjPoint(r, 0, 1).normalized()]

    f0 = _complex_form(form)
    degenerate_everywhere = True
    accepted: list[tuple[ProjPoint, float]] = []
    parts0 = [_PartialForm(q) for q in _quadratic_forms(f0)]
    for shear in _SHEAR_MAPS:
        amap = ProjMap(shear)
        sheared = transform(f0, amap)
        sheared = _complex_form(sheared)
        cands = _sheared_singular_candidates(sheared)
        if cands is None:
            continue
        degenerate_everywhere = False
        for coords in cands:
            # map back: singular(form) = A^{-1} singular(sheared)
            back = amap.inverse().apply(ProjPoint(*coords))
            polished, r = _gn_polish(parts0, back.to_complex())
            if r < 1e-8:
                p = ProjPoint(*polished).normalized()
                if all(proj_distance(p, q) > 1e-6 for q, _ in accepted):
                    accepted.append((p, r))
        break
    if degenerate_everywhere:
        raise DegenerateForm(
            "gradient polynomials share a component: singular locus is a curve"
        )
    accepted.sort(key=lambda t: _point_sort_key(t[0]))
    return [p for p, _ in accepted]


def is_smooth(form: CubicForm) -> bool:
    try:
        return not singular_points(form)
    except DegenerateForm:
        return False
