"""The pencil of cubics x^3 + y^3 + z^3 = 3k xyz.

Carries the parameter-level theory: the nine base points shared by every
member, the 18-element projective symmetry group fixing each member, the
invariant J(k), the involution eta and the 12-element Mobius group whose
orbits are exactly the parameter fibers of J, and the reduction of an
arbitrary smooth cubic into the pencil.

The symbol for the parameter at infinity is math.inf (the member xyz=0).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cubic import CubicForm, find_flexes, transform
from .errors import ConvergenceFailure, InvalidInput, SingularParameter
from .projective import ProjMap, ProjPoint, _flat_proportional, line_through, map_four_points
from .scalars import is_exact

_OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)


def _is_infinite(k) -> bool:
    if is_exact(k):
        return False
    if isinstance(k, complex):
        return math.isinf(k.real) or math.isinf(k.imag)
    return math.isinf(k)


def hesse_form(k) -> CubicForm:
    """The member with parameter k; k = math.inf gives the triangle xyz=0."""
    if _is_infinite(k):
        return CubicForm((0, 0, 0, 0, 1, 0, 0, 0, 0, 0))
    return CubicForm((1, 0, 0, 0, -3 * k, 0, 1, 0, 0, 1))


def is_smooth_parameter(k) -> bool:
    if _is_infinite(k):
        return False
    if is_exact(k):
        return k ** 3 != 1
    return abs(complex(k) ** 3 - 1) > 1e-9


def exceptional_points() -> list[ProjPoint]:
    """The nine points shared by all members: (0:1:-g), (-g:0:1), (1:-g:0)
    with g running over the cube roots of unity.

    These are the flexes of every smooth member.  The g=1 representatives
    are exact integer points.
    """
    roots = (1, _OMEGA, _OMEGA.conjugate())
    pts = []
    for g in roots:
        pts.append(ProjPoint(0, 1, -g))
    for g in roots:
        pts.append(ProjPoint(-g, 0, 1))
    for g in roots:
        pts.append(ProjPoint(1, -g, 0))
    return pts


# ---------------------------------------------------------------------------
# the 18-element symmetry group
# ---------------------------------------------------------------------------


def _closure(generators, limit):
    group = [ProjMap.identity()]
    frontier = list(group)
    while frontier:
        new = []
        for m in frontier:
            for g in generators:
                cand = g.compose(m)
                if all(cand != h for h in group):
                    group.append(cand)
                    new.append(cand)
                    if len(group) > limit:
                        raise ConvergenceFailure("group closure exceeded bound")
        frontier = new
    return group


def translation_subgroup() -> list[ProjMap]:
    """The 9 maps acting simply transitively on the base points."""
    cyc = ProjMap(((0, 0, 1), (1, 0, 0), (0, 1, 0)))
    diag = ProjMap(((1, 0, 0), (0, _OMEGA, 0), (0, 0, _OMEGA.conjugate())))
    group = _closure((cyc, diag), 9)
    if len(group) != 9:
        raise ConvergenceFailure("translation subgroup closure failed")
    return group


def symmetry_group() -> list[ProjMap]:
    """All 18 projective maps carrying every member of the pencil onto
    itself.  The first 9 entries form the translation subgroup (isomorphic
    to Z/3 + Z/3); the rest are its coset under (x:y:z) -> (y:x:z).
    """
    n = translation_subgroup()
    swap = ProjMap(((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    return n + [m.compose(swap) for m in n]


# ---------------------------------------------------------------------------
# the invariant J(k)
# ---------------------------------------------------------------------------


def j_of_k(k):
    """J of the member with parameter k: (k(k^3+8) / (4(k^3-1)))^3.

    Exact in, exact out.  Raises SingularParameter on the four singular
    members (k^3 = 1 or k = infinity).
    """
    if _is_infinite(k):
        raise SingularParameter("the member at k=infinity is singular")
    if is_exact(k):
        kf = Fraction(k)
        u = kf ** 3
        if u == 1:
            raise SingularParameter(f"k={k} gives a singular member")
        val = (kf * (u + 8) / (4 * (u - 1))) ** 3
        return int(val) if val.denominator == 1 else val
    kc = complex(k)
    if abs(kc ** 3 - 1) <= 1e-9:
        raise SingularParameter(f"k={k} is within tolerance of a singular member")
    val = (kc * (kc ** 3 + 8) / (4 * (kc ** 3 - 1))) ** 3
    if not isinstance(k, complex):
        return val.real
    return val


def eta(k):
    """The involution k -> (k+2)/(k-1); fixes J, swaps 1 and infinity."""
    if _is_infinite(k):
        return 1
    if is_exact(k):
        if k == 1:
            return math.inf
        val = (Fraction(k) + 2) / (Fraction(k) - 1)
        return int(val) if val.denominator == 1 else val
    kc = complex(k)
    if kc == 1:
        return math.inf
    val = (kc + 2) / (kc - 1)
    if not isinstance(k, complex):
        return val.real
    return val


# ---------------------------------------------------------------------------
# the tetrahedral parameter group
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MobiusMap:
    """A fractional-linear map k -> (a k + b)/(c k + d), det != 0."""

    entries: tuple  # (a, b, c, d)

    def __post_init__(self):
        e = tuple(self.entries)
        if len(e) != 4:
            raise InvalidInput("a Mobius map has 4 entries")
        a, b, c, d = e
        if all(is_exact(v) for v in e):
            if a * d - b * c == 0:
                raise InvalidInput("Mobius map has zero determinant")
        else:
            ec = [complex(v) for v in e]
            top = max(abs(v) for v in ec)
            if top == 0 or abs(ec[0] * ec[3] - ec[1] * ec[2]) <= 1e-12 * top * top:
                raise InvalidInput("Mobius map has zero determinant")
        object.__setattr__(self, "entries", e)

    def apply(self, k):
        a, b, c, d = self.entries
        exact = all(is_exact(v) for v in self.entries) and is_exact(k) and not _is_infinite(k)
        if exact:
            kf = Fraction(k)
            den = Fraction(c) * kf + Fraction(d)
            if den == 0:
                return math.inf
            val = (Fraction(a) * kf + Fraction(b)) / den
            return int(val) if val.denominator == 1 else val
        a, b, c, d = (complex(v) for v in self.entries)
        if _is_infinite(k):
            if abs(c) <= 1e-14 * max(abs(a), abs(d), 1.0):
                return math.inf
            return a / c
        kc = complex(k)
        den = c * kc + d
        if abs(den) <= 1e-14 * max(1.0, abs(kc)):
            return math.inf
        return (a * kc + b) / den

    def __call__(self, k):
        return self.apply(k)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MobiusMap((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return _flat_proportional(list(self.entries), list(other.entries))

    __hash__ = None

    def __repr__(self):
        return f"MobiusMap({self.entries!r})"


def _eta_realization() -> ProjMap:
    g = _OMEGA
    return ProjMap(((1, 1, 1), (1, g, g.conjugate()), (1, g.conjugate(), g)))


def _tetrahedral_pairs():
    """The 12 Mobius maps paired with projective maps realizing them:
    transform(hesse_form(k), P) is proportional to hesse_form(mu(k))."""
    gens = [
        (MobiusMap((1, 2, 1, -1)), _eta_realization()),
        (
            MobiusMap((_OMEGA, 0, 0, 1)),
            ProjMap(((_OMEGA.conjugate(), 0, 0), (0, 1, 0), (0, 0, 1))),
        ),
    ]
    pairs = [(MobiusMap((1, 0, 0, 1)), ProjMap.identity())]
    frontier = list(pairs)
    while frontier:
        new = []
        for (m, p) in frontier:
            for (gm, gp) in gens:
                cm = gm.compose(m)
                cp = gp.compose(p)
                if all(cm != hm for hm, _ in pairs):
                    pairs.append((cm, cp))
                    new.append((cm, cp))
                    if len(pairs) > 12:
                        raise ConvergenceFailure("tetrahedral closure exceeded 12")
        frontier = new
    if len(pairs) != 12:
        raise ConvergenceFailure("tetrahedral group closure failed")
    return pairs


def tetrahedral_group() -> list[MobiusMap]:
    """The 12 fractional-linear maps permuting {1, omega, conj(omega), inf};
    two parameters give projectively equivalent members exactly when one is
    carried to the other by this group.
    """
    return [m for m, _ in _tetrahedral_pairs()]


def hesse_orbit(k) -> list:
    """The 12 images of k under the tetrahedral group, with multiplicity."""
    return [m.apply(k) for m in tetrahedral_group()]


# ---------------------------------------------------------------------------
# parameter recovery from a J value
# ---------------------------------------------------------------------------


def _j_quartic_roots(j0: complex):
    """Roots u of u(u+8)^3 = 64 J0 (u-1)^3, i.e. candidates for k^3."""
    coeffs = [
        1.0,
        24.0 - 64.0 * j0,
        192.0 + 192.0 * j0,
        512.0 - 192.0 * j0,
        64.0 * j0,
    ]
    roots = np.roots(np.array(coeffs, dtype=complex))

    def q(u):
        return u * (u + 8) ** 3 - 64 * j0 * (u - 1) ** 3

    def dq(u):
        return (u + 8) ** 3 + 3 * u * (u + 8) ** 2 - 192 * j0 * (u - 1) ** 2

    out = []
    for r in roots:
        u = complex(r)
        for _ in range(2):
            d = dq(u)
            if abs(d) < 1e-8:
                break
            u = u - q(u) / d
        out.append(u)
    return out


def parameters_for_j(j0) -> list[complex]:
    """All 12 solutions k of J(k) = j0, with multiplicity."""
    j0 = complex(j0)
    ks = []
    for u in _j_quartic_roots(j0):
        base = u ** (1.0 / 3.0) if u != 0 else 0.0 + 0.0j
        for mult in (1, _OMEGA, _OMEGA.conjugate()):
            k = base * mult
            # one polishing step on J itself where the derivative allows
            for _ in range(2):
                den = k ** 3 - 1
                if abs(den) < 1e-9:
                    break
                f = (k * (k ** 3 + 8) / (4 * den)) ** 3 - j0
                h = 1e-7 * max(1.0, abs(k))
                df = (
                    ((k + h) * ((k + h) ** 3 + 8) / (4 * ((k + h) ** 3 - 1))) ** 3
                    - ((k - h) * ((k - h) ** 3 + 8) / (4 * ((k - h) ** 3 - 1))) ** 3
                ) / (2 * h)
                if abs(df) < 1e-6:
                    break
                k = k - f / df
            ks.append(k)
    return ks


def real_parameters_for_j(j0: float) -> list[float]:
    """The real k != 1 with J(k) = j0, ascending.  Closed forms are used at
    the two anchor values J=0 and J=1 where the generic solver loses
    accuracy to root multiplicity."""
    if abs(j0) < 1e-13:
        return [-2.0, 0.0]
    if abs(j0 - 1.0) < 1e-13:
        return [1.0 - math.sqrt(3.0), 1.0 + math.sqrt(3.0)]
    out = []
    for k in parameters_for_j(j0):
        if abs(k.imag) > 1e-7 * max(1.0, abs(k)):
            continue
        kr = k.real
        if abs(kr - 1.0) < 1e-9:
            continue
        if all(abs(kr - o) > 1e-7 * max(1.0, abs(kr)) for o in out):
            out.append(kr)
    out.sort()
    return out


# ---------------------------------------------------------------------------
# reduction of a smooth cubic into the pencil
# ---------------------------------------------------------------------------


def _incidence_third(points: list[ProjPoint]) -> dict:
    """For nine points in triple-line position: (i, j) -> the third index
    collinear with i and j."""
    n = len(points)
    third = {}
    for i in range(n):
        for j in range(i + 1, n):
            line = line_through(points[i], points[j]).normalized()
            hits = []
            for l in range(n):
                if l in (i, j):
                    continue
                p = points[l].normalized()
                u = sum(complex(a) * complex(b) for a, b in zip(line.coeffs, p.coords))
                if abs(u) < 1e-6:
                    hits.append(l)
            if len(hits) != 1:
                raise ConvergenceFailure(
                    "flex incidence structure is not a triple system"
                )
            third[(i, j)] = third[(j, i)] = hits[0]
    return third


def _flex_group_add(third: dict, o: int):
    """The group law indexed on 0..8 with identity o, from incidence only.

    p + q is (p*q)*o where * takes the third collinear point.  All nine
    points are 3-torsion for a flex base, so the tangent case gives
    p*p = -2p = p: the chord degenerates to the point itself.
    """

    def add(i, j):
        if i == o:
            return j
        if j == o:
            return i
        t = i if i == j else third[(i, j)]
        if t == o:
            return o
        return third[(o, t)]

    def neg(i):
        return o if i == o else third[(o, i)]

    return add, neg


def _generator_frame(third: dict, o: int):
    """Deterministic generating frame (o, u, v, u+v) of the nine points."""
    add, _neg = _flex_group_add(third, o)
    u = next(i for i in range(9) if i != o)
    span_u = {o, u, add(u, u)}
    v = next(i for i in range(9) if i not in span_u)
    return u, v, add(u, v)


def _pencil_parameter(form: CubicForm):
    """(k, residual) reading a normalized form as a member of the pencil."""
    cs = [complex(c) for c in form.normalized().coeffs]
    top = max(abs(c) for c in cs)
    cube = (cs[0] + cs[6] + cs[9]) / 3.0
    dev = max(
        abs(cs[1]), abs(cs[2]), abs(cs[3]), abs(cs[5]), abs(cs[7]), abs(cs[8]),
        abs(cs[0] - cube), abs(cs[6] - cube), abs(cs[9] - cube),
    )
    if abs(cube) <= 1e-12 * top:
        return math.inf, dev / top
    k = -cs[4] / (3.0 * cube)
    return k, dev / top


def to_hesse(form: CubicForm, canonical: bool = False):
    """Parameter k and invertible A with transform(form, A) = hesse_form(k)
    up to scale.

    The nine flexes carry a group structure read off from their incidence
    lines alone; a generating frame of four flexes is matched to a frame of
    the nine shared base points of the pencil, and the resulting projective
    map carries the curve into the pencil.  Both symplectic orientations of
    the frame matching are tried; exactly one extends to the full flex set.

    With canonical=True, k is moved to its tetrahedral-orbit representative
    with smallest (|k|, arg k) and A is adjusted to match.
    """
    flexes = find_flexes(form)
    fl = [p.normalized() for p in flexes]
    third = _incidence_third(fl)
    o = 0
    u, v, w = _generator_frame(third, o)
    src = (fl[o], fl[u], fl[v], fl[w])

    exc = sorted(
        (ProjPoint(*(complex(c) for c in e.coords)).normalized() for e in exceptional_points()),
        key=lambda p: tuple(
            (round(c.real, 9) + 0.0, round(c.imag, 9) + 0.0) for c in p.to_complex()
        ),
    )
    ethird = _incidence_third(exc)
    eo = 0
    eu, ev, ew = _generator_frame(ethird, eo)

    candidates = [
        (exc[eo], exc[eu], exc[ev], exc[ew]),
        (exc[eo], exc[ev], exc[eu], exc[ew]),
    ]
    best = None
    for dst in candidates:
        a = map_four_points(list(src), list(dst))
        k, dev = _pencil_parameter(transform(form, a))
        if best is None or dev < best[2]:
            best = (k, a, dev)
    k, a, dev = best
    if dev > 1e-8:
        raise ConvergenceFailure(
            f"reduction into the pencil left residual {dev:.2e}"
        )
    if isinstance(k, complex) and abs(k.imag) <= 1e-10 * (1.0 + abs(k)):
        k = k.real
    if canonical:
        pairs = _tetrahedral_pairs()
        scored = []
        for idx, (m, p) in enumerate(pairs):
            kk = m.apply(k)
            if _is_infinite(kk):
                continue
            kc = complex(kk)
            scored.append(((round(abs(kc), 10), round(cmath.phase(kc), 10), idx), kk, p))
        scored.sort(key=lambda t: t[0])
        _, k, p = scored[0]
        a = p.compose(a)
        if isinstance(k, complex) and abs(k.imag) <= 1e-10 * (1.0 + abs(k)):
            k = k.real
    return k, a
