"""Points, lines and invertible maps of the projective plane.

Coordinates are scalars in the sense of cubica.scalars: exact (int,
Fraction) or floating (float, complex).  Equality is always projective,
i.e. up to a global nonzero factor, and works through a normal form:
exact triples are scaled to coprime integers with the first nonzero entry
positive, floating triples are scaled so the largest-magnitude entry is 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CoincidentPoints, InvalidInput, SingularMap
from .scalars import Scalar, all_exact, is_exact, scalar_from_json, scalar_to_json, scalars_close

_DET_TOL = 1e-12


def _normalize_triple(coords):
    """Projective normal form of a coordinate triple."""
    if all(c == 0 for c in coords):
        raise InvalidInput("projective coordinates cannot all vanish")
    if all_exact(coords):
        fracs = [Fraction(c) for c in coords]
        den = math.lcm(*(f.denominator for f in fracs))
        ints = [int(f * den) for f in fracs]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)
    cs = [complex(c) for c in coords]
    mags = [abs(c) for c in cs]
    pivot = mags.index(max(mags))
    div = cs[pivot]
    out = []
    for i, c in enumerate(cs):
        if i == pivot:
            out.append(1.0 + 0.0j)
        else:
            out.append(c / div)
    # collapse to real floats when the imaginary parts are exactly zero
    if all(v.imag == 0 for v in out):
        return tuple(v.real for v in out)
    return tuple(out)


def _triples_equal(a, b, tol=None) -> bool:
    if all_exact(a) and all_exact(b):
        return _normalize_triple(a) == _normalize_triple(b)
    # proportionality via cross products; comparing normalized forms
    # elementwise would couple the answer to the pivot choice
    return _flat_proportional(a, b, tol if tol is not None else 1e-9)


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point (x : y : z) of the projective plane."""

    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        if self.x == 0 and self.y == 0 and self.z == 0:
            raise InvalidInput("(0:0:0) is not a projective point")

    @property
    def coords(self):
        return (self.x, self.y, self.z)

    @property
    def is_exact(self) -> bool:
        return all_exact(self.coords)

    def normalized(self) -> "ProjPoint":
        return ProjPoint(*_normalize_triple(self.coords))

    def to_complex(self) -> tuple[complex, complex, complex]:
        return tuple(complex(c) for c in self.coords)

    def is_real(self, tol: float = 1e-9) -> bool:
        n = _normalize_triple(self.coords)
        return all(abs(complex(c).imag) <= tol for c in n)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return _triples_equal(self.coords, other.coords)

    __hash__ = None

    def __repr__(self):
        return f"ProjPoint({self.x!r}, {self.y!r}, {self.z!r})"

    def to_json(self):
        return [scalar_to_json(c) for c in self.coords]

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != 3:
            raise InvalidInput(f"a point needs three coordinates: {obj!r}")
        return cls(*(scalar_from_json(c) for c in obj))


@dataclass(frozen=True, eq=False)
class ProjLine:
    """The line u*x + v*y + w*z = 0."""

    u: Scalar
    v: Scalar
    w: Scalar

    def __post_init__(self):
        if self.u == 0 and self.v == 0 and self.w == 0:
            raise InvalidInput("a line needs a nonzero coefficient triple")

    @property
    def coeffs(self):
        return (self.u, self.v, self.w)

    def normalized(self) -> "ProjLine":
        return ProjLine(*_normalize_triple(self.coeffs))

    def contains(self, p: ProjPoint, tol: float | None = None) -> bool:
        val = sum(c * x for c, x in zip(self.coeffs, p.coords))
        if all_exact(self.coeffs) and p.is_exact:
            return val == 0
        nl = _normalize_triple(self.coeffs)
        np_ = _normalize_triple(p.coords)
        v = sum(complex(c) * complex(x) for c, x in zip(nl, np_))
        return abs(v) <= (tol if tol is not None else 1e-9) * 3

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return _triples_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"ProjLine({self.u!r}, {self.v!r}, {self.w!r})"

    def to_json(self):
        return [scalar_to_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != 3:
            raise InvalidInput(f"a line needs three coefficients: {obj!r}")
        return cls(*(scalar_from_json(c) for c in obj))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The unique line through two distinct points."""
    a = _normalize_triple(p.coords)
    b = _normalize_triple(q.coords)
    c = _cross(a, b)
    if all_exact(c):
        if all(v == 0 for v in c):
            raise CoincidentPoints(f"{p!r} and {q!r} coincide")
        return ProjLine(*c)
    mag = max(abs(complex(v)) for v in c)
    if mag <= 1e-12:
        raise CoincidentPoints(f"{p!r} and {q!r} coincide")
    return ProjLine(*c)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Intersection point of two distinct lines."""
    c = _cross(l1.coeffs, l2.coeffs)
    if all_exact(c):
        if all(v == 0 for v in c):
            raise CoincidentPoints("lines coincide")
        return ProjPoint(*c)
    if max(abs(complex(v)) for v in c) <= 1e-12:
        raise CoincidentPoints("lines coincide")
    return ProjPoint(*c)


def proj_distance(p: ProjPoint, q: ProjPoint) -> float:
    """Scale-invariant distance: the sine of the Fubini-Study angle.

    Computed as the norm of b orthogonalized against a, which stays
    accurate down to distances near machine epsilon; 1 - cos^2 would
    bottom out around 1e-8.
    """
    a = p.to_complex()
    b = q.to_complex()
    na = math.sqrt(sum(abs(c) ** 2 for c in a))
    nb = math.sqrt(sum(abs(c) ** 2 for c in b))
    a = tuple(c / na for c in a)
    b = tuple(c / nb for c in b)
    inner = sum(x * y.conjugate() for x, y in zip(b, a))
    ortho = tuple(x - inner * y for x, y in zip(b, a))
    return min(1.0, math.sqrt(sum(abs(c) ** 2 for c in ortho)))


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _adjugate(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


@dataclass(frozen=True, eq=False)
class ProjMap:
    """An invertible projective map, stored as a 3x3 matrix of scalars."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise InvalidInput("a projective map needs a 3x3 matrix")
        object.__setattr__(self, "rows", rows)
        d = _det3(rows)
        if all_exact(v for r in rows for v in r):
            if d == 0:
                raise SingularMap("determinant vanishes")
        else:
            # scale rows to unit max-norm before the determinant cutoff
            scaled = []
            for r in rows:
                m = max(abs(complex(v)) for v in r)
                if m == 0.0:
                    raise SingularMap("zero row")
                scaled.append(tuple(complex(v) / m for v in r))
            if abs(_det3(scaled)) <= _DET_TOL:
                raise SingularMap("determinant below cutoff")

    @classmethod
    def identity(cls) -> "ProjMap":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def from_columns(cls, c0, c1, c2) -> "ProjMap":
        cols = [tuple(c) for c in (c0, c1, c2)]
        return cls(tuple(tuple(cols[j][i] for j in range(3)) for i in range(3)))

    @classmethod
    def scaling(cls, sx, sy, sz) -> "ProjMap":
        return cls(((sx, 0, 0), (0, sy, 0), (0, 0, sz)))

    @property
    def is_exact(self) -> bool:
        return all_exact(v for r in self.rows for v in r)

    def det(self):
        return _det3(self.rows)

    def inverse(self) -> "ProjMap":
        d = _det3(self.rows)
        adj = _adjugate(self.rows)
        if self.is_exact:
            dd = Fraction(d)
            return ProjMap(tuple(tuple(Fraction(v) / dd for v in r) for r in adj))
        return ProjMap(tuple(tuple(v / d for v in r) for r in adj))

    def compose(self, other: "ProjMap") -> "ProjMap":
        """self after other: (self.compose(other))(p) == self(other(p))."""
        a, b = self.rows, other.rows
        return ProjMap(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )

    def apply(self, p: ProjPoint) -> ProjPoint:
        v = p.coords
        img = tuple(sum(r[j] * v[j] for j in range(3)) for r in self.rows)
        return ProjPoint(*img).normalized()

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return self.apply(p)

    def line_image(self, line: ProjLine) -> ProjLine:
        """Image of a line: coefficients compose with the inverse map."""
        inv = self.inverse().rows
        c = line.coeffs
        out = tuple(sum(c[i] * inv[i][j] for i in range(3)) for j in range(3))
        return ProjLine(*out)

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        a = [v for r in self.rows for v in r]
        b = [v for r in other.rows for v in r]
        return _flat_proportional(a, b)

    __hash__ = None

    def __repr__(self):
        return f"ProjMap({self.rows!r})"

    def to_json(self):
        return [[scalar_to_json(v) for v in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != 3:
            raise InvalidInput("a map needs three rows")
        return cls(tuple(tuple(scalar_from_json(v) for v in r) for r in obj))


def _flat_proportional(a, b, tol=1e-9) -> bool:
    """Proportionality test for flat coefficient vectors of equal length."""
    if all_exact(a) and all_exact(b):
        pa = next((i for i, v in enumerate(a) if v != 0), None)
        pb = next((i for i, v in enumerate(b) if v != 0), None)
        if pa != pb:
            return False
        return all(a[pa] * y == b[pa] * x for x, y in zip(a, b))
    ca = [complex(v) for v in a]
    cb = [complex(v) for v in b]
    ma = max(abs(v) for v in ca)
    mb = max(abs(v) for v in cb)
    if ma == 0 or mb == 0:
        return ma == mb
    ca = [v / ma for v in ca]
    cb = [v / mb for v in cb]
    pivot = max(range(len(ca)), key=lambda i: abs(ca[i]))
    if abs(cb[pivot]) <= tol:
        return False
    phase = ca[pivot] / cb[pivot]
    return all(abs(x - phase * y) <= tol * 4 for x, y in zip(ca, cb))


def apply_map(a: ProjMap, p: ProjPoint) -> ProjPoint:
    """Matrix-vector action of a projective map on a point, renormalized."""
    return a.apply(p)


def _solve3(rows, rhs):
    d = _det3(rows)
    adj = _adjugate(rows)
    if all_exact([v for r in rows for v in r] + list(rhs)):
        dd = Fraction(d)
        return tuple(sum(adj[i][j] * rhs[j] for j in range(3)) / dd for i in range(3))
    return tuple(sum(adj[i][j] * rhs[j] for j in range(3)) / d for i in range(3))


def map_four_points(src, dst) -> ProjMap:
    """The projective map sending four source points to four target points.

    Both quadruples must be in general position (no three collinear).
    """
    if len(src) != 4 or len(dst) != 4:
        raise InvalidInput("exactly four source and four target points required")

    def basis(quad):
        p0, p1, p2, p3 = (q.coords for q in quad)
        try:
            cols = ProjMap.from_columns(p0, p1, p2)
        except SingularMap as exc:
            raise CoincidentPoints("quadruple is not in general position") from exc
        w = _solve3(cols.rows, p3)
        if any(
            (wi == 0 if all_exact(w) else abs(complex(wi)) <= 1e-12) for wi in w
        ):
            raise CoincidentPoints("quadruple is not in general position")
        return ProjMap.from_columns(
            tuple(w[0] * c for c in p0),
            tuple(w[1] * c for c in p1),
            tuple(w[2] * c for c in p2),
        )

    s = basis([p.normalized() for p in src])
    t = basis([p.normalized() for p in dst])
    return t.compose(s.inverse())
