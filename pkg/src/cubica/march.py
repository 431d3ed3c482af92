"""Implicit-curve extraction on a rectangular grid.

Plain marching squares with linear edge interpolation, a centre-average
rule for the two saddle cases, and NaN masking so callers can cut the
domain (e.g. to a disk) by poisoning values outside it.  Segments are
stitched into polylines by exact endpoint matching on rounded keys; the
grid guarantees shared endpoints come out bit-identical, so no fuzzy
matching is needed.
"""
from __future__ import annotations

import math

import numpy as np


def _interp(x0, y0, v0, x1, y1, v1):
    t = v0 / (v0 - v1)
    return (x0 + t * (x1 - x0), y0 + t * (y1 - y0))


def marching_segments(xs, ys, vals):
    """Zero-crossing segments of a scalar field sampled at vals[j, i] =
    f(xs[i], ys[j]).  Cells touching a NaN are skipped."""
    # a sample sitting exactly on the contour would make zero-length
    # segments and split the stitched curve; push it off by a hair
    vals = np.where(vals == 0.0, 1e-300, vals)
    segs = []
    nx = len(xs)
    ny = len(ys)
    for j in range(ny - 1):
        for i in range(nx - 1):
            v = (
                vals[j, i],
                vals[j, i + 1],
                vals[j + 1, i + 1],
                vals[j + 1, i],
            )
            if any(math.isnan(t) for t in v):
                continue
            code = sum(1 << n for n, t in enumerate(v) if t > 0.0)
            if code in (0, 15):
                continue
            x0, x1 = xs[i], xs[i + 1]
            y0, y1 = ys[j], ys[j + 1]
            corners = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
            # edge n joins corner n and corner (n+1) % 4
            pts = {}
            for n in range(4):
                a, b = n, (n + 1) % 4
                if (v[a] > 0.0) != (v[b] > 0.0):
                    pts[n] = _interp(*corners[a], v[a], *corners[b], v[b])

            def emit(ea, eb):
                # a crossing through a sample point collapses the segment
                if _key(pts[ea]) != _key(pts[eb]):
                    segs.append((pts[ea], pts[eb]))

            if len(pts) == 2:
                ks = sorted(pts)
                emit(ks[0], ks[1])
            elif len(pts) == 4:
                center = (v[0] + v[1] + v[2] + v[3]) / 4.0
                same_as_corner0 = (center > 0.0) == (v[0] > 0.0)
                if same_as_corner0:
                    emit(3, 0)
                    emit(1, 2)
                else:
                    emit(0, 1)
                    emit(2, 3)
    return segs


def _key(p):
    return (round(p[0], 9), round(p[1], 9))


def stitch(segs):
    """Join segments sharing endpoints into polylines.

    Returns a list of point lists; a closed loop repeats its first point
    at the end.  Deterministic: seeded in input order, extended forward
    then backward.
    """
    from collections import defaultdict

    ends = defaultdict(list)
    for idx, (a, b) in enumerate(segs):
        ends[_key(a)].append(idx)
        ends[_key(b)].append(idx)
    used = [False] * len(segs)
    polylines = []
    for start in range(len(segs)):
        if used[start]:
            continue
        used[start] = True
        a, b = segs[start]
        chain = [a, b]
        # grow at the tail, then at the head
        for head in (False, True):
            while True:
                tip = chain[0] if head else chain[-1]
                nxt = None
                for idx in ends[_key(tip)]:
                    if not used[idx]:
                        nxt = idx
                        break
                if nxt is None:
                    break
                used[nxt] = True
                p, q = segs[nxt]
                far = q if _key(p) == _key(tip) else p
                if head:
                    chain.insert(0, far)
                else:
                    chain.append(far)
                if _key(chain[0]) == _key(chain[-1]) and len(chain) > 2:
                    break
            if _key(chain[0]) == _key(chain[-1]) and len(chain) > 2:
                break
        polylines.append(chain)
    return polylines


def implicit_curve(fn, window, resolution):
    """Polylines of fn(x, y) = 0 over window = (xmin, xmax, ymin, ymax).

    fn receives numpy coordinate arrays X, Y of shape (resolution,
    resolution) and returns the field values; NaN masks points out.
    """
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, resolution)
    ys = np.linspace(ymin, ymax, resolution)
    gx, gy = np.meshgrid(xs, ys)
    vals = np.asarray(fn(gx, gy), dtype=float)
    return stitch(marching_segments(list(xs), list(ys), vals))


def is_closed(polyline) -> bool:
    return len(polyline) > 2 and _key(polyline[0]) == _key(polyline[-1])
