"""
Planar geometry helpers for the locomotion simulator.

Walls are held as an (m, 4) array of segments [x0, y0, x1, y1]. The queries
are vectorized over walls; the number of walls is small (tens) and they are
evaluated once per step.
"""

import math

import numpy as np


def unit(v):
    n = math.hypot(v[0], v[1])
    return np.array([v[0] / n, v[1] / n])


def left_normal(h):
    return np.array([-h[1], h[0]])


def closest_points(p, walls):
    """Closest point on each wall to ``p`` and its distance.

    Returns (points (m, 2), distances (m,), parameters t in [0, 1] (m,)).
    """
    a = walls[:, :2]
    d = walls[:, 2:] - a
    dd = np.einsum("ij,ij->i", d, d)
    t = np.clip(np.einsum("ij,ij->i", p - a, d) / dd, 0.0, 1.0)
    q = a + t[:, None] * d
    dist = np.hypot(q[:, 0] - p[0], q[:, 1] - p[1])
    return q, dist, t


def segments_cross(s, u, eps=1e-12):
    """True if two segments intersect at a point interior to both."""
    p, r = np.asarray(s[:2], float), np.asarray(s[2:], float) - np.asarray(s[:2], float)
    q, w = np.asarray(u[:2], float), np.asarray(u[2:], float) - np.asarray(u[:2], float)
    denom = r[0] * w[1] - r[1] * w[0]
    qp = q - p
    if abs(denom) < eps:
        # parallel: overlapping collinear segments count as crossing
        if abs(qp[0] * r[1] - qp[1] * r[0]) > eps:
            return False
        rr = r @ r
        t0 = qp @ r / rr
        t1 = (qp + w) @ r / rr
        lo, hi = min(t0, t1), max(t0, t1)
        return hi > eps and lo < 1 - eps and (min(hi, 1) - max(lo, 0)) > eps
    t = (qp[0] * w[1] - qp[1] * w[0]) / denom
    v = (qp[0] * r[1] - qp[1] * r[0]) / denom
    return eps < t < 1 - eps and eps < v < 1 - eps


def point_in_convex_polygon(p, vertices):
    """Inclusive test; ``vertices`` may be in either winding."""
    v = np.asarray(vertices, float)
    e = np.roll(v, -1, axis=0) - v
    rel = p - v
    cross = e[:, 0] * rel[:, 1] - e[:, 1] * rel[:, 0]
    return bool(np.all(cross >= -1e-12) or np.all(cross <= 1e-12))


def polyline_length(points):
    pts = np.asarray(points, float)
    if len(pts) < 2:
        return 0.0
    return float(np.sum(np.hypot(*np.diff(pts, axis=0).T)))


def cap_onset(walls, p, h, a, b):
    """Travel distance along ``h`` at which each wall first touches the tip cap.

    The cap is the part of the round membrane tip (radius ``a`` about the
    centerline tip ``p``) lying ahead of the rigid core, i.e. within lateral
    offset ``b`` of the centerline. A wall point at forward offset f and
    lateral offset l touches the advancing cap after a travel of
    f - sqrt(a^2 - l^2). That function is convex along a segment, so its
    minimum over the part of each wall inside the core strip and ahead of
    ``p`` is found in closed form.

    Returns (onset (m,), touch points (m, 2)); onset is +inf for walls that
    never enter the strip ahead, and may be negative for walls already
    inside the cap.
    """
    n = left_normal(h)
    rel0 = walls[:, :2] - p
    rel1 = walls[:, 2:] - p
    f0, f1 = rel0 @ h, rel1 @ h
    l0, l1 = rel0 @ n, rel1 @ n
    df, dl = f1 - f0, l1 - l0

    lo = np.zeros(len(walls))
    hi = np.ones(len(walls))
    # Liang-Barsky clip against l <= b, -l <= b, -f <= 0
    with np.errstate(divide="ignore", invalid="ignore"):
        for num, den in ((b - l0, dl), (b + l0, -dl), (f0, -df)):
            # constraint: den * t <= num
            par = den == 0
            hi = np.where(par & (num < 0), -np.inf, hi)
            tb = num / den
            pos = den > 0
            neg = den < 0
            hi = np.where(pos, np.minimum(hi, tb), hi)
            lo = np.where(neg, np.maximum(lo, tb), lo)
        valid = lo <= hi

        # stationary point of g(t) = f(t) - sqrt(a^2 - l(t)^2)
        k = -df / dl
        lstar = k * a / np.sqrt(1.0 + k * k)
        tstar = (lstar - l0) / dl
        tstar = np.where(dl == 0, np.where(df > 0, lo, hi), tstar)
        tstar = np.where(np.isfinite(tstar), tstar, lo)
    tstar = np.clip(tstar, lo, np.maximum(lo, hi))

    fl = f0 + df * tstar
    ll = np.clip(l0 + dl * tstar, -b, b)
    onset = np.where(valid, fl - np.sqrt(a * a - ll * ll), np.inf)
    touch = walls[:, :2] + tstar[:, None] * (walls[:, 2:] - walls[:, :2])
    return onset, touch
