"""Exact rational geometry kernel for diagrams and linear embeddings.

All predicates work on int or Fraction coordinates and never round.
Points are plain tuples: (x, y) in the plane, (x, y, z) in space.
"""

from __future__ import annotations

from fractions import Fraction

Point2 = tuple  # (x, y)
Point3 = tuple  # (x, y, z)


def cross2(o, a, b):
    """Twice the signed area of triangle o-a-b."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def direction_cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def collinear2(a, b, c) -> bool:
    return cross2(a, b, c) == 0


def on_segment(p, a, b) -> bool:
    """p lies on the closed segment a-b (p assumed collinear with a, b)."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segment_intersection(a, b, c, d):
    """Classify the intersection of closed segments a-b and c-d.

    Returns (kind, data) with kind one of:
      "none"       no common point
      "proper"     single transverse interior-interior point; data = (point, s, t)
                   where s, t are the rational parameters along a-b and c-d
      "endpoint"   single common point involving at least one endpoint; data = point
      "overlap"    collinear segments sharing more than one point
    """
    d1 = cross2(c, d, a)
    d2 = cross2(c, d, b)
    d3 = cross2(a, b, c)
    d4 = cross2(a, b, d)

    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        s = Fraction(d1, d1 - d2)
        p = (a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1]))
        t = _param_on_segment(p, c, d)
        return "proper", (p, s, t)

    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        # collinear: check 1-d overlap
        pts = _collinear_overlap(a, b, c, d)
        if pts is None:
            return "none", None
        if len(pts) == 1:
            return "endpoint", pts[0]
        return "overlap", pts

    # non-collinear but some determinant vanishes: an endpoint touches the
    # other segment (possibly in its interior); report it if it really lies on.
    for p, (u, v) in ((a, (c, d)), (b, (c, d)), (c, (a, b)), (d, (a, b))):
        if collinear2(u, v, p) and on_segment(p, u, v):
            return "endpoint", p
    return "none", None


def _param_on_segment(p, a, b):
    if b[0] != a[0]:
        return Fraction(p[0] - a[0], b[0] - a[0])
    return Fraction(p[1] - a[1], b[1] - a[1])


def _collinear_overlap(a, b, c, d):
    """Common points of two collinear segments; None, [pt], or [pt, pt]."""
    if a == b and c == d:
        return [a] if a == c else None
    # order along the dominant axis
    axis = 0 if max(a[0], b[0], c[0], d[0]) != min(a[0], b[0], c[0], d[0]) else 1
    lo1, hi1 = sorted([a, b], key=lambda p: p[axis])
    lo2, hi2 = sorted([c, d], key=lambda p: p[axis])
    lo = max(lo1, lo2, key=lambda p: p[axis])
    hi = min(hi1, hi2, key=lambda p: p[axis])
    if lo[axis] > hi[axis]:
        return None
    if lo[axis] == hi[axis]:
        return [lo]
    return [lo, hi]


def point_in_polygon(p, polygon) -> bool:
    """Strict interior test by exact ray casting; polygon is a point list.

    Points on the boundary return False.
    """
    n = len(polygon)
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if collinear2(a, b, p) and on_segment(p, a, b):
            return False
    inside = False
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x-coordinate of edge at height p[1]
            t = Fraction(p[1] - a[1], b[1] - a[1])
            x = a[0] + t * (b[0] - a[0])
            if x > p[0]:
                inside = not inside
    return inside


def polygon_signed_area2(polygon):
    """Twice the signed area (positive for counterclockwise)."""
    s = 0
    n = len(polygon)
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        s += a[0] * b[1] - b[0] * a[1]
    return s


def direction_in_interior_cone(d, incoming, outgoing) -> bool:
    """Whether direction d points into the region left of a CCW corner.

    ``incoming`` is the direction arriving at the corner, ``outgoing`` the
    direction leaving it, both along a counterclockwise boundary.
    """
    u = (-incoming[0], -incoming[1])  # back along the incoming edge
    w = outgoing
    cw = direction_cross(w, u)
    if cw > 0:  # convex corner: strictly between w and u counterclockwise
        return direction_cross(w, d) > 0 and direction_cross(d, u) > 0
    if cw < 0:  # reflex corner: outside the complementary cone
        return not (direction_cross(u, d) >= 0 and direction_cross(d, w) >= 0)
    # straight corner
    return direction_cross(w, d) > 0


def cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot3(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def collinear3(a, b, c) -> bool:
    return cross3(sub(b, a), sub(c, a)) == (0, 0, 0)


def segments_intersect_3d(a, b, c, d) -> bool:
    """Whether closed 3-space segments a-b and c-d share a point."""
    u = sub(b, a)
    v = sub(d, c)
    w = sub(c, a)
    n = cross3(u, v)
    if n == (0, 0, 0):
        # parallel; intersect only if collinear with overlapping ranges
        if cross3(u, w) != (0, 0, 0):
            return False
        # project onto dominant axis of u (or of w if u is degenerate)
        ref = u if u != (0, 0, 0) else sub(d, c)
        if ref == (0, 0, 0):
            return a == c
        axis = max(range(3), key=lambda i: abs(ref[i]))
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        return max(lo1, lo2) <= min(hi1, hi2)
    if dot3(w, n) != 0:
        return False  # skew lines
    # coplanar: solve a + s*u = c + t*v exactly
    den = dot3(n, n)
    s_num = dot3(cross3(w, v), n)
    t_num = dot3(cross3(w, u), n)
    return 0 <= Fraction(s_num, den) <= 1 and 0 <= Fraction(t_num, den) <= 1
