"""Straight-line spatial embeddings with exact integer coordinates.

These give a concrete family of spatial embeddings for randomized
invariance checks: sample coordinates, project to a diagram, and compute
linking numbers, all in exact arithmetic.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .diagrams import Diagram, DegenerateDiagram, edge_id
from .geometry import collinear3, cross2, segments_intersect_3d, sub
from .graphs import CyclePair, Graph, LinksetError

COORD_RANGE = 10 ** 6
MAX_RESAMPLES = 64


class NonGenericDirection(LinksetError):
    pass


@dataclass(frozen=True)
class LinearEmbedding:
    """One exact integer point per vertex; edges are straight segments."""

    graph: Graph
    coordinates: dict

    def point(self, v):
        return self.coordinates[v]

    def check_general_position(self) -> None:
        import itertools
        pts = self.coordinates
        verts = sorted(self.graph.vertices)
        seen = set()
        for v in verts:
            if pts[v] in seen:
                raise DegenerateDiagram(f"duplicate coordinates at vertex {v}")
            seen.add(pts[v])
        for a, b, c in itertools.combinations(verts, 3):
            if collinear3(pts[a], pts[b], pts[c]):
                raise DegenerateDiagram(f"vertices {a},{b},{c} are collinear")
        edges = self.graph.sorted_edges()
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                if set(e) & set(f):
                    continue
                if segments_intersect_3d(pts[e[0]], pts[e[1]], pts[f[0]], pts[f[1]]):
                    raise DegenerateDiagram(
                        f"segments {e} and {f} intersect in space")

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(),
                "coordinates": {str(v): list(p)
                                for v, p in sorted(self.coordinates.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "LinearEmbedding":
        return cls(Graph.from_json(data["graph"]),
                   {int(v): tuple(p) for v, p in data["coordinates"].items()})


def _derived_seed(master: int, salt) -> int:
    digest = hashlib.sha256(f"linkset:{master}:{salt}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_linear_embedding(g: Graph, seed: int) -> LinearEmbedding:
    """Deterministic integer-coordinate embedding in general position."""
    for retry in range(MAX_RESAMPLES):
        rng = random.Random(_derived_seed(seed, f"coords:{retry}"))
        coords = {v: (rng.randint(-COORD_RANGE, COORD_RANGE),
                      rng.randint(-COORD_RANGE, COORD_RANGE),
                      rng.randint(-COORD_RANGE, COORD_RANGE))
                  for v in sorted(g.vertices)}
        emb = LinearEmbedding(g, coords)
        try:
            emb.check_general_position()
        except DegenerateDiagram:
            continue
        return emb
    raise LinksetError(f"no general-position embedding after {MAX_RESAMPLES} tries")


def direction_sequence():
    """Deterministic projection directions to try in order."""
    yield (0, 0, 1)
    k = 1
    while True:
        yield (1, k, k * k + 1)
        yield (k, 1, k * k + 2)
        k += 1


def _projection_basis(direction):
    dx, dy, dz = direction
    if (dx, dy, dz) == (0, 0, 0):
        raise ValueError("zero projection direction")
    if dx == 0 and dy == 0:
        u = (1, 0, 0)
        v = (0, 1, 0) if dz > 0 else (0, -1, 0)
    else:
        u = (-dy, dx, 0)
        # v = direction x u, so (u, v, direction) is right-handed
        v = (-dx * dz, -dy * dz, dx * dx + dy * dy)
    return u, v


def project_to_diagram(emb: LinearEmbedding, direction) -> Diagram:
    """Orthogonal projection along `direction`, heights deciding over/under.

    Raises NonGenericDirection when the projected drawing violates
    genericity; callers walk `direction_sequence` until one works.
    """
    u, v = _projection_basis(direction)

    def proj(p):
        return (p[0] * u[0] + p[1] * u[1] + p[2] * u[2],
                p[0] * v[0] + p[1] * v[1] + p[2] * v[2])

    placement = {w: proj(p) for w, p in emb.coordinates.items()}
    d = Diagram(emb.graph, placement)
    try:
        crossings = d.crossings()
    except DegenerateDiagram as err:
        raise NonGenericDirection(str(err)) from err

    def height(side):
        assert side.segment == 0  # straight projected edges
        p0 = emb.coordinates[side.edge[0]]
        p1 = emb.coordinates[side.edge[1]]
        t = side.param
        hx = Fraction(p0[0]) + t * (p1[0] - p0[0])
        hy = Fraction(p0[1]) + t * (p1[1] - p0[1])
        hz = Fraction(p0[2]) + t * (p1[2] - p0[2])
        return hx * direction[0] + hy * direction[1] + hz * direction[2]

    over = {}
    for c in crossings:
        ha, hb = height(c.a), height(c.b)
        if ha == hb:
            raise NonGenericDirection(f"equal heights at {c.key}")
        over[c.key] = edge_id(c.a.edge if ha > hb else c.b.edge)
    d = d.with_over(over)
    d.validate()
    return d


def first_generic_projection(emb: LinearEmbedding, skip: int = 0) -> Diagram:
    """The first direction in the fixed sequence that projects generically."""
    failures = 0
    skipped = 0
    for direction in direction_sequence():
        if skipped < skip:
            skipped += 1
            continue
        try:
            return project_to_diagram(emb, direction)
        except NonGenericDirection:
            failures += 1
            if failures > 64:
                break
    raise LinksetError("no generic projection direction found")


def linking_number_linear(emb: LinearEmbedding, pair: CyclePair) -> int:
    from .diagrams import linking_number
    return linking_number(first_generic_projection(emb), pair)


# ---------------------------------------------------------------------------
# fast path used by the Monte-Carlo driver (pure integer arithmetic)


def linking_number_value(emb: LinearEmbedding, pair: CyclePair) -> int:
    """Fast exact linking number with a fallback for degenerate z-projections."""
    try:
        return linking_number_fast(emb, pair)
    except NonGenericDirection:
        return linking_number_linear(emb, pair)


def linking_number_fast(emb: LinearEmbedding, pair: CyclePair) -> int:
    """Linking number from the z-projection without building a Diagram.

    Exact integer arithmetic throughout; raises NonGenericDirection when
    the z-direction is degenerate for this pair so the caller can fall
    back to the full pipeline.
    """
    pts = emb.coordinates
    total = 0
    for (a1, b1) in pair.first.oriented_edges():
        p, q = pts[a1], pts[b1]
        for (a2, b2) in pair.second.oriented_edges():
            r, s = pts[a2], pts[b2]
            d1 = cross2(p, q, r)
            d2 = cross2(p, q, s)
            d3 = cross2(r, s, p)
            d4 = cross2(r, s, q)
            if d1 == 0 or d2 == 0 or d3 == 0 or d4 == 0:
                raise NonGenericDirection("projected endpoint contact")
            if (d1 > 0) == (d2 > 0) or (d3 > 0) == (d4 > 0):
                continue
            # heights at the intersection: compare z along both segments
            t_num, t_den = d3, d3 - d4  # parameter along first segment
            if t_den < 0:
                t_num, t_den = -t_num, -t_den
            u_num, u_den = d1, d1 - d2  # parameter along second segment
            if u_den < 0:
                u_num, u_den = -u_num, -u_den
            z1 = (p[2] * (t_den - t_num) + q[2] * t_num) * u_den
            z2 = (r[2] * (u_den - u_num) + s[2] * u_num) * t_den
            if z1 == z2:
                raise NonGenericDirection("equal heights at crossing")
            over_first = z1 > z2
            dir1 = (q[0] - p[0], q[1] - p[1])
            dir2 = (s[0] - r[0], s[1] - r[1])
            o, u = (dir1, dir2) if over_first else (dir2, dir1)
            cr = o[0] * u[1] - o[1] * u[0]
            total += 1 if cr > 0 else -1
    if total % 2 != 0:
        raise LinksetError("odd crossing sign sum in fast linking number")
    return total // 2
