"""Planar polyline diagrams with over/under crossing data.

A diagram is the computational stand-in for a spatial embedding: exact
rational vertex placements, polyline edge routes, and an explicit
over-edge choice at every crossing.  Everything downstream (linking
numbers, split certificates) is computed from this data with no rounding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .geometry import (cross2, direction_in_interior_cone, point_in_polygon,
                       polygon_signed_area2, segment_intersection)
from .graphs import Cycle, CyclePair, Graph, LinksetError, MinorMap, _norm_edge

Edge = tuple


class DegenerateDiagram(LinksetError):
    pass


def edge_id(e) -> str:
    return f"{e[0]}-{e[1]}"


def parse_edge_id(s: str) -> Edge:
    u, v = s.split("-")
    return _norm_edge(int(u), int(v))


def _frac_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class StrandSide:
    """One strand's local position at a crossing."""

    edge: Edge
    segment: int
    param: Fraction  # position within the segment, 0 at its start

    def sort_key(self):
        return (self.edge, self.segment, self.param)

    def token(self) -> str:
        return f"{edge_id(self.edge)}#{self.segment}@{_frac_str(self.param)}"


@dataclass(frozen=True)
class Crossing:
    """A transverse double point; the over/under choice lives on the Diagram."""

    a: StrandSide
    b: StrandSide
    point: tuple

    @property
    def key(self) -> str:
        return f"{self.a.token()}|{self.b.token()}"

    def edges(self) -> tuple[Edge, Edge]:
        return (self.a.edge, self.b.edge)


def _make_crossing(s1: StrandSide, s2: StrandSide, point) -> Crossing:
    a, b = sorted((s1, s2), key=StrandSide.sort_key)
    return Crossing(a, b, point)


class Diagram:
    """Host graph + placement + routes + over/under assignment."""

    def __init__(self, host: Graph, placement: dict, routes: dict | None = None,
                 over: dict | None = None):
        self.host = host
        self.placement = {v: (Fraction(p[0]), Fraction(p[1]))
                          for v, p in placement.items()}
        if set(self.placement) != host.vertices:
            raise ValueError("placement must cover exactly the host vertices")
        self.routes = {}
        routes = routes or {}
        for e in host.edges:
            if e in routes:
                pts = tuple((Fraction(p[0]), Fraction(p[1])) for p in routes[e])
            else:
                pts = (self.placement[e[0]], self.placement[e[1]])
            if pts[0] != self.placement[e[0]] or pts[-1] != self.placement[e[1]]:
                raise ValueError(f"route of {e} does not join its endpoints")
            if len(pts) < 2:
                raise ValueError(f"route of {e} too short")
            self.routes[e] = pts
        self.over = dict(over or {})
        self._crossings: list[Crossing] | None = None

    # -- geometry ----------------------------------------------------------

    def segments(self):
        for e in sorted(self.routes):
            pts = self.routes[e]
            for i in range(len(pts) - 1):
                yield e, i, pts[i], pts[i + 1]

    def _compute_crossings(self) -> list[Crossing]:
        by_pos: dict[tuple, int] = {}
        for v, p in self.placement.items():
            if p in by_pos:
                raise DegenerateDiagram(
                    f"vertices {by_pos[p]} and {v} share placement {p}")
            by_pos[p] = v
        segs = list(self.segments())
        boxes = [(min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]))
                 for _, _, a, b in segs]
        crossings = []
        for idx1 in range(len(segs)):
            e1, i1, a1, b1 = segs[idx1]
            x1lo, x1hi, y1lo, y1hi = boxes[idx1]
            for idx2 in range(idx1 + 1, len(segs)):
                e2, i2, a2, b2 = segs[idx2]
                x2lo, x2hi, y2lo, y2hi = boxes[idx2]
                if x1hi < x2lo or x2hi < x1lo or y1hi < y2lo or y2hi < y1lo:
                    continue
                kind, data = segment_intersection(a1, b1, a2, b2)
                if kind == "none":
                    continue
                if kind == "proper":
                    p, s, t = data
                    crossings.append(_make_crossing(
                        StrandSide(e1, i1, s), StrandSide(e2, i2, t), p))
                    continue
                if kind == "overlap":
                    raise DegenerateDiagram(
                        f"overlapping strands {edge_id(e1)}#{i1} and {edge_id(e2)}#{i2}")
                # endpoint contact: allowed only where strands must meet
                p = data
                if e1 == e2:
                    if abs(i1 - i2) == 1 and p == self.routes[e1][max(i1, i2)]:
                        continue
                    raise DegenerateDiagram(f"edge {edge_id(e1)} touches itself at {p}")
                shared = set(e1) & set(e2)
                if shared and p == self.placement[next(iter(shared))]:
                    continue
                raise DegenerateDiagram(
                    f"strands {edge_id(e1)} and {edge_id(e2)} touch at {p}")

        by_point: dict[tuple, int] = {}
        for c in crossings:
            by_point[c.point] = by_point.get(c.point, 0) + 1
        for p, count in by_point.items():
            if count > 1:
                raise DegenerateDiagram(f"three strands through {p}")

        for v, p in self.placement.items():
            for e, i, a, b in segs:
                if v in e:
                    continue
                if min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) \
                        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]) \
                        and cross2(a, b, p) == 0:
                    raise DegenerateDiagram(f"vertex {v} lies on strand {edge_id(e)}")
        return sorted(crossings, key=lambda c: (c.a.sort_key(), c.b.sort_key()))

    def crossings(self) -> list[Crossing]:
        if self._crossings is None:
            self._crossings = self._compute_crossings()
        return self._crossings

    def validate(self) -> list[Crossing]:
        """Check genericity and over/under completeness; return all crossings."""
        crossings = self.crossings()
        keys = {c.key for c in crossings}
        missing = keys - set(self.over)
        extra = set(self.over) - keys
        if missing:
            raise DegenerateDiagram(f"missing over/under entries: {sorted(missing)}")
        if extra:
            raise DegenerateDiagram(f"stale over/under entries: {sorted(extra)}")
        for c in crossings:
            if self.over[c.key] not in (edge_id(c.a.edge), edge_id(c.b.edge)):
                raise DegenerateDiagram(
                    f"over edge {self.over[c.key]} not incident to crossing {c.key}")
        return crossings

    def over_edge(self, c: Crossing) -> Edge:
        return parse_edge_id(self.over[c.key])

    def with_over(self, over: dict) -> "Diagram":
        d = Diagram.__new__(Diagram)
        d.host = self.host
        d.placement = self.placement
        d.routes = self.routes
        d.over = dict(over)
        d._crossings = self._crossings
        return d

    def default_over_from_heights(self, heights: dict) -> "Diagram":
        """Assign over/under from per-vertex heights interpolated along edges."""
        over = {}
        for c in self.crossings():
            za = self._height_at(c.a, heights)
            zb = self._height_at(c.b, heights)
            if za == zb:
                raise DegenerateDiagram(f"equal heights at crossing {c.key}")
            over[c.key] = edge_id(c.a.edge if za > zb else c.b.edge)
        return self.with_over(over)

    def _height_at(self, side: StrandSide, heights: dict):
        pts = self.routes[side.edge]
        n = len(pts) - 1
        z0 = Fraction(heights[side.edge[0]])
        z1 = Fraction(heights[side.edge[1]])
        return z0 + (z1 - z0) * Fraction(side.segment + side.param, n)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "graph": self.host.to_json(),
            "placement": {str(v): [_frac_str(p[0]), _frac_str(p[1])]
                          for v, p in sorted(self.placement.items())},
            "routes": {edge_id(e): [[_frac_str(x), _frac_str(y)] for x, y in pts]
                       for e, pts in sorted(self.routes.items())},
            "over": {k: self.over[k] for k in sorted(self.over)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        host = Graph.from_json(data["graph"])
        placement = {int(v): (Fraction(p[0]), Fraction(p[1]))
                     for v, p in data["placement"].items()}
        routes = {parse_edge_id(k): [(Fraction(x), Fraction(y)) for x, y in pts]
                  for k, pts in data.get("routes", {}).items()}
        return cls(host, placement, routes, dict(data.get("over", {})))


def validate_diagram(d: Diagram) -> list[Crossing]:
    return d.validate()


def flip_crossing(d: Diagram, key: str) -> Diagram:
    """Toggle the over edge at one crossing; geometry is untouched."""
    target = next((c for c in d.crossings() if c.key == key), None)
    if target is None or key not in d.over:
        raise KeyError(f"no crossing with key {key}")
    over = dict(d.over)
    a, b = edge_id(target.a.edge), edge_id(target.b.edge)
    over[key] = b if over[key] == a else a
    return d.with_over(over)


# ---------------------------------------------------------------------------
# cycle traversal bookkeeping


class _CycleTrace:
    """A cycle's closed polyline with positions measured along the traversal.

    Stations are (edge_index, position) pairs, position running 0..m over
    the m segments of the edge's route in traversal direction.
    """

    def __init__(self, d: Diagram, cycle: Cycle):
        self.cycle = cycle
        self.edges = frozenset(cycle.edges())
        self.oriented = cycle.oriented_edges()
        self.diagram = d
        self.edge_position = {}
        self.corners = []  # [(station, point)] in traversal order
        for k, (u, v) in enumerate(self.oriented):
            e = _norm_edge(u, v)
            forward = u < v
            self.edge_position[e] = (k, forward)
            pts = d.routes[e] if forward else tuple(reversed(d.routes[e]))
            for i in range(1, len(pts)):
                self.corners.append(((k, Fraction(i)), pts[i]))

    def station(self, side: StrandSide):
        k, forward = self.edge_position[side.edge]
        m = len(self.diagram.routes[side.edge]) - 1
        pos = side.segment + side.param if forward else m - side.segment - side.param
        return (k, pos)

    def direction(self, side: StrandSide):
        pts = self.diagram.routes[side.edge]
        a, b = pts[side.segment], pts[side.segment + 1]
        vec = (b[0] - a[0], b[1] - a[1])
        _, forward = self.edge_position[side.edge]
        return vec if forward else (-vec[0], -vec[1])

    def between(self, a, b, c) -> bool:
        """b strictly inside the forward cyclic interval from a to c."""
        if a == c:
            return False
        if a < c:
            return a < b < c
        return b > a or b < c

    def arc_points(self, s_from, s_to, p_from, p_to):
        """Polyline running forward along the cycle from one station to another."""
        n = len(self.oriented)

        def forward_key(st):
            k, pos = st
            off = (k - s_from[0]) % n
            if k == s_from[0] and pos < s_from[1]:
                off = n  # wrapped all the way around
            return (off, pos)

        inside = [(st, p) for st, p in self.corners if self.between(s_from, st, s_to)]
        inside.sort(key=lambda item: forward_key(item[0]))
        return [p_from] + [p for _, p in inside] + [p_to]


# ---------------------------------------------------------------------------
# linking number


def _pair_crossings(d: Diagram, pair: CyclePair):
    """Crossings between the two components as (crossing, side_on_first, side_on_second)."""
    e1 = pair.first.edges()
    e2 = pair.second.edges()
    out = []
    for c in d.crossings():
        ea, eb = c.a.edge, c.b.edge
        if ea in e1 and eb in e2:
            out.append((c, c.a, c.b))
        elif ea in e2 and eb in e1:
            out.append((c, c.b, c.a))
    return out


def _check_pair(d: Diagram, pair: CyclePair):
    if not (pair.first.is_valid_in(d.host) and pair.second.is_valid_in(d.host)):
        raise ValueError(f"pair {pair} is not valid in the diagram's graph")


def _crossing_sign(d: Diagram, t1, t2, c, s1, s2) -> int:
    """+1 when turning the over direction a quarter turn counterclockwise
    gives the under direction's side."""
    d1 = t1.direction(s1)
    d2 = t2.direction(s2)
    o, u = (d1, d2) if d.over_edge(c) == s1.edge else (d2, d1)
    return 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1


def linking_number(d: Diagram, pair: CyclePair) -> int:
    """Half the signed sum over crossings between the two components,
    both cycles oriented along their canonical vertex sequences."""
    _check_pair(d, pair)
    t1 = _CycleTrace(d, pair.first)
    t2 = _CycleTrace(d, pair.second)
    total = 0
    for c, s1, s2 in _pair_crossings(d, pair):
        total += _crossing_sign(d, t1, t2, c, s1, s2)
    if total % 2 != 0:
        raise LinksetError(f"odd inter-component crossing sign sum for {pair}")
    return total // 2


# ---------------------------------------------------------------------------
# split certificates


@dataclass(frozen=True)
class SplitCertificate:
    verdict: str  # "ZeroInterCrossings" | "R2Reduced" | "Unknown"
    steps: int = 0

    @property
    def is_split(self) -> bool:
        return self.verdict in ("ZeroInterCrossings", "R2Reduced")


def pair_analysis(d: Diagram, pair: CyclePair):
    """Traversal traces, crossing stations, and inter-crossing sides for a pair."""
    t1 = _CycleTrace(d, pair.first)
    t2 = _CycleTrace(d, pair.second)
    sub_edges = t1.edges | t2.edges
    sub_crossings = [c for c in d.crossings()
                     if c.a.edge in sub_edges and c.b.edge in sub_edges]

    stations = {1: [], 2: []}
    for c in sub_crossings:
        for side in (c.a, c.b):
            if side.edge in t1.edges:
                stations[1].append((t1.station(side), c.key))
            if side.edge in t2.edges:
                stations[2].append((t2.station(side), c.key))

    inter = _pair_crossings(d, pair)
    sides = {c.key: (s1, s2) for c, s1, s2 in inter}
    return t1, t2, stations, inter, sides


def split_certify(d: Diagram, pair: CyclePair) -> SplitCertificate:
    """Sufficient diagrammatic split test for a 2-component sublink.

    Succeeds when the components never cross, or when their mutual
    crossings pair up into verified second-Reidemeister bigons (same
    strand on top at both ends, opposite signs, arcs free of all other
    sublink crossings, corners thin, interior empty) that can all be
    undone simultaneously.  `Unknown` makes no claim either way.
    """
    _check_pair(d, pair)
    t1, t2, stations, inter, sides = pair_analysis(d, pair)
    if not inter:
        return SplitCertificate("ZeroInterCrossings")
    if len(inter) % 2 == 1:
        return SplitCertificate("Unknown")

    inter_by_key = {c.key: c for c, _, _ in inter}

    cancellable: dict[str, set[str]] = {}
    for kx, ky in itertools.combinations(sorted(inter_by_key), 2):
        if _valid_r2_pair(d, t1, t2, stations, inter_by_key[kx], inter_by_key[ky], sides):
            cancellable.setdefault(kx, set()).add(ky)
            cancellable.setdefault(ky, set()).add(kx)

    keys = tuple(sorted(inter_by_key))
    dead: set[tuple] = set()

    def match(remaining: tuple) -> bool:
        if not remaining:
            return True
        if remaining in dead:
            return False
        first, rest = remaining[0], remaining[1:]
        for partner in rest:
            if partner in cancellable.get(first, ()):
                if match(tuple(k for k in rest if k != partner)):
                    return True
        dead.add(remaining)
        return False

    if match(keys):
        return SplitCertificate("R2Reduced", steps=len(keys) // 2)
    return SplitCertificate("Unknown")


def _valid_r2_pair(d, t1, t2, stations, x, y, sides) -> bool:
    """x and y bound an honest empty bigon the sublink can slide across."""
    over_is_first_x = d.over_edge(x) in t1.edges
    over_is_first_y = d.over_edge(y) in t1.edges
    if over_is_first_x != over_is_first_y:
        return False

    sx1, sx2 = sides[x.key]
    sy1, sy2 = sides[y.key]
    sign_x = _crossing_sign(d, t1, t2, x, sx1, sx2)
    sign_y = _crossing_sign(d, t1, t2, y, sy1, sy2)
    if sign_x == sign_y:
        return False

    return r2_pair_geometry_ok(d, t1, t2, stations, x, y, sides)


def r2_pair_geometry_ok(d, t1, t2, stations, x, y, sides) -> bool:
    """The over/under-independent part of the bigon test: clean arcs on
    both components and an empty thin-cornered bigon between them."""
    sx1, sx2 = sides[x.key]
    sy1, sy2 = sides[y.key]
    options = []
    for comp, trace, s_x, s_y in ((1, t1, sx1, sy1), (2, t2, sx2, sy2)):
        clean = []
        for (a, sa, b, sb) in ((x, s_x, y, s_y), (y, s_y, x, s_x)):
            st_a, st_b = trace.station(sa), trace.station(sb)
            if _clean_interval(trace, stations[comp], st_a, st_b, {x.key, y.key}):
                clean.append((a, sa, b, sb))
        if not clean:
            return False
        options.append(clean)

    return any(_empty_bigon(d, t1, t2, arc1, arc2)
               for arc1 in options[0] for arc2 in options[1])


def _clean_interval(trace, station_list, st_a, st_b, exclude_keys) -> bool:
    for st, key in station_list:
        if key in exclude_keys:
            continue
        if trace.between(st_a, st, st_b):
            return False
    return True


def _empty_bigon(d, t1, t2, arc1, arc2) -> bool:
    a1, sa1, b1, sb1 = arc1
    a2, sa2, b2, sb2 = arc2
    path1 = t1.arc_points(t1.station(sa1), t1.station(sb1), a1.point, b1.point)
    path2 = t2.arc_points(t2.station(sa2), t2.station(sb2), a2.point, b2.point)
    if path2[0] != path1[-1]:
        path2 = list(reversed(path2))
    if path2[0] != path1[-1] or path2[-1] != path1[0]:
        return False
    polygon = list(path1) + list(path2[1:-1])
    if len(polygon) < 3:
        return False
    area2 = polygon_signed_area2(polygon)
    if area2 == 0:
        return False
    if area2 < 0:
        polygon = [polygon[0]] + list(reversed(polygon[1:]))

    n = len(polygon)
    corner_indices = [polygon.index(path1[0]), polygon.index(path1[-1])]
    for idx in corner_indices:
        incoming = _dirvec(polygon[(idx - 1) % n], polygon[idx])
        outgoing = _dirvec(polygon[idx], polygon[(idx + 1) % n])
        # strand continuations beyond the corner: backwards along the
        # outgoing boundary strand and forwards along the incoming one
        for d_away in (incoming, (-outgoing[0], -outgoing[1])):
            if direction_in_interior_cone(d_away, incoming, outgoing):
                return False

    boundary = set(polygon)
    for trace in (t1, t2):
        for e in trace.edges:
            for p in d.routes[e]:
                if p not in boundary and point_in_polygon(p, polygon):
                    return False
    return True


def _dirvec(a, b):
    return (b[0] - a[0], b[1] - a[1])


# ---------------------------------------------------------------------------
# diagram extension along a minor map


def extend_diagram(d: Diagram, m: MinorMap) -> Diagram:
    """Lift a minor diagram to its host graph.

    Expansion paths reuse the existing geometry (chain vertices are placed
    on the old routes, splitting them), and every host edge missing from
    the expanded subgraph is drawn under all earlier strands, fresh edges
    inserted in increasing edge order.
    """
    if m.minor != d.host:
        raise ValueError("diagram is not a diagram of the minor")
    for v, w in m.vertex_image.items():
        if v != w:
            raise ValueError("extension requires a label-preserving minor map")

    placement = dict(d.placement)
    routes: dict[Edge, tuple] = {}
    new_to_old: dict[Edge, Edge] = {}

    for e in sorted(m.minor.edges):
        path = m.expansion[e]
        if len(path) == 2:
            routes[e] = d.routes[e]
            new_to_old[e] = e
            continue
        if path[0] != e[0]:
            path = tuple(reversed(path))
        oriented = d.routes[e]  # stored from e[0] (= min) to e[1]
        cuts = _polyline_cuts(oriented, len(path) - 2)
        for j, w in enumerate(path[1:-1]):
            placement[w] = cuts[j][0]
        pieces = _split_polyline(oriented, cuts)
        for (u, v), piece in zip(zip(path, path[1:]), pieces):
            edge = _norm_edge(u, v)
            routes[edge] = tuple(piece) if u < v else tuple(reversed(piece))
            new_to_old[edge] = e

    partial = Graph(set(placement), set(routes))
    work = Diagram(partial, placement, routes, {})
    old_by_point = {c.point: c for c in d.crossings()}
    over = {}
    for c in work.crossings():
        old = old_by_point.get(c.point)
        if old is None:
            raise LinksetError(f"no base crossing at {c.point}")
        over_old = d.over_edge(old)
        over[c.key] = edge_id(c.a.edge if new_to_old[c.a.edge] == over_old
                              else c.b.edge)
    work = work.with_over(over)
    work.validate()

    for e in sorted(m.host.edges - set(routes)):
        work = _add_edge_under(work, e)
    if work.host != m.host:
        raise LinksetError("extension did not produce the full host graph")
    work.validate()
    return work


def _polyline_cuts(pts, k):
    """k interior cut positions spread along the polyline: (point, segment, t)."""
    m = len(pts) - 1
    cuts = []
    for j in range(1, k + 1):
        s = Fraction(j * m, k + 1)
        if s.denominator == 1:  # avoid landing exactly on a bend point
            s -= Fraction(1, 2 * (k + 2))
        seg = min(int(s), m - 1)
        t = s - seg
        a, b = pts[seg], pts[seg + 1]
        cuts.append(((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])), seg, t))
    return cuts


def _split_polyline(pts, cuts):
    pieces = []
    cur = [pts[0]]
    ci = 0
    for seg in range(len(pts) - 1):
        while ci < len(cuts) and cuts[ci][1] == seg:
            cur.append(cuts[ci][0])
            pieces.append(tuple(cur))
            cur = [cuts[ci][0]]
            ci += 1
        cur.append(pts[seg + 1])
    pieces.append(tuple(cur))
    return pieces


def _add_edge_under(work: Diagram, e: Edge) -> Diagram:
    """Add edge e routed under every existing strand, bending when the
    straight chord is degenerate."""
    pa, pb = work.placement[e[0]], work.placement[e[1]]
    span = max(abs(pa[0] - pb[0]), abs(pa[1] - pb[1]), Fraction(1))
    mid = ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
    attempts = [(pa, pb)]
    for j in range(1, 33):
        off = span / 2 ** j
        attempts.append((pa, (mid[0], mid[1] + off), pb))
        attempts.append((pa, (mid[0], mid[1] - off), pb))
    last_error = None
    new_graph = Graph(work.host.vertices, set(work.host.edges) | {e})
    for route in attempts:
        routes = dict(work.routes)
        routes[e] = tuple(route)
        try:
            cand = Diagram(new_graph, work.placement, routes, {})
            crossings = cand.crossings()
        except DegenerateDiagram as err:
            last_error = err
            continue
        over = dict(work.over)
        for c in crossings:
            if c.key in over:
                continue
            other = c.b.edge if c.a.edge == e else c.a.edge
            over[c.key] = edge_id(other)
        cand = cand.with_over(over)
        try:
            cand.validate()
        except DegenerateDiagram as err:
            last_error = err
            continue
        return cand
    raise DegenerateDiagram(f"could not route edge {edge_id(e)}: {last_error}")
