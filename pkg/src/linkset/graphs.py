"""Labeled simple graphs, disjoint cycle pairs, and minor plumbing.

Vertex labels are positive integers.  Cycles and cycle pairs carry a
canonical form so that sets of them deduplicate deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

MAX_ENUMERATION_VERTICES = 12


class LinksetError(Exception):
    pass


class SizeBoundExceeded(LinksetError):
    pass


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"loop edge {u}-{v}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple graph with positive-integer vertex labels."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices, edges):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(_norm_edge(u, v) for u, v in edges)
        for v in self.vertices:
            if not isinstance(v, int) or v <= 0:
                raise ValueError(f"vertex labels must be positive ints, got {v!r}")
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {u}-{v} has endpoint outside vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={len(self.edges)})"

    def to_json(self) -> dict:
        return {"vertices": sorted(self.vertices),
                "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(data["vertices"], [tuple(e) for e in data["edges"]])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    vs = range(1, n + 1)
    return Graph(vs, itertools.combinations(vs, 2))


class Cycle:
    """A cycle as a canonical cyclic vertex sequence.

    Canonical form: rotate so the smallest label comes first, then run
    toward the smaller of its two neighbors.  Two traversals of the same
    subgraph always canonicalize identically.
    """

    __slots__ = ("vertices",)

    def __init__(self, sequence):
        seq = tuple(sequence)
        if len(seq) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(seq)) != len(seq):
            raise ValueError(f"repeated vertex in cycle {seq}")
        self.vertices = _canonical_rotation(seq)

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> frozenset[tuple[int, int]]:
        n = len(self.vertices)
        return frozenset(_norm_edge(self.vertices[i], self.vertices[(i + 1) % n])
                         for i in range(n))

    def oriented_edges(self) -> list[tuple[int, int]]:
        """Directed edges following the canonical traversal."""
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        return all(e in g.edges for e in self.edges())

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.vertices == other.vertices

    def __lt__(self, other):
        return (len(self.vertices), self.vertices) < (len(other.vertices), other.vertices)

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "[" + " ".join(str(v) for v in self.vertices) + "]"


def _canonical_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


class CyclePair:
    """Two vertex-disjoint cycles, the longer one stored first."""

    __slots__ = ("first", "second", "hamiltonian")

    def __init__(self, first: Cycle, second: Cycle, host: Graph | None = None):
        if first.vertex_set() & second.vertex_set():
            raise ValueError(f"cycles {first} and {second} share vertices")
        if len(first) < len(second) or (
                len(first) == len(second) and second.vertices < first.vertices):
            first, second = second, first
        self.first = first
        self.second = second
        if host is not None:
            if not (first.is_valid_in(host) and second.is_valid_in(host)):
                raise ValueError(f"pair {first}|{second} not valid in host graph")
            self.hamiltonian = (first.vertex_set() | second.vertex_set()) == host.vertices
        else:
            self.hamiltonian = False

    @property
    def type_pq(self) -> tuple[int, int]:
        return (len(self.first), len(self.second))

    def cycles(self) -> tuple[Cycle, Cycle]:
        return (self.first, self.second)

    def vertex_set(self) -> frozenset[int]:
        return self.first.vertex_set() | self.second.vertex_set()

    def separates(self, e: tuple[int, int], f: tuple[int, int]) -> bool:
        """Edges e and f lie on different components of the pair."""
        e, f = _norm_edge(*e), _norm_edge(*f)
        e1, e2 = self.first.edges(), self.second.edges()
        return (e in e1 and f in e2) or (e in e2 and f in e1)

    def key(self):
        return (self.first.vertices, self.second.vertices)

    def __eq__(self, other):
        return isinstance(other, CyclePair) and self.key() == other.key()

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"{self.first!r}|{self.second!r}"

    def to_json(self) -> list:
        return [list(self.first.vertices), list(self.second.vertices)]

    @classmethod
    def from_json(cls, data, host: Graph | None = None) -> "CyclePair":
        return cls(Cycle(data[0]), Cycle(data[1]), host)


@dataclass(frozen=True)
class LambdaSet:
    """A named finite set of disjoint cycle pairs over one host graph."""

    name: str
    host: Graph
    pairs: tuple[CyclePair, ...]

    def __post_init__(self):
        seen = set()
        for p in self.pairs:
            if not (p.first.is_valid_in(self.host) and p.second.is_valid_in(self.host)):
                raise ValueError(f"{self.name}: pair {p} not valid in host")
            if p.key() in seen:
                raise ValueError(f"{self.name}: duplicate pair {p}")
            seen.add(p.key())
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair):
        return any(p == pair for p in self.pairs)

    def without(self, pair: CyclePair) -> "LambdaSet":
        rest = tuple(p for p in self.pairs if p != pair)
        if len(rest) == len(self.pairs):
            raise ValueError(f"{pair} not in {self.name}")
        return LambdaSet(self.name + "-minus-one", self.host, rest)

    def to_json(self) -> dict:
        return {"name": self.name,
                "graph": self.host.to_json(),
                "pairs": [p.to_json() for p in self.pairs]}

    @classmethod
    def from_json(cls, data: dict) -> "LambdaSet":
        host = Graph.from_json(data["graph"])
        pairs = tuple(CyclePair.from_json(p, host) for p in data["pairs"])
        return cls(data["name"], host, pairs)


class VertexPermutation:
    """A bijection on vertex labels; optionally an automorphism witness.

    Isomorphism witnesses between differently-labeled graphs are allowed,
    so the domain and codomain need not coincide.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: dict[int, int]):
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("mapping is not injective")
        self.mapping = dict(mapping)

    @classmethod
    def identity(cls, vertices) -> "VertexPermutation":
        return cls({v: v for v in vertices})

    @classmethod
    def from_cycles(cls, vertices, *cycles) -> "VertexPermutation":
        """Build from disjoint cycle notation, e.g. from_cycles(vs, (1, 2, 3))."""
        mapping = {v: v for v in vertices}
        for cyc in cycles:
            for i, v in enumerate(cyc):
                mapping[v] = cyc[(i + 1) % len(cyc)]
        return cls(mapping)

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """self after other: (self.compose(other))(v) == self(other(v))."""
        return VertexPermutation({v: self.mapping[w] for v, w in other.mapping.items()})

    def inverse(self) -> "VertexPermutation":
        return VertexPermutation({w: v for v, w in self.mapping.items()})

    def is_automorphism_of(self, g: Graph) -> bool:
        if set(self.mapping) != g.vertices:
            return False
        return all(_norm_edge(self.mapping[u], self.mapping[v]) in g.edges
                   for u, v in g.edges)

    def key(self):
        return tuple(sorted(self.mapping.items()))

    def __eq__(self, other):
        return isinstance(other, VertexPermutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"VertexPermutation({self.mapping})"

    def to_json(self) -> dict:
        return {str(v): w for v, w in sorted(self.mapping.items())}

    @classmethod
    def from_json(cls, data: dict) -> "VertexPermutation":
        return cls({int(v): w for v, w in data.items()})


def apply_permutation(perm: VertexPermutation, pair: CyclePair,
                      host: Graph | None = None) -> CyclePair:
    """Relabel a cycle pair; result is re-canonicalized."""
    for v in pair.vertex_set():
        if v not in perm.mapping:
            raise ValueError(f"vertex {v} outside permutation domain")
    c1 = Cycle([perm(v) for v in pair.first.vertices])
    c2 = Cycle([perm(v) for v in pair.second.vertices])
    return CyclePair(c1, c2, host)


def apply_permutation_cycle(perm: VertexPermutation, cycle: Cycle) -> Cycle:
    return Cycle([perm(v) for v in cycle.vertices])


# ---------------------------------------------------------------------------
# enumeration


def enumerate_cycles(g: Graph, length: int | None = None) -> list[Cycle]:
    """All cycles of g (optionally of one length), canonical and sorted."""
    found: set[Cycle] = set()
    order = sorted(g.vertices)

    for start in order:
        # only search cycles whose minimum vertex is `start`
        def extend(path: list[int], used: set[int]):
            last = path[-1]
            for nxt in sorted(g.neighbors(last)):
                if nxt == start and len(path) >= 3:
                    if length is None or len(path) == length:
                        found.add(Cycle(path))
                if nxt in used or nxt < start:
                    continue
                if length is not None and len(path) >= length:
                    continue
                used.add(nxt)
                path.append(nxt)
                extend(path, used)
                path.pop()
                used.remove(nxt)

        extend([start], {start})
    return sorted(found)


def enumerate_pairs(g: Graph, type_pq: tuple[int, int] | None = None,
                    hamiltonian_only: bool = False,
                    max_n: int = MAX_ENUMERATION_VERTICES) -> list[CyclePair]:
    """All vertex-disjoint cycle pairs of g matching the filters."""
    if g.n > max_n:
        raise SizeBoundExceeded(
            f"pair enumeration bounded to {max_n} vertices (graph has {g.n})")
    if type_pq is not None:
        p, q = max(type_pq), min(type_pq)
        cycles = enumerate_cycles(g, p) if p == q else \
            enumerate_cycles(g, p) + enumerate_cycles(g, q)
    else:
        p = q = None
        cycles = enumerate_cycles(g)

    by_support: dict[frozenset, list[Cycle]] = {}
    for c in cycles:
        by_support.setdefault(c.vertex_set(), []).append(c)

    out: set[CyclePair] = set()
    supports = sorted(by_support, key=sorted)
    for i, s1 in enumerate(supports):
        for s2 in supports[i + 1:]:
            if s1 & s2:
                continue
            if hamiltonian_only and (s1 | s2) != g.vertices:
                continue
            for c1 in by_support[s1]:
                for c2 in by_support[s2]:
                    pair = CyclePair(c1, c2, g)
                    if type_pq is not None and pair.type_pq != (p, q):
                        continue
                    out.add(pair)
    return sorted(out)


def gamma2(g: Graph, name: str | None = None) -> LambdaSet:
    """The set of all disjoint cycle pairs of g as a LambdaSet."""
    pairs = enumerate_pairs(g)
    return LambdaSet(name or "Gamma2", g, tuple(pairs))


# ---------------------------------------------------------------------------
# automorphisms and isomorphism


def _refinement_signature(g: Graph, v: int):
    return (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))


def _iso_search(g: Graph, h: Graph):
    """Backtracking isomorphism search; yields mappings g -> h."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return
    gsig = {v: _refinement_signature(g, v) for v in g.vertices}
    hsig = {v: _refinement_signature(h, v) for v in h.vertices}
    if sorted(gsig.values()) != sorted(hsig.values()):
        return
    # map rarest signatures first
    order = sorted(g.vertices,
                   key=lambda v: (sum(1 for s in gsig.values() if s == gsig[v]), v))
    hverts = sorted(h.vertices)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(i: int):
        if i == len(order):
            yield dict(mapping)
            return
        v = order[i]
        for w in hverts:
            if w in used or hsig[w] != gsig[v]:
                continue
            ok = True
            for u in mapping:
                if (g.has_edge(u, v)) != (h.has_edge(mapping[u], w)):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            yield from backtrack(i + 1)
            del mapping[v]
            used.remove(w)

    yield from backtrack(0)


def automorphism_group(g: Graph,
                       max_n: int = MAX_ENUMERATION_VERTICES) -> list[VertexPermutation]:
    """The full automorphism group by pruned backtracking."""
    if g.n > max_n:
        raise SizeBoundExceeded(
            f"automorphism search bounded to {max_n} vertices (graph has {g.n})")
    perms = [VertexPermutation(m) for m in _iso_search(g, g)]
    return sorted(perms, key=lambda p: p.key())


def is_isomorphic(g: Graph, h: Graph,
                  max_n: int = MAX_ENUMERATION_VERTICES) -> VertexPermutation | None:
    """An isomorphism witness g -> h, or None."""
    if max(g.n, h.n) > max_n:
        raise SizeBoundExceeded(
            f"isomorphism search bounded to {max_n} vertices")
    for m in _iso_search(g, h):
        return VertexPermutation(m)
    return None


def subgroup_closure(generators: list[VertexPermutation],
                     vertices) -> list[VertexPermutation]:
    """Close a generator list under composition."""
    ident = VertexPermutation.identity(vertices)
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for gen in generators:
                q = gen.compose(p)
                if q.key() not in seen:
                    seen[q.key()] = q
                    nxt.append(q)
        frontier = nxt
    return sorted(seen.values(), key=lambda p: p.key())


# ---------------------------------------------------------------------------
# subdivision / contraction / delta-wye / splittings


@dataclass(frozen=True)
class MinorMap:
    """A subdivision-plus-subgraph minor presentation.

    ``expansion`` sends each minor edge to the host path it expands into
    (a vertex tuple; a plain (u, v) when the edge was not subdivided).
    Only minors whose contractions run along degree-2 chains are
    representable, which covers every construction used here.
    """

    minor: Graph
    host: Graph
    subgraph_edges: frozenset[tuple[int, int]]
    expansion: dict[tuple[int, int], tuple[int, ...]]
    vertex_image: dict[int, int]

    def __post_init__(self):
        image_vertices = set(self.vertex_image.values())
        if len(image_vertices) != len(self.vertex_image):
            raise ValueError("vertex_image is not injective")
        interior_seen: set[int] = set()
        covered: set[tuple[int, int]] = set()
        for e in sorted(self.minor.edges):
            path = self.expansion[e]
            if (path[0], path[-1]) != (self.vertex_image[e[0]], self.vertex_image[e[1]]) \
                    and (path[-1], path[0]) != (self.vertex_image[e[0]], self.vertex_image[e[1]]):
                raise ValueError(f"expansion of {e} does not join its endpoints")
            interior = path[1:-1]
            for w in interior:
                if w in interior_seen or w in image_vertices:
                    raise ValueError(f"expansion paths not internally disjoint at {w}")
                interior_seen.add(w)
            for a, b in zip(path, path[1:]):
                edge = _norm_edge(a, b)
                if edge not in self.subgraph_edges:
                    raise ValueError(f"expansion edge {edge} not in subgraph")
                covered.add(edge)
        if covered != set(self.subgraph_edges):
            raise ValueError("subgraph edges not exactly covered by expansions")
        if not self.subgraph_edges <= self.host.edges:
            raise ValueError("subgraph edges not contained in host")

    @classmethod
    def identity(cls, g: Graph) -> "MinorMap":
        return cls(minor=g, host=g, subgraph_edges=g.edges,
                   expansion={e: e for e in g.edges},
                   vertex_image={v: v for v in g.vertices})

    def into_host(self, new_host: Graph) -> "MinorMap":
        """Reinterpret the same expansion inside a larger host graph."""
        if not self.subgraph_edges <= new_host.edges:
            raise ValueError("subgraph is not a subgraph of the new host")
        return MinorMap(self.minor, new_host, self.subgraph_edges,
                        self.expansion, self.vertex_image)

    def to_json(self) -> dict:
        return {
            "minor": self.minor.to_json(),
            "host": self.host.to_json(),
            "subgraphEdges": [list(e) for e in sorted(self.subgraph_edges)],
            "expansion": {f"{u}-{v}": list(path)
                          for (u, v), path in sorted(self.expansion.items())},
            "vertexImage": {str(v): w for v, w in sorted(self.vertex_image.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorMap":
        expansion = {}
        for key, path in data["expansion"].items():
            u, v = key.split("-")
            expansion[_norm_edge(int(u), int(v))] = tuple(path)
        return cls(
            minor=Graph.from_json(data["minor"]),
            host=Graph.from_json(data["host"]),
            subgraph_edges=frozenset(_norm_edge(*e) for e in data["subgraphEdges"]),
            expansion=expansion,
            vertex_image={int(v): w for v, w in data["vertexImage"].items()},
        )


def subdivide_edge(g: Graph, e: tuple[int, int], k: int,
                   label_start: int) -> tuple[Graph, MinorMap]:
    """Replace edge e by a path through k fresh degree-2 vertices.

    Fresh labels label_start .. label_start+k-1 are threaded in increasing
    order from the lower-labeled endpoint of e.
    """
    e = _norm_edge(*e)
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    if k < 1:
        raise ValueError("subdivision needs k >= 1")
    fresh = list(range(label_start, label_start + k))
    if any(w in g.vertices for w in fresh):
        raise ValueError(f"fresh labels {fresh} collide with existing vertices")
    path = (e[0],) + tuple(fresh) + (e[1],)
    new_edges = (g.edges - {e}) | {_norm_edge(a, b) for a, b in zip(path, path[1:])}
    new_graph = Graph(g.vertices | set(fresh), new_edges)
    expansion = {f: f for f in g.edges if f != e}
    expansion[e] = path
    m = MinorMap(minor=g, host=new_graph, subgraph_edges=new_graph.edges,
                 expansion=expansion, vertex_image={v: v for v in g.vertices})
    return new_graph, m


def subdivide_edges(g: Graph, jobs: list[tuple[tuple[int, int], int, int]]
                    ) -> tuple[Graph, MinorMap]:
    """Subdivide several distinct edges of g in one combined MinorMap."""
    current = g
    expansion = {e: e for e in g.edges}
    for e, k, label_start in jobs:
        e = _norm_edge(*e)
        current, _m = subdivide_edge(current, e, k, label_start)
        path = (e[0],) + tuple(range(label_start, label_start + k)) + (e[1],)
        expansion[e] = path
    m = MinorMap(minor=g, host=current, subgraph_edges=current.edges,
                 expansion=expansion, vertex_image={v: v for v in g.vertices})
    return current, m


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the endpoints of e into the smaller label (simple quotient)."""
    e = _norm_edge(*e)
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    keep, gone = e
    new_edges = set()
    for u, v in g.edges:
        u2 = keep if u == gone else u
        v2 = keep if v == gone else v
        if u2 != v2:
            new_edges.add(_norm_edge(u2, v2))
    return Graph(g.vertices - {gone}, new_edges)


def delta_y(g: Graph, triangle, new_label: int) -> Graph:
    """Replace a triangle by a star vertex (the edge count is preserved)."""
    tri = sorted(triangle)
    if len(tri) != 3:
        raise ValueError("triangle must have 3 vertices")
    tri_edges = {_norm_edge(a, b) for a, b in itertools.combinations(tri, 2)}
    if not tri_edges <= g.edges:
        raise ValueError(f"vertices {tri} do not span a triangle")
    if new_label in g.vertices:
        raise ValueError(f"label {new_label} already in use")
    new_edges = (g.edges - tri_edges) | {_norm_edge(new_label, v) for v in tri}
    return Graph(g.vertices | {new_label}, new_edges)


def y_delta(g: Graph, v: int) -> Graph:
    """Replace a degree-3 vertex by a triangle on its neighbors."""
    if g.degree(v) != 3:
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, need 3")
    ns = sorted(g.neighbors(v))
    new_edges = {e for e in g.edges if v not in e}
    new_edges |= {_norm_edge(a, b) for a, b in itertools.combinations(ns, 2)}
    return Graph(g.vertices - {v}, new_edges)


@dataclass(frozen=True)
class VertexSplitting:
    graph: Graph
    side_a: frozenset[int]
    side_b: frozenset[int]
    new_label: int
    trivial: bool


def vertex_splittings(g: Graph, v: int) -> list[VertexSplitting]:
    """All splittings of v into two adjacent vertices with partitioned fans.

    Partitions with an empty side would create a degree-1 vertex and are
    skipped; a splitting is topologically trivial when one side receives a
    single neighbor.
    """
    ns = sorted(g.neighbors(v))
    new_label = max(g.vertices) + 1
    out = []
    seen = set()
    for bits in range(1, 2 ** len(ns) - 1):
        side_a = frozenset(ns[i] for i in range(len(ns)) if bits >> i & 1)
        side_b = frozenset(ns) - side_a
        key = frozenset((side_a, side_b))
        if key in seen:
            continue
        seen.add(key)
        edges = {e for e in g.edges if v not in e}
        edges |= {_norm_edge(v, w) for w in side_a}
        edges |= {_norm_edge(new_label, w) for w in side_b}
        edges.add(_norm_edge(v, new_label))
        out.append(VertexSplitting(
            graph=Graph(g.vertices | {new_label}, edges),
            side_a=side_a, side_b=side_b, new_label=new_label,
            trivial=min(len(side_a), len(side_b)) <= 1))
    return sorted(out, key=lambda s: (sorted(s.side_a), sorted(s.side_b)))


def connectivity_report(g: Graph) -> tuple[int, list[tuple[int, int]]]:
    """(number of connected components, sorted list of cut-edges)."""
    seen: set[int] = set()
    components = 0
    for start in sorted(g.vertices):
        if start in seen:
            continue
        components += 1
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)

    # bridges by removal: n is small enough to keep this simple
    def component_count(edges):
        adj = {v: set() for v in g.vertices}
        for u, w in edges:
            adj[u].add(w)
            adj[w].add(u)
        left = set(g.vertices)
        count = 0
        while left:
            count += 1
            stack = [next(iter(left))]
            left.discard(stack[0])
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in left:
                        left.discard(w)
                        stack.append(w)
        return count

    bridges = [e for e in g.sorted_edges()
               if component_count(g.edges - {e}) > components]
    return components, bridges


def psi_pair_map(m: MinorMap, pair: CyclePair) -> CyclePair:
    """Push a minor cycle pair into the host along the expansion paths."""
    def expand_cycle(c: Cycle) -> Cycle:
        seq: list[int] = []
        for u, v in c.oriented_edges():
            e = _norm_edge(u, v)
            if e not in m.expansion:
                raise ValueError(f"cycle edge {e} not an edge of the minor")
            path = m.expansion[e]
            iu = m.vertex_image[u]
            if path[0] != iu:
                path = tuple(reversed(path))
            seq.extend(path[:-1])
        return Cycle(seq)

    return CyclePair(expand_cycle(pair.first), expand_cycle(pair.second), m.host)
