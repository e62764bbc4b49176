"""The graph catalog: the seven minor-minimal intrinsically linked graphs,
three gadget graphs carrying small linked pair sets, and the named pair
sets over them.

Labelings are fixed data.  `check_catalog_labeling` re-derives every fact
the labeling is required to satisfy (isomorphism type, quoted cycles,
quoted generators, separation uniqueness), so a transcription slip cannot
survive the test suite.
"""

from __future__ import annotations

import itertools

from .graphs import (Cycle, CyclePair, Graph, LambdaSet, LinksetError, MinorMap,
                     VertexPermutation, complete_graph, delta_y, enumerate_pairs,
                     gamma2, is_isomorphic, subdivide_edges, psi_pair_map)


class UnknownCatalogName(LinksetError):
    pass


GRAPH_NAMES = ("K6", "Q7", "Q8", "P7", "P8", "P9", "P10", "G8", "G9", "G10")

PETERSEN_FAMILY = ("K6", "Q7", "Q8", "P7", "P8", "P9", "P10")


def _edges(*pairs):
    return [tuple(p) for p in pairs]


def _star(center, leaves):
    return [(center, v) for v in leaves]


def catalog_graph(name: str) -> Graph:
    if name == "K6":
        return complete_graph(6)
    if name == "Q7":
        # K6 with the triangle {1,2,3} exchanged for a star at 7
        return delta_y(complete_graph(6), (1, 2, 3), 7)
    if name == "Q8":
        return delta_y(catalog_graph("Q7"), (4, 5, 6), 8)
    if name == "P7":
        # complete tripartite {1,2,3} / {4,5,6} / {7}
        parts = [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)]
        return Graph(range(1, 8), parts + _star(7, range(1, 7)))
    if name == "P8":
        return delta_y(catalog_graph("P7"), (1, 6, 7), 8)
    if name == "P9":
        hexagon = [(1, 8), (8, 6), (6, 3), (3, 9), (9, 5), (5, 1)]
        triangle = [(2, 7), (7, 4), (4, 2)]
        chords = [(2, 5), (2, 6), (4, 1), (4, 3), (7, 8), (7, 9)]
        return Graph(range(1, 10), hexagon + triangle + chords)
    if name == "P10":
        return delta_y(catalog_graph("P9"), (2, 7, 4), 10)
    if name == "G8":
        return Graph(range(1, 9),
                     list(itertools.combinations(range(1, 7), 2))
                     + _star(7, (1, 2, 3, 8)) + _star(8, (1, 2, 3)))
    if name == "G9":
        k33 = [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)]
        return Graph(range(1, 10),
                     k33 + _star(7, (1, 2, 3, 8)) + _star(8, (1, 2, 3))
                     + _star(9, (4, 5, 6)))
    if name == "G10":
        return Graph(range(1, 11),
                     list(itertools.combinations(range(1, 7), 2))
                     + _star(7, (1, 2, 3, 8)) + _star(8, (1, 2, 3))
                     + _star(9, (4, 5, 6, 10)) + _star(10, (4, 5, 6)))
    raise UnknownCatalogName(f"unknown catalog graph {name!r}")


# Verbatim Hamiltonian pair lists for the three gadget graphs.

_LAMBDA_G8 = [
    ([1, 8, 7, 2, 3], [4, 5, 6]), ([1, 2, 8, 7, 3], [4, 5, 6]),
    ([1, 2, 3, 8, 7], [4, 5, 6]),
    ([1, 8, 7, 2, 4], [3, 5, 6]), ([1, 8, 7, 2, 5], [4, 3, 6]),
    ([1, 8, 7, 2, 6], [4, 5, 3]),
    ([6, 2, 8, 7, 3], [4, 5, 1]), ([5, 2, 8, 7, 3], [4, 1, 6]),
    ([4, 2, 8, 7, 3], [1, 5, 6]),
    ([1, 4, 3, 8, 7], [2, 5, 6]), ([1, 5, 3, 8, 7], [4, 2, 6]),
    ([1, 6, 3, 8, 7], [4, 5, 2]),
]

_LAMBDA_G9 = [
    ([1, 8, 7, 2, 6], [4, 9, 5, 3]), ([1, 8, 7, 2, 4], [3, 5, 9, 6]),
    ([1, 8, 7, 2, 5], [4, 3, 6, 9]),
    ([6, 2, 8, 7, 3], [4, 9, 5, 1]), ([4, 2, 8, 7, 3], [1, 5, 9, 6]),
    ([5, 2, 8, 7, 3], [4, 1, 6, 9]),
    ([1, 6, 3, 8, 7], [4, 9, 5, 2]), ([1, 4, 3, 8, 7], [2, 5, 9, 6]),
    ([1, 5, 3, 8, 7], [4, 2, 6, 9]),
]

_LAMBDA_G10 = [
    ([1, 8, 7, 2, 3], [4, 10, 9, 5, 6]), ([1, 8, 7, 2, 3], [4, 5, 10, 9, 6]),
    ([1, 8, 7, 2, 3], [4, 5, 6, 10, 9]),
    ([1, 2, 8, 7, 3], [4, 10, 9, 5, 6]), ([1, 2, 8, 7, 3], [4, 5, 10, 9, 6]),
    ([1, 2, 8, 7, 3], [4, 5, 6, 10, 9]),
    ([1, 2, 3, 8, 7], [4, 10, 9, 5, 6]), ([1, 2, 3, 8, 7], [4, 5, 10, 9, 6]),
    ([1, 2, 3, 8, 7], [4, 5, 6, 10, 9]),
    ([1, 8, 7, 2, 6], [4, 10, 9, 5, 3]), ([1, 8, 7, 2, 4], [3, 5, 10, 9, 6]),
    ([1, 8, 7, 2, 5], [4, 3, 6, 10, 9]),
    ([6, 2, 8, 7, 3], [4, 10, 9, 5, 1]), ([4, 2, 8, 7, 3], [1, 5, 10, 9, 6]),
    ([5, 2, 8, 7, 3], [4, 1, 6, 10, 9]),
    ([1, 6, 3, 8, 7], [4, 10, 9, 5, 2]), ([1, 4, 3, 8, 7], [2, 5, 10, 9, 6]),
    ([1, 5, 3, 8, 7], [4, 2, 6, 10, 9]),
]

_GADGET_LISTS = {"G8": _LAMBDA_G8, "G9": _LAMBDA_G9, "G10": _LAMBDA_G10}

LAMBDA_NAMES = (
    "L(G8)", "L(G9)", "L(G10)",
    "G2(K6)", "G2(Q7)", "G2(Q8)", "G2(P7)", "G2(P8)", "G2(P9)", "G2(P10)",
    "L'(K10)",
)

_UNICODE_ALIASES = {
    "Λ(G8)": "L(G8)", "Λ(G9)": "L(G9)", "Λ(G10)": "L(G10)",
    "Λ'(K10)": "L'(K10)", "Λ′(K10)": "L'(K10)",
    "Γ2(K6)": "G2(K6)", "Γ2(Q7)": "G2(Q7)", "Γ2(Q8)": "G2(Q8)",
    "Γ2(P7)": "G2(P7)", "Γ2(P8)": "G2(P8)", "Γ2(P9)": "G2(P9)",
    "Γ2(P10)": "G2(P10)",
}


def normalize_lambda_name(name: str) -> str:
    name = _UNICODE_ALIASES.get(name, name)
    if name not in LAMBDA_NAMES:
        raise UnknownCatalogName(f"unknown pair-set name {name!r}")
    return name


def catalog_lambda(name: str) -> LambdaSet:
    name = normalize_lambda_name(name)
    if name.startswith("L(G"):
        gname = name[2:-1]
        host = catalog_graph(gname)
        pairs = tuple(CyclePair(Cycle(a), Cycle(b), host)
                      for a, b in _GADGET_LISTS[gname])
        return LambdaSet(name, host, pairs)
    if name.startswith("G2("):
        gname = name[3:-1]
        return gamma2(catalog_graph(gname), name)
    if name == "L'(K10)":
        _, lam, _ = lambda_prime_k10()
        return lam
    raise UnknownCatalogName(name)


def petersen_lambda_name(gname: str) -> str:
    return f"G2({gname})"


def gadget_lambda_name(gname: str) -> str:
    return f"L({gname})"


def witness_lambda_name(gname: str) -> str:
    """The pair set a witness drawing of a catalog graph is scored against."""
    return gadget_lambda_name(gname) if gname.startswith("G") else petersen_lambda_name(gname)


# ---------------------------------------------------------------------------
# quoted facts used to pin the labelings down


def _perm(g: Graph, *cycles) -> VertexPermutation:
    return VertexPermutation.from_cycles(g.vertices, *cycles)


def quoted_generators(name: str) -> list[VertexPermutation]:
    g = catalog_graph(name)
    if name == "K6":
        return [_perm(g, (1, 3, 5)), _perm(g, (2, 4, 6))]
    if name in ("Q7", "Q8", "P7", "G8", "G9", "G10"):
        return [_perm(g, (1, 2, 3)), _perm(g, (4, 5, 6))]
    if name == "P8":
        return [_perm(g, (2, 3)), _perm(g, (4, 5)),
                _perm(g, (1, 6), (3, 4), (2, 5))]
    if name in ("P9", "P10"):
        return [_perm(g, (1, 6, 9), (8, 3, 5), (2, 7, 4)),
                _perm(g, (4, 7, 2), (1, 8, 6, 3, 9, 5))]
    raise UnknownCatalogName(name)


def battery_subgroups(name: str) -> dict[str, list[VertexPermutation]]:
    """Generator lists per pair class, keyed by a class tag."""
    g = catalog_graph(name)
    if name == "K6":
        return {"all": [_perm(g, (1, 2)), _perm(g, (1, 2, 3, 4, 5, 6))]}
    if name in ("Q7", "Q8", "P7", "G9"):
        return {"all": [_perm(g, (1, 2, 3)), _perm(g, (4, 5, 6))]}
    if name == "P8":
        return {"5,3": [_perm(g, (2, 3)), _perm(g, (4, 5))],
                "4,4": [_perm(g, (2, 3)), _perm(g, (4, 5)),
                        _perm(g, (1, 6), (3, 4), (2, 5))]}
    if name == "P9":
        return {"5,4": [_perm(g, (1, 6, 9), (8, 3, 5), (2, 7, 4)),
                        _perm(g, (4, 7, 2), (1, 8, 6, 3, 9, 5))],
                "6,3": []}
    if name == "P10":
        return {"all": [_perm(g, (1, 6, 9), (8, 3, 5), (2, 7, 4)),
                        _perm(g, (4, 7, 2), (1, 8, 6, 3, 9, 5))]}
    if name == "G8":
        return {"no-456": [_perm(g, (1, 2, 3)), _perm(g, (4, 5, 6))],
                "with-456": [_perm(g, (1, 2, 3))]}
    if name == "G10":
        return {"split-123": [_perm(g, (1, 2, 3)), _perm(g, (4, 5, 6))],
                "joint-123": [_perm(g, (1, 2, 3)), _perm(g, (4, 5, 6))]}
    raise UnknownCatalogName(name)


def _pair(host, a, b):
    return CyclePair(Cycle(a), Cycle(b), host)


def quoted_cycles(name: str) -> list[Cycle]:
    """Cycles quoted for this graph that the labeling must admit."""
    host = catalog_graph(name)
    reps = {
        "K6": [[1, 3, 5], [2, 4, 6]],
        "Q7": [[1, 7, 3, 5], [2, 4, 6]],
        "P7": [[1, 5, 2, 6], [7, 3, 4]],
        "Q8": [[1, 7, 3, 5], [2, 4, 8, 6]],
        "P8": [[1, 5, 2, 6, 8], [7, 3, 4], [8, 1, 5, 7], [4, 2, 6, 3]],
        "P9": [[1, 8, 6, 3, 9, 5], [2, 7, 4], [1, 8, 6, 3, 4], [5, 2, 7, 9]],
        "P10": [[1, 8, 6, 3, 4], [5, 2, 10, 7, 9]],
        "G8": [[1, 5, 3, 8, 7], [4, 2, 6], [1, 2, 3, 8, 7], [4, 5, 6]],
        "G9": [[1, 5, 3, 8, 7], [4, 2, 6, 9]],
        "G10": [[1, 5, 3, 8, 7], [4, 2, 6, 10, 9],
                [1, 2, 3, 8, 7], [4, 5, 6, 10, 9]],
    }
    out = [Cycle(seq) for seq in reps[name]]
    if name in _GADGET_LISTS:
        for a, b in _GADGET_LISTS[name]:
            out.extend([Cycle(a), Cycle(b)])
    for c in out:
        if not c.is_valid_in(host):
            raise LinksetError(f"quoted cycle {c} is not a cycle of {name}")
    return out


def designated_pairs(name: str) -> dict[str, CyclePair]:
    """Representative pairs per class; the no-flip class is tagged 'base'."""
    host = catalog_graph(name)
    if name == "K6":
        return {"base": _pair(host, [1, 3, 5], [2, 4, 6])}
    if name == "Q7":
        return {"base": _pair(host, [1, 7, 3, 5], [2, 4, 6])}
    if name == "P7":
        return {"base": _pair(host, [1, 5, 2, 6], [7, 3, 4])}
    if name == "Q8":
        return {"base": _pair(host, [1, 7, 3, 5], [2, 4, 8, 6])}
    if name == "P8":
        return {"base": _pair(host, [1, 5, 2, 6, 8], [7, 3, 4]),
                "flip": _pair(host, [8, 1, 5, 7], [4, 2, 6, 3])}
    if name == "P9":
        return {"base": _pair(host, [1, 8, 6, 3, 4], [5, 2, 7, 9]),
                "flip": _pair(host, [1, 8, 6, 3, 9, 5], [2, 7, 4])}
    if name == "P10":
        return {"base": _pair(host, [1, 8, 6, 3, 4], [5, 2, 10, 7, 9])}
    if name == "G8":
        return {"base": _pair(host, [1, 5, 3, 8, 7], [4, 2, 6]),
                "flip": _pair(host, [1, 2, 3, 8, 7], [4, 5, 6])}
    if name == "G9":
        return {"base": _pair(host, [1, 5, 3, 8, 7], [4, 2, 6, 9])}
    if name == "G10":
        return {"base": _pair(host, [1, 5, 3, 8, 7], [4, 2, 6, 10, 9]),
                "flip": _pair(host, [1, 2, 3, 8, 7], [4, 5, 6, 10, 9])}
    raise UnknownCatalogName(name)


FLIP_EDGE_PAIRS = {
    # edge pair whose single crossing change moves the odd pair to the flip class
    "P8": ((1, 5), (3, 4)),
    "P9": ((2, 7), (6, 8)),
    "G8": ((3, 8), (4, 6)),
    "G10": ((6, 10), (3, 8)),
}


def delta_wye_family(base: Graph, max_members: int = 16) -> list[Graph]:
    """Closure of `base` under triangle/star exchanges, up to isomorphism."""
    from .graphs import y_delta
    members: list[Graph] = [base]
    frontier = [base]
    while frontier:
        nxt = []
        for g in frontier:
            candidates = []
            for tri in itertools.combinations(sorted(g.vertices), 3):
                a, b, c = tri
                if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
                    candidates.append(delta_y(g, tri, max(g.vertices) + 1))
            for v in sorted(g.vertices):
                if g.degree(v) == 3:
                    ns = sorted(g.neighbors(v))
                    if all(not g.has_edge(x, y)
                           for x, y in itertools.combinations(ns, 2)):
                        candidates.append(y_delta(g, v))
            for cand in candidates:
                if all(is_isomorphic(cand, m) is None for m in members):
                    members.append(cand)
                    nxt.append(cand)
                    if len(members) > max_members:
                        raise LinksetError("family closure exceeded expected size")
        frontier = nxt
    return members


def check_catalog_labeling(name: str) -> dict:
    """Re-derive every fact the fixed labeling must satisfy.

    Returns a report dict; raises LinksetError on any failure.
    """
    g = catalog_graph(name)
    report = {"name": name, "vertices": g.n, "edges": len(g.edges)}

    for c in quoted_cycles(name):
        if not c.is_valid_in(g):
            raise LinksetError(f"{name}: quoted cycle {c} missing")
    report["quoted_cycles"] = "ok"

    for perm in quoted_generators(name):
        if not perm.is_automorphism_of(g):
            raise LinksetError(f"{name}: quoted generator {perm} is not an automorphism")
    report["quoted_generators"] = "ok"

    if name in PETERSEN_FAMILY:
        family = delta_wye_family(complete_graph(6))
        if len(family) != 7:
            raise LinksetError(f"triangle/star closure of K6 has {len(family)} members")
        if all(is_isomorphic(g, m) is None for m in family):
            raise LinksetError(f"{name}: not isomorphic to any family member")
        if len(g.edges) != 15:
            raise LinksetError(f"{name}: expected 15 edges, found {len(g.edges)}")
        report["family_member"] = "ok"

    if name in FLIP_EDGE_PAIRS:
        e, f = FLIP_EDGE_PAIRS[name]
        lam = catalog_lambda(witness_lambda_name(name))
        separating = [p for p in lam if p.separates(e, f)]
        expected = set(designated_pairs(name).values())
        if set(separating) != expected or len(separating) != 2:
            raise LinksetError(
                f"{name}: pairs separating {e},{f} are {separating}, expected {sorted(expected)}")
        report["separation_uniqueness"] = "ok"

    return report


# ---------------------------------------------------------------------------
# constructions for complete graphs


def _spanning_minor_map(gadget: Graph, jobs, n: int) -> tuple[Graph, "MinorMap"]:
    if jobs:
        subdivided, m = subdivide_edges(gadget, jobs)
    else:
        subdivided, m = gadget, MinorMap.identity(gadget)
    host = complete_graph(n)
    if subdivided.vertices != host.vertices:
        raise LinksetError(
            f"subdivided gadget has vertices {sorted(subdivided.vertices)}, want 1..{n}")
    return host, m.into_host(host)


def lambda_for_complete(p: int, q: int) -> tuple[Graph, LambdaSet, "MinorMap"]:
    """A small linked set of Hamiltonian (p,q)-pairs inside K_{p+q}.

    Supported shapes: (p>=5, q=3), (p>=3, q=4), and (p,q>=5).
    """
    p, q = max(p, q), min(p, q)
    n = p + q
    if q == 3 and p >= 5:
        gadget = catalog_graph("G8")
        jobs = [((7, 8), p - 5, 9)] if p > 5 else []
        lam_name = "L(G8)"
    elif (p, q) == (4, 3):
        gadget = catalog_graph("P7")
        jobs = []
        lam_name = None
    elif (p, q) == (4, 4):
        gadget = catalog_graph("Q8")
        jobs = []
        lam_name = None
    elif q == 4 and p >= 5:
        gadget = catalog_graph("G9")
        jobs = [((7, 8), p - 5, 10)] if p > 5 else []
        lam_name = "L(G9)"
    elif q >= 5:
        gadget = catalog_graph("G10")
        jobs = []
        next_label = 11
        if p > 5:
            jobs.append(((7, 8), p - 5, next_label))
            next_label += p - 5
        if q > 5:
            jobs.append(((9, 10), q - 5, next_label))
        lam_name = "L(G10)"
    else:
        raise ValueError(f"unsupported pair type ({p},{q})")

    host, m = _spanning_minor_map(gadget, jobs, n)
    if lam_name is not None:
        lam_minor = catalog_lambda(lam_name)
    else:
        lam_minor = gamma2(gadget, f"G2({'Q8' if (p, q) == (4, 4) else 'P7'})")
    pushed = tuple(psi_pair_map(m, pair) for pair in lam_minor)
    lam = LambdaSet(f"L(K{n})@{p},{q}", host, pushed)
    return host, lam, m


def lambda_prime_k10() -> tuple[Graph, LambdaSet, "MinorMap"]:
    """The six-element linked set of K10 pushed forward from P10."""
    p10 = catalog_graph("P10")
    host, m = _spanning_minor_map(p10, [], 10)
    pushed = tuple(psi_pair_map(m, pair) for pair in gamma2(p10))
    return host, LambdaSet("L'(K10)", host, pushed), m
