import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkset.graphs import (Cycle, CyclePair, Graph, SizeBoundExceeded,
                            VertexPermutation, apply_permutation, complete_graph,
                            connectivity_report, contract_edge, delta_y,
                            enumerate_cycles, enumerate_pairs, is_isomorphic,
                            automorphism_group, psi_pair_map, subdivide_edge,
                            subgroup_closure, vertex_splittings, y_delta)


def test_complete_graph_edge_counts():
    assert len(complete_graph(6).edges) == 15
    assert len(complete_graph(1).edges) == 0
    assert len(complete_graph(10).edges) == 45


def test_complete_graph_rejects_zero():
    with pytest.raises(ValueError):
        complete_graph(0)


def test_cycle_canonical_form():
    assert Cycle([1, 8, 7, 2, 3]).vertices == (1, 3, 2, 7, 8)
    assert Cycle([2, 3, 1]).vertices == (1, 2, 3)
    # rotation & reflection invariance
    assert Cycle([3, 1, 2]) == Cycle([1, 3, 2]) == Cycle([2, 1, 3])


@given(st.lists(st.integers(1, 30), min_size=3, max_size=8, unique=True))
def test_cycle_canonicalization_idempotent(seq):
    c = Cycle(seq)
    assert Cycle(c.vertices).vertices == c.vertices
    assert Cycle(tuple(reversed(seq))).vertices == c.vertices
    # any rotation gives the same canonical form
    rot = tuple(seq[2:]) + tuple(seq[:2])
    assert Cycle(rot).vertices == c.vertices


def test_pair_orientation_and_order():
    k8 = complete_graph(8)
    p = CyclePair(Cycle([4, 5, 6]), Cycle([1, 2, 3, 8, 7]), k8)
    assert p.type_pq == (5, 3)
    assert len(p.first) == 5
    assert p.hamiltonian
    q = CyclePair(Cycle([4, 5, 6]), Cycle([1, 2, 3]), complete_graph(6))
    assert q.first.vertices == (1, 2, 3)  # lexicographically smaller first


def test_pair_rejects_shared_vertices():
    with pytest.raises(ValueError):
        CyclePair(Cycle([1, 2, 3]), Cycle([3, 4, 5]))


def test_enumerate_cycles_counts():
    k6 = complete_graph(6)
    assert len(enumerate_cycles(k6, 3)) == 20  # C(6,3)
    # sum over k of C(6,k) * (k-1)!/2
    assert len(enumerate_cycles(k6)) == 197


def test_enumerate_pairs_counts():
    k6 = complete_graph(6)
    assert len(enumerate_pairs(k6, (3, 3))) == 10
    assert len(enumerate_pairs(k6)) == 10
    k7 = complete_graph(7)
    assert len(enumerate_pairs(k7, (4, 3), hamiltonian_only=True)) == 105


def test_enumeration_bound():
    with pytest.raises(SizeBoundExceeded):
        enumerate_pairs(complete_graph(13))


def test_automorphism_group_k6():
    assert len(automorphism_group(complete_graph(6))) == 720


def test_automorphism_group_brute_force_oracle():
    # naive filter over all permutations for a 6-vertex non-complete graph
    g = delta_y(complete_graph(5), (1, 2, 3), 6)
    expected = 0
    verts = sorted(g.vertices)
    for perm in itertools.permutations(verts):
        mapping = dict(zip(verts, perm))
        if all((min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) in g.edges
               for u, v in g.edges):
            expected += 1
    assert len(automorphism_group(g)) == expected


def test_apply_permutation_examples():
    k8 = complete_graph(8)
    pair = CyclePair(Cycle([1, 2, 3, 8, 7]), Cycle([4, 5, 6]), k8)
    ident = VertexPermutation.identity(range(1, 9))
    assert apply_permutation(ident, pair, k8) == pair
    rot = VertexPermutation.from_cycles(range(1, 9), (1, 2, 3))
    image = apply_permutation(rot, pair, k8)
    assert image == CyclePair(Cycle([1, 8, 7, 2, 3]), Cycle([4, 5, 6]), k8)


def test_automorphism_action_permutes_pair_set():
    k6 = complete_graph(6)
    pairs = set(enumerate_pairs(k6))
    sigma = VertexPermutation.from_cycles(range(1, 7), (1, 4), (2, 5, 3))
    image = {apply_permutation(sigma, p, k6) for p in pairs}
    assert image == pairs


def test_subdivide_and_contract_round_trip():
    from linkset.catalog import catalog_graph
    g8 = catalog_graph("G8")
    bigger, m = subdivide_edge(g8, (7, 8), 1, 9)
    assert bigger.n == 9 and len(bigger.edges) == 23
    assert m.expansion[(7, 8)] == (7, 9, 8)
    collapsed = contract_edge(bigger, (7, 9))
    assert is_isomorphic(collapsed, g8) is not None


def test_subdivide_rejects_bad_input():
    g = complete_graph(4)
    with pytest.raises(ValueError):
        subdivide_edge(g, (1, 2), 0, 9)
    with pytest.raises(ValueError):
        subdivide_edge(g, (1, 2), 1, 4)  # label collision


def test_contract_edge_examples():
    from linkset.catalog import catalog_graph
    g8 = catalog_graph("G8")
    c = contract_edge(g8, (7, 8))
    assert c.n == 7 and len(c.edges) == 18
    assert c.neighbors(7) == frozenset({1, 2, 3})
    k5ish = contract_edge(complete_graph(6), (1, 2))
    assert is_isomorphic(k5ish, complete_graph(5)) is not None


def test_delta_y_round_trip_and_edge_count():
    k6 = complete_graph(6)
    q7 = delta_y(k6, (1, 2, 3), 7)
    assert len(q7.edges) == 15 and q7.n == 7
    assert y_delta(q7, 7) == k6
    chain = delta_y(delta_y(k6, (1, 2, 3), 7), (4, 5, 6), 8)
    assert len(chain.edges) == 15 and chain.n == 8


def test_is_isomorphic_examples():
    k6 = complete_graph(6)
    relabeled = Graph(range(11, 17),
                      [(u + 10, v + 10) for u, v in k6.edges])
    assert is_isomorphic(k6, relabeled) is not None
    from linkset.catalog import catalog_graph
    q7, p7 = catalog_graph("Q7"), catalog_graph("P7")
    assert sorted(q7.degree(v) for v in q7.vertices) == [3, 4, 4, 4, 5, 5, 5]
    assert sorted(p7.degree(v) for v in p7.vertices) == [4, 4, 4, 4, 4, 4, 6]
    assert is_isomorphic(q7, p7) is None


def test_catalog_p10_is_petersen():
    from linkset.catalog import catalog_graph
    # standard Petersen graph: 2-subsets of {1..5}, disjointness adjacency
    subsets = list(itertools.combinations(range(1, 6), 2))
    index = {s: i + 1 for i, s in enumerate(subsets)}
    edges = [(index[a], index[b]) for a, b in itertools.combinations(subsets, 2)
             if not set(a) & set(b)]
    petersen = Graph(range(1, 11), edges)
    assert is_isomorphic(catalog_graph("P10"), petersen) is not None
    assert len(automorphism_group(catalog_graph("P10"))) == 120


def test_vertex_splittings_counts():
    k6 = complete_graph(6)
    splits = vertex_splittings(k6, 1)  # degree 5
    nontrivial = [s for s in splits if not s.trivial]
    assert len(nontrivial) == 10  # C(5,2) balanced 2+3 partitions
    g = Graph(range(1, 6), [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (2, 5), (4, 5)])
    splits3 = vertex_splittings(g, 1)  # degree 3
    assert len(splits3) == 3 and all(s.trivial for s in splits3)
    g4 = Graph(range(1, 6), [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (4, 5),
                             (3, 4), (2, 5)])
    nontrivial4 = [s for s in vertex_splittings(g4, 1) if not s.trivial]
    assert len(nontrivial4) == 3  # 2+2 partitions of a degree-4 fan


def test_connectivity_report():
    assert connectivity_report(complete_graph(6)) == (1, [])
    two_triangles = Graph(range(1, 7),
                          [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert connectivity_report(two_triangles) == (2, [])
    bridge = Graph(range(1, 7),
                   [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    assert connectivity_report(bridge) == (1, [(3, 4)])
    from linkset.catalog import catalog_graph
    assert connectivity_report(catalog_graph("P10")) == (1, [])


def test_psi_pair_map_examples():
    from linkset.catalog import catalog_graph, catalog_lambda
    g8 = catalog_graph("G8")
    bigger, m = subdivide_edge(g8, (7, 8), 1, 9)
    pair = CyclePair(Cycle([1, 2, 3, 8, 7]), Cycle([4, 5, 6]), g8)
    image = psi_pair_map(m, pair)
    assert image == CyclePair(Cycle([1, 2, 3, 8, 9, 7]), Cycle([4, 5, 6]), bigger)
    # injectivity across a full pair set
    lam = catalog_lambda("L(G10)")
    g10 = lam.host
    bigger10, m10 = subdivide_edge(g10, (9, 10), 2, 11)
    images = {psi_pair_map(m10, p) for p in lam}
    assert len(images) == 18


def test_subgroup_closure_order():
    gens = [VertexPermutation.from_cycles(range(1, 7), (1, 2, 3)),
            VertexPermutation.from_cycles(range(1, 7), (4, 5, 6))]
    assert len(subgroup_closure(gens, range(1, 7))) == 9


@settings(max_examples=30)
@given(st.integers(4, 7), st.data())
def test_random_automorphism_preserves_pairs(n, data):
    base = complete_graph(n)
    # random subgraph keeping it interesting
    removable = sorted(base.edges)
    keep = data.draw(st.sets(st.sampled_from(removable),
                             min_size=len(removable) - 3, max_size=len(removable)))
    g = Graph(base.vertices, keep)
    pairs = set(enumerate_pairs(g))
    for perm in automorphism_group(g)[:5]:
        assert {apply_permutation(perm, p, g) for p in pairs} == pairs
