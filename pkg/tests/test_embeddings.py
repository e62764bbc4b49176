import math

import pytest

from linkset.diagrams import linking_number, split_certify, validate_diagram
from linkset.embeddings import (LinearEmbedding, NonGenericDirection,
                                direction_sequence, first_generic_projection,
                                linking_number_fast, linking_number_linear,
                                project_to_diagram, random_linear_embedding)
from linkset.graphs import Cycle, CyclePair, Graph, complete_graph

TWO_TRIANGLES = Graph(range(1, 7),
                      [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
PAIR = CyclePair(Cycle([1, 2, 3]), Cycle([4, 5, 6]), TWO_TRIANGLES)


def gauss_linking_integral(emb, pair, steps=60):
    """Numerical Gauss double integral; independent of the crossing code.

    Accuracy is far better than 1/2 for well-separated polygons, so the
    rounded value is an independent oracle for the exact computation.
    """
    def polygon(cycle):
        pts = [emb.coordinates[v] for v in cycle.vertices]
        return pts

    def segments(pts):
        n = len(pts)
        return [(pts[i], pts[(i + 1) % n]) for i in range(n)]

    total = 0.0
    for a0, a1 in segments(polygon(pair.first)):
        for b0, b1 in segments(polygon(pair.second)):
            for i in range(steps):
                s = (i + 0.5) / steps
                ax = [a0[k] + s * (a1[k] - a0[k]) for k in range(3)]
                da = [(a1[k] - a0[k]) / steps for k in range(3)]
                for j in range(steps):
                    t = (j + 0.5) / steps
                    bx = [b0[k] + t * (b1[k] - b0[k]) for k in range(3)]
                    db = [(b1[k] - b0[k]) / steps for k in range(3)]
                    r = [ax[k] - bx[k] for k in range(3)]
                    rn = math.sqrt(sum(x * x for x in r)) ** 3
                    cx = (da[1] * db[2] - da[2] * db[1]) * r[0] \
                        + (da[2] * db[0] - da[0] * db[2]) * r[1] \
                        + (da[0] * db[1] - da[1] * db[0]) * r[2]
                    total += cx / rn
    return total / (4 * math.pi)


SPLIT_EMB = LinearEmbedding(TWO_TRIANGLES, {
    1: (0, 0, 0), 2: (10, 0, 0), 3: (0, 10, 0),
    4: (100, 100, 1), 5: (110, 100, 2), 6: (100, 110, 3)})

LINKED_EMB = LinearEmbedding(TWO_TRIANGLES, {
    1: (0, 0, 0), 2: (10, 0, 0), 3: (0, 10, 0),
    4: (3, 3, -5), 5: (3, 3, 5), 6: (20, 20, 1)})


def test_split_position_zero():
    SPLIT_EMB.check_general_position()
    assert linking_number_linear(SPLIT_EMB, PAIR) == 0
    assert linking_number_fast(SPLIT_EMB, PAIR) == 0


def test_interlocked_triangles_hopf():
    from linkset.embeddings import linking_number_value
    LINKED_EMB.check_general_position()
    lk = linking_number_linear(LINKED_EMB, PAIR)
    assert abs(lk) == 1
    # the z-direction degenerates on the vertical edge 4-5; the value
    # wrapper must fall back to the direction sequence
    with pytest.raises(NonGenericDirection):
        linking_number_fast(LINKED_EMB, PAIR)
    assert linking_number_value(LINKED_EMB, PAIR) == lk


def test_gauss_integral_oracle():
    for emb, expected in ((SPLIT_EMB, 0), (LINKED_EMB, None)):
        approx = gauss_linking_integral(emb, PAIR)
        exact = linking_number_linear(emb, PAIR)
        assert round(approx) == exact
        if expected is not None:
            assert exact == expected


def test_random_embedding_deterministic():
    g = complete_graph(6)
    e1 = random_linear_embedding(g, 42)
    e2 = random_linear_embedding(g, 42)
    assert e1.coordinates == e2.coordinates
    e3 = random_linear_embedding(g, 43)
    assert e3.coordinates != e1.coordinates
    e1.check_general_position()


def test_projection_direction_invariance():
    g = complete_graph(6)
    pairs = None
    from linkset.graphs import enumerate_pairs
    pairs = enumerate_pairs(g, (3, 3))
    for seed in range(8):
        emb = random_linear_embedding(g, seed)
        d1 = first_generic_projection(emb)
        d2 = first_generic_projection(emb, skip=1)
        for p in pairs:
            assert linking_number(d1, p) == linking_number(d2, p)


def test_fast_path_agrees_with_full_pipeline():
    g = complete_graph(6)
    from linkset.graphs import enumerate_pairs
    pairs = enumerate_pairs(g, (3, 3))
    for seed in range(10):
        emb = random_linear_embedding(g, seed)
        d = project_to_diagram(emb, (0, 0, 1))
        for p in pairs:
            assert linking_number_fast(emb, p) == linking_number(d, p)


def test_planar_embedding_projects_flat():
    g = Graph(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)])
    emb = LinearEmbedding(g, {1: (0, 0, 0), 2: (10, 0, 0),
                              3: (10, 10, 0), 4: (0, 10, 0)})
    d = project_to_diagram(emb, (0, 0, 1))
    assert validate_diagram(d) == []


def test_direction_parallel_to_edge_rejected():
    g = Graph((1, 2, 3), [(1, 2), (2, 3), (1, 3)])
    emb = LinearEmbedding(g, {1: (0, 0, 0), 2: (0, 0, 10), 3: (5, 7, 3)})
    with pytest.raises(NonGenericDirection):
        project_to_diagram(emb, (0, 0, 1))


def test_projected_split_certificate_soundness():
    # whenever a projected diagram certifies a pair split, its lk vanishes
    g = complete_graph(6)
    from linkset.graphs import enumerate_pairs
    pairs = enumerate_pairs(g, (3, 3))
    for seed in range(6):
        emb = random_linear_embedding(g, seed)
        d = first_generic_projection(emb)
        for p in pairs:
            cert = split_certify(d, p)
            if cert.is_split:
                assert linking_number(d, p) == 0
