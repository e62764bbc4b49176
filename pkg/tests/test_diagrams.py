from fractions import Fraction

import pytest

from linkset.diagrams import (DegenerateDiagram, Diagram, flip_crossing,
                              linking_number, split_certify, validate_diagram)
from linkset.graphs import Cycle, CyclePair, Graph

TWO_TRIANGLES = Graph(range(1, 7),
                      [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])

PLACEMENT = {1: (0, 0), 2: (10, 0), 3: (0, 10),
             4: (-5, 6), 5: (5, -4), 6: (-5, -4)}


def _two_triangle_diagram(over_at_01, over_at_10):
    """Edge 4-5 cuts the corner of triangle 123 at vertex 1: crossings at
    (0,1) with edge 1-3 and at (1,0) with edge 1-2."""
    d = Diagram(TWO_TRIANGLES, PLACEMENT)
    crossings = d.crossings()
    assert len(crossings) == 2
    over = {}
    for c in crossings:
        if c.point == (Fraction(0), Fraction(1)):
            over[c.key] = over_at_01
        elif c.point == (Fraction(1), Fraction(0)):
            over[c.key] = over_at_10
        else:
            raise AssertionError(f"unexpected crossing at {c.point}")
    return d.with_over(over)


def hopf_diagram():
    return _two_triangle_diagram("4-5", "1-2")


def poke_diagram():
    return _two_triangle_diagram("4-5", "4-5")


PAIR = CyclePair(Cycle([1, 2, 3]), Cycle([4, 5, 6]), TWO_TRIANGLES)


def test_validate_counts_crossings():
    assert len(validate_diagram(hopf_diagram())) == 2


def test_validate_flags_missing_over():
    d = Diagram(TWO_TRIANGLES, PLACEMENT)
    with pytest.raises(DegenerateDiagram):
        validate_diagram(d)


def test_validate_rejects_vertex_on_strand():
    bad = dict(PLACEMENT)
    bad[4], bad[5] = (-5, 5), (5, -5)  # edge 4-5 passes through vertex 1
    d = Diagram(TWO_TRIANGLES, bad)
    with pytest.raises(DegenerateDiagram):
        d.crossings()


def test_validate_rejects_triple_point():
    g = Graph(range(1, 7), [(1, 2), (3, 4), (5, 6)])
    d = Diagram(g, {1: (-1, 0), 2: (1, 0), 3: (0, -1), 4: (0, 1),
                    5: (-1, -1), 6: (1, 1)})
    with pytest.raises(DegenerateDiagram):
        d.crossings()


def test_tree_has_no_crossings():
    g = Graph(range(1, 5), [(1, 2), (2, 3), (2, 4)])
    d = Diagram(g, {1: (0, 0), 2: (1, 0), 3: (2, 1), 4: (2, -1)})
    assert validate_diagram(d) == []


def test_hopf_linking_number():
    d = hopf_diagram()
    assert abs(linking_number(d, PAIR)) == 1


def test_poke_linking_number_zero():
    assert linking_number(poke_diagram(), PAIR) == 0


def test_flip_crossing_involution_and_delta():
    d = hopf_diagram()
    key = d.crossings()[0].key
    flipped = flip_crossing(d, key)
    assert abs(linking_number(d, PAIR) - linking_number(flipped, PAIR)) == 1
    assert flip_crossing(flipped, key).over == d.over
    with pytest.raises(KeyError):
        flip_crossing(d, "nonsense|key")


def test_split_certify_zero_crossings():
    far = dict(PLACEMENT)
    far[4], far[5], far[6] = (20, 20), (30, 20), (25, 30)
    d = Diagram(TWO_TRIANGLES, far, over={})
    cert = split_certify(d, PAIR)
    assert cert.verdict == "ZeroInterCrossings"
    assert cert.is_split


def test_split_certify_r2_pair():
    cert = split_certify(poke_diagram(), PAIR)
    assert cert.verdict == "R2Reduced"
    assert cert.steps == 1


def test_split_certify_hopf_unknown():
    cert = split_certify(hopf_diagram(), PAIR)
    assert cert.verdict == "Unknown"
    assert not cert.is_split


def test_split_certificates_imply_zero_linking():
    for make in (poke_diagram,):
        d = make()
        cert = split_certify(d, PAIR)
        if cert.is_split:
            assert linking_number(d, PAIR) == 0


def test_diagram_json_round_trip():
    d = hopf_diagram()
    data = d.to_json()
    back = Diagram.from_json(data)
    assert back.to_json() == data
    assert linking_number(back, PAIR) == linking_number(d, PAIR)
    assert split_certify(back, PAIR).verdict == split_certify(d, PAIR).verdict


def test_polyline_routes_and_self_touch_rejection():
    g = Graph((1, 2, 3, 4), [(1, 2), (3, 4)])
    # 3-4 pokes under 1-2 twice via a polyline detour
    d = Diagram(g,
                {1: (0, 0), 2: (10, 0), 3: (2, -2), 4: (8, -2)},
                routes={(3, 4): [(2, -2), (3, 2), (5, 2), (7, -2), (8, -2)]})
    crossings = d.crossings()
    assert len(crossings) == 2
    over = {c.key: "1-2" for c in crossings}
    d = d.with_over(over)
    validate_diagram(d)
