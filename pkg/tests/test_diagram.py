import dataclasses

import pytest

from torusfill.diagram import (BasePoint, Edge, LagrangianDiagram, build_band, build_final_unknot,
                               build_torus_2n)
from torusfill.errors import DiagramError, UsageError


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_torus_counts(n):
    d = build_torus_2n(n)
    assert len(d.crossings) == n + 2
    assert len(d.edges) == 2 * (n + 2)
    # bigons between the b's, the top and bottom regions, two kink loops
    assert len(d.bounded_faces()) == n + 3
    assert len(d.components) == 1
    assert d.euler_characteristic() == 2


def test_trefoil_has_six_bounded_faces():
    assert len(build_torus_2n(3).bounded_faces()) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_final_unlink(n):
    d = build_final_unknot(n)
    assert [c.label for c in d.crossings] == ["a1", "a2"]
    assert len(d.components) == 2
    assert d.graph_pieces() == 2
    assert len(d.bounded_faces()) == 4
    assert d.euler_characteristic() == 3
    assert d.ctx.names == ("s0",) + tuple(f"s{k}" for k in range(1, n + 1))


def test_partial_pinch_keeps_labels():
    d = build_band(5, [2, 4])
    assert [c.label for c in d.crossings] == ["b1", "b3", "b5", "a1", "a2"]
    assert d.ctx.names == ("s0", "s2", "s4")
    assert len(d.components) == 1


def test_positive_quadrants_are_opposite():
    for c in build_torus_2n(5).crossings:
        p, q = sorted(c.positive)
        assert q - p == 2
        assert c.quadrant_sign(p) == c.quadrant_sign(q) == 1
        assert c.quadrant_sign(p + 1) == c.quadrant_sign(q + 1) == -1


def test_every_quadrant_is_a_corner_of_exactly_one_face():
    d = build_torus_2n(5)
    corners = [cq for f in d.faces for cq in f.corners]
    assert sorted(corners) == sorted((c, q) for c in range(len(d.crossings)) for q in range(4))


def test_even_n_refused():
    with pytest.raises(UsageError):
        build_torus_2n(4)
    with pytest.raises(UsageError):
        build_band(3, [5])


def _rebuild(d, edges):
    return LagrangianDiagram(d.name, d.crossings, tuple(edges), d.ctx, d.outer_quadrants)


def test_reversed_edge_rejected():
    d = build_torus_2n(3)
    edges = list(d.edges)
    e = edges[3]
    edges[3] = Edge(e.head, e.tail, e.base_points)
    with pytest.raises(DiagramError):
        _rebuild(d, edges)


def test_missing_base_point_rejected():
    d = build_torus_2n(3)
    edges = [dataclasses.replace(e, base_points=()) for e in d.edges]
    with pytest.raises(DiagramError):
        _rebuild(d, edges)


def test_malformed_base_point_rejected():
    d = build_torus_2n(3)
    edges = list(d.edges)
    edges[0] = dataclasses.replace(edges[0], base_points=(BasePoint(0, 2),))
    with pytest.raises(DiagramError):
        _rebuild(d, edges)


def test_json_lists_faces():
    data = build_torus_2n(3).to_json()
    assert [c["label"] for c in data["crossings"]] == ["b1", "b2", "b3", "a1", "a2"]
    assert sum(f["bounded"] for f in data["faces"]) == 6
