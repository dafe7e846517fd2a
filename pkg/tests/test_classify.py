import pytest

from conftest import chain_of
from simplepa import (
    DiagramType,
    EdgeKind,
    boundary_cycle,
    classify_1_face,
    classify_2_face,
    diagram_census,
    enumerate_chains,
    faces,
)


def test_classify_1_face_examples():
    m = chain_of({1, 0, 3}, {1, 0}, {1})
    assert classify_1_face({m, chain_of({1})}, 3) is EdgeKind.ALPHA
    assert classify_1_face({chain_of({1}), chain_of({1, 0, 3})}, 3) is EdgeKind.SIGMA


def test_classify_1_face_validation():
    with pytest.raises(ValueError):
        classify_1_face({chain_of({1})}, 3)  # wrong cardinality
    with pytest.raises(ValueError):
        classify_1_face({chain_of({0, 1}), chain_of({1, 2})}, 3)  # not nested


def test_edge_census_n3():
    kinds = [classify_1_face(e, 3) for e in faces(3, 1)]
    assert kinds.count(EdgeKind.SIGMA) == 60
    assert kinds.count(EdgeKind.ALPHA) == 120


def test_classify_2_face_explicit_shapes_n5():
    m = chain_of({0, 1, 2, 3, 4}, {0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0})
    f1 = frozenset([m, chain_of({0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0}), chain_of({0})])
    f2 = frozenset([m, chain_of({0, 1, 2, 3, 4}, {0, 1, 2, 3}), chain_of({0, 1}, {0})])
    f3 = frozenset([m, chain_of({0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0}), chain_of({0, 1}, {0})])
    f4 = frozenset([chain_of({0, 1, 2, 3, 4}), chain_of({0, 1, 2}, {0, 1}, {0}), chain_of({0})])
    f5 = frozenset([chain_of({0, 1, 2, 3, 4}), chain_of({0, 1, 2}), chain_of({0})])
    f6 = frozenset([chain_of({0, 1, 2, 3, 4}), chain_of({0, 1}, {0}), chain_of({0})])
    assert classify_2_face(f1, 5) is DiagramType.PENTAGON
    assert classify_2_face(f2, 5) is DiagramType.QUAD_FUNCTORIAL
    assert classify_2_face(f3, 5) is DiagramType.QUAD_NATURAL
    assert classify_2_face(f4, 5) is DiagramType.QUAD_SIGMA
    assert classify_2_face(f5, 5) is DiagramType.OCTAGON
    assert classify_2_face(f6, 5) is DiagramType.DODECAGON


def test_classify_2_face_by_chain_shape_n3():
    # at n=3 the 2-faces are the facets themselves, one singleton per chain
    for c in enumerate_chains(3):
        kind = classify_2_face(frozenset([c]), 3)
        if c.num_sets == 3:
            assert kind is DiagramType.PENTAGON
        elif c.num_sets == 2:
            assert kind is DiagramType.QUAD_SIGMA
        elif len(c.core) == 2:
            assert kind is DiagramType.OCTAGON
        else:
            assert kind is DiagramType.DODECAGON


def test_classify_2_face_validation():
    with pytest.raises(ValueError):
        classify_2_face(frozenset(), 2)  # the body of the 12-gon
    with pytest.raises(ValueError):
        classify_2_face(frozenset([chain_of({0})]), 2)  # wrong cardinality
    with pytest.raises(ValueError):
        classify_2_face(frozenset([chain_of({0, 1}), chain_of({1, 2})]), 4)  # not nested
    with pytest.raises(ValueError):
        classify_2_face(frozenset([chain_of({0})]), 1)


def test_boundary_cycle_lengths_match_types_n3():
    for f in faces(3, 2):
        kind = classify_2_face(f, 3)
        cycle = boundary_cycle(f, 3)
        assert len(cycle) == kind.cycle_length
        assert len(set(cycle)) == len(cycle)
        for i in range(len(cycle)):
            assert len(cycle[i] & cycle[(i + 1) % len(cycle)]) == 2


def test_boundary_cycle_edge_patterns_n3():
    # pentagons are bounded by rotations only; the larger polygons alternate
    patterns = {}
    for f in faces(3, 2):
        kind = classify_2_face(f, 3)
        cycle = boundary_cycle(f, 3)
        edges = [
            classify_1_face(cycle[i] & cycle[(i + 1) % len(cycle)], 3)
            for i in range(len(cycle))
        ]
        patterns.setdefault(kind, set()).add("".join(e.value[0] for e in edges))
    assert patterns[DiagramType.PENTAGON] == {"aaaaa"}
    assert patterns[DiagramType.QUAD_SIGMA] == {"sasa"}
    assert patterns[DiagramType.OCTAGON] == {"sasasasa"}
    assert patterns[DiagramType.DODECAGON] == {"sasasasasasa"}


def test_boundary_cycle_rejects_non_2_faces():
    with pytest.raises(ValueError):
        boundary_cycle(frozenset([chain_of({0}), chain_of({0, 1, 2}, {0, 1})]), 3)


def test_diagram_census_n2_reports_the_body():
    census = diagram_census(2)
    assert census.counts == {}
    assert census.body_faces == 1
    assert census.total == 0


def test_diagram_census_n3():
    census = diagram_census(3)
    assert census.counts == {
        DiagramType.PENTAGON: 24,
        DiagramType.QUAD_SIGMA: 24,
        DiagramType.OCTAGON: 6,
        DiagramType.DODECAGON: 8,
    }
    assert census.body_faces == 0
    assert census.total == len(faces(3, 2))


def test_diagram_census_validation():
    with pytest.raises(ValueError):
        diagram_census(1)
