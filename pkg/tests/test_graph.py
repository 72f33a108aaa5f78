import pytest
from hypothesis import given, strategies as st

from coxfold.graph import (INF, ClosureOverflow, CoxeterGraph, GraphSpecError, Symmetry, SymmetryError,
                           connected_components, disjoint_union, format_spec, group_closure, parse_pair,
                           parse_spec, restrict_to_finite_orbits, trivial_group, validate_symmetry,
                           vertex_orbits)


def path(n, label=3):
    return CoxeterGraph.from_labels(range(1, n + 1), {(i, i + 1): label for i in range(1, n)})


def test_labels_default_to_two():
    g = CoxeterGraph.from_labels([1, 2, 3], {(1, 2): 4})
    assert g.label(1, 2) == 4 and g.label(2, 1) == 4
    assert g.label(1, 3) == 2
    assert g.label(2, 2) == 1
    assert g.neighbors(2) == (1,)


def test_bad_graphs():
    with pytest.raises(ValueError):
        CoxeterGraph.from_labels([1, 2], {(1, 3): 3})
    with pytest.raises(ValueError):
        CoxeterGraph.from_labels([1, 2], {(1, 2): 1})
    with pytest.raises(ValueError):
        CoxeterGraph.from_labels([1, 1], {})


def test_components_and_distances():
    g = disjoint_union(path(3), CoxeterGraph.from_labels([7, 8], {(7, 8): INF}))
    assert g.components() == [(1, 2, 3), (7, 8)]
    assert not g.is_connected()
    assert g.distances_from(1) == {1: 0, 2: 1, 3: 2}


def test_parse_spec_roundtrip():
    text = """
    # A3 with its flip
    vertices 1..3
    edge 1-2; edge 2-3
    symmetry g: (1 3)
    group: g
    """
    spec = parse_spec(text)
    assert spec.graph.edges == ((1, 2, 3), (2, 3, 3))
    assert spec.symmetries["g"](1) == 3
    again = parse_spec(format_spec(spec.graph, spec.symmetries, spec.group))
    assert again.graph == spec.graph and again.group == ("g",)


def test_parse_labels_and_infinite():
    spec = parse_spec("vertices 0, 1, 2\nedge 0-1 label inf\nedge 1-2 label 4\ninfinite 2")
    assert spec.graph.label(0, 1) == INF
    assert spec.infinite == (2,)
    assert spec.closure().infinite == frozenset({2})


@pytest.mark.parametrize("text, line, fragment", [
    ("vertices 1..3\nedge 1-4", 2, "unknown vertex 4"),
    ("vertices 1..2\nedge 1-2 label 3\nedge 2-1 label 4", 3, "asymmetric label"),
    ("vertices 1..2\nfrobnicate", 2, "cannot parse"),
    ("vertices 1..3\nedge 1-2\nsymmetry g: (1 3)", 3, "label violation at pair (1,2)"),
    ("edge 1-2", 1, "edge before vertices"),
])
def test_spec_errors(text, line, fragment):
    with pytest.raises(GraphSpecError) as err:
        parse_spec(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_symmetry_validation_reports_both_labels():
    g = CoxeterGraph.from_labels([1, 2, 3], {(1, 2): 4, (2, 3): 3})
    with pytest.raises(SymmetryError, match="m\\(1,2\\)=4"):
        validate_symmetry(g, {1: 3, 3: 1})
    with pytest.raises(SymmetryError):
        validate_symmetry(g, {1: 2})


def test_symmetry_arithmetic():
    a = Symmetry.from_dict({1: 2, 2: 3, 3: 1})
    b = Symmetry.from_dict({1: 2, 2: 1})
    assert (a * b)(1) == a(b(1))
    assert (a * a.inverse()).is_identity()
    assert a.order() == 3
    assert str(a) == "(1 2 3)"
    assert str(Symmetry.identity()) == "()"


def test_group_closure_and_orbits():
    g = path(5)
    G = group_closure(g, [Symmetry.from_dict({1: 5, 5: 1, 2: 4, 4: 2})])
    assert G.order() == 2 and G.elements[0].is_identity()
    part = vertex_orbits(G)
    assert [sorted(o) for o in part.orbits] == [[1, 5], [2, 4], [3]]
    with pytest.raises(ClosureOverflow):
        group_closure(g, [Symmetry.from_dict({1: 5, 5: 1, 2: 4, 4: 2})], cap=1)


def test_declared_infinite_vertices_are_dropped():
    g, G = parse_pair("vertices 1..4\nedge 1-2; edge 2-3; edge 3-4\ninfinite 4")
    sub, H = restrict_to_finite_orbits(g, G)
    assert sub.vertices == (1, 2, 3)
    assert H.is_trivial()


def test_component_stabilizers():
    u = disjoint_union(path(3), CoxeterGraph.from_labels([4, 5, 6], {(4, 5): 3, (5, 6): 3}))
    swap = Symmetry.from_dict({1: 4, 4: 1, 2: 5, 5: 2, 3: 6, 6: 3})
    flip = Symmetry.from_dict({1: 3, 3: 1})
    G = group_closure(u, [swap, flip])
    parts = connected_components(u, G)
    assert [p[0].vertices for p in parts] == [(1, 2, 3), (4, 5, 6)]
    # the stabilizer of each copy induces the flip on it
    assert all(p[1].order() == 2 for p in parts)


@st.composite
def path_symmetries(draw):
    n = draw(st.integers(2, 8))
    rev = {i: n + 1 - i for i in range(1, n + 1)}
    return n, draw(st.sampled_from([{}, rev]))


@given(path_symmetries())
def test_orbits_partition_vertices(data):
    n, perm = data
    G = group_closure(path(n), [Symmetry.from_dict(perm)])
    part = vertex_orbits(G)
    covered = sorted(v for o in part.orbits for v in o)
    assert covered == list(range(1, n + 1))
    for o in part.orbits:
        for h in G.elements:
            assert h.image(o) == o


@given(st.permutations(range(1, 6)))
def test_validate_accepts_exactly_automorphisms(perm):
    g = path(5)
    d = dict(zip(range(1, 6), perm))
    is_auto = all(g.label(s, t) == g.label(d[s], d[t]) for s in range(1, 6) for t in range(1, 6))
    if is_auto:
        validate_symmetry(g, d)
    else:
        with pytest.raises(SymmetryError):
            validate_symmetry(g, d)


def test_trivial_group():
    assert trivial_group(path(3)).is_trivial()
