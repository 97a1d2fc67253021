import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamembed.errors import DomainError
from hamembed.family import GddParams, build_gdd
from hamembed.multigraph import ColoredMultigraph

from .conftest import V


def test_single_loop_contributes_two():
    g = ColoredMultigraph(["v"], [("v", "v", 1)])
    assert g.degree("v") == 2
    assert g.loop_count("v") == 1


def test_isolated_vertex_has_degree_zero():
    g = ColoredMultigraph(["v", "w"], [])
    assert g.degree("v") == 0


def test_k22_degrees():
    g = build_gdd(GddParams(2, 2, 0, 1))
    assert all(g.degree(v) == 2 for v in g.vertices)


def test_unknown_vertex_rejected():
    with pytest.raises(DomainError):
        ColoredMultigraph(["v"], []).degree("x")


def test_multiplicity():
    g = ColoredMultigraph(["v", "w"], [("v", "w", 1), ("w", "v", 1)])
    assert g.multiplicity("v", "w") == 2
    with pytest.raises(DomainError):
        g.multiplicity("v", "v")
    k = build_gdd(GddParams(2, 2, 2, 1))
    assert k.multiplicity(V(1, 1), V(1, 2)) == 2
    assert k.multiplicity(V(1, 1), V(2, 2)) == 1


def test_color_class(k22_matchings):
    one = build_gdd(GddParams(2, 2, 0, 1))
    assert one.color_class(2).edges == ()
    assert set(one.color_class(2).vertices) == set(one.vertices)
    assert one.color_class(1) == one
    cls = k22_matchings.color_class(1)
    assert len(cls.edges) == 2 and len(cls.vertices) == 4


def test_components():
    assert len(ColoredMultigraph(range(5), []).components()) == 5
    cycle = ColoredMultigraph(range(4), [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert len(cycle.components()) == 1
    matching = ColoredMultigraph(range(4), [(0, 1, 1), (2, 3, 1)])
    assert sorted(map(sorted, matching.components())) == [[0, 1], [2, 3]]


@pytest.mark.parametrize("edges, expected", [
    ([], True),
    ([(0, 1, 1), (1, 2, 1)], True),
    ([(0, 1, 1), (1, 2, 1), (2, 0, 1)], False),
    ([(0, 1, 1), (0, 1, 1)], False),
    ([(0, 0, 1)], False),
    ([(0, 1, 1), (0, 2, 1), (0, 3, 1)], False),
])
def test_is_path_forest(edges, expected):
    assert ColoredMultigraph(range(4), edges).is_path_forest() is expected


@st.composite
def multigraphs(draw):
    n = draw(st.integers(1, 6))
    k = draw(st.integers(1, 3))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, k))
    return ColoredMultigraph(range(n), draw(st.lists(pairs, max_size=15)), k)


@given(multigraphs())
def test_degree_is_sum_of_color_degrees(g):
    for v in g.vertices:
        assert g.degree(v) == sum(g.degree(v, j) for j in g.colors())


@given(multigraphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * len(g.edges)


@given(multigraphs())
def test_path_forest_component_count(g):
    for j in g.colors():
        cls = g.color_class(j)
        if cls.is_path_forest():
            assert len(cls.components()) == len(g.vertices) - len(cls.edges)
