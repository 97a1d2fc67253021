from collections import Counter
from itertools import combinations

import random

import pytest
from hypothesis import given, settings, strategies as st

from hamembed.errors import DomainError
from hamembed.euler import euler_circuit, two_factorize
from hamembed.multigraph import ColoredMultigraph

from .conftest import random_closed_walk_graph, random_regular_even_graph


def check_circuit(g, circ):
    assert sorted(circ.edges) == list(range(len(g.edges)))
    assert circ.vertices[0] == circ.vertices[-1]
    for i, e in enumerate(circ.edges):
        assert {circ.vertices[i], circ.vertices[i + 1]} == {g.edges[e].u, g.edges[e].v}


def test_cycle():
    g = ColoredMultigraph(range(4), [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    circ = euler_circuit(g)
    check_circuit(g, circ)
    assert len(circ.edges) == 4


def test_single_loop():
    g = ColoredMultigraph(["v"], [("v", "v", 1)])
    circ = euler_circuit(g)
    assert circ.vertices == ("v", "v") and circ.edges == (0,)


def test_double_edge():
    g = ColoredMultigraph(["u", "v"], [("u", "v", 1), ("u", "v", 1)])
    circ = euler_circuit(g, start="u")
    assert circ.vertices == ("u", "v", "u")


def test_euler_rejects_odd_and_disconnected():
    with pytest.raises(DomainError):
        euler_circuit(ColoredMultigraph(range(2), [(0, 1, 1)]))
    with pytest.raises(DomainError):
        euler_circuit(ColoredMultigraph(range(4), [(0, 1, 1), (0, 1, 1), (2, 3, 1), (2, 3, 1)]))


def is_two_factor(g, factor, support):
    deg = Counter()
    for i in factor:
        deg[g.edges[i].u] += 1
        deg[g.edges[i].v] += 1
    return set(deg) == set(support) and all(d == 2 for d in deg.values())


def test_two_regular_graph_is_one_factor():
    g = ColoredMultigraph(range(3), [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    assert two_factorize(g).factors == ((0, 1, 2),)


def test_double_triangle():
    edges = [(x, y, 1) for x, y in ((0, 1), (1, 2), (2, 0))] * 2
    g = ColoredMultigraph(range(3), edges)
    factors = two_factorize(g).factors
    assert len(factors) == 2
    assert sorted(i for f in factors for i in f) == list(range(6))
    assert all(is_two_factor(g, f, range(3)) for f in factors)
    # brute force: the only 2-factors of the doubled triangle are triangles
    triangles = [f for f in combinations(range(6), 3) if is_two_factor(g, f, range(3))]
    assert all(tuple(sorted(f)) in triangles for f in factors)


def test_empty_graph():
    assert two_factorize(ColoredMultigraph(range(3), [])).factors == ()


def test_loops_form_factors():
    g = ColoredMultigraph(["v"], [("v", "v", 1), ("v", "v", 1)])
    assert len(two_factorize(g).factors) == 2


def test_two_factorize_rejects_odd():
    with pytest.raises(DomainError):
        two_factorize(ColoredMultigraph(range(2), [(0, 1, 1)]))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.integers(1, 12))
def test_euler_property(seed, n, length):
    g = random_closed_walk_graph(random.Random(seed), n, length)
    check_circuit(g, euler_circuit(g))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.integers(1, 3))
def test_two_factor_property(seed, n, t):
    g = random_regular_even_graph(random.Random(seed), n, t)
    factors = two_factorize(g).factors
    assert sorted(i for f in factors for i in f) == list(range(len(g.edges)))
    comps = [set(c) for c in g.components()]
    for f in factors:
        touched = {x for i in f for x in (g.edges[i].u, g.edges[i].v)}
        # each factor spans exactly one component of the support
        assert touched in comps
        assert is_two_factor(g, f, touched)
