import pytest

from hamembed.family import GddParams, build_gdd
from hamembed.multigraph import ColoredMultigraph, VertexId


def V(part, slot):
    return VertexId(part, slot)


def recolor(base, colors, k):
    return base.replace_edges([(e.u, e.v, c) for e, c in zip(base.edges, colors)], num_colors=k)


@pytest.fixture
def k22_params():
    return GddParams(a=2, p=2, lam=0, mu=1, r=1)


@pytest.fixture
def k22_matchings(k22_params):
    # build order: p1.v1-p2.v1, p1.v1-p2.v2, p1.v2-p2.v1, p1.v2-p2.v2
    return recolor(build_gdd(k22_params), [1, 2, 2, 1], 2)


@pytest.fixture
def boundary_params():
    return GddParams(a=2, p=1, lam=2, mu=1, r=1)


@pytest.fixture
def boundary_instance(boundary_params):
    return recolor(build_gdd(boundary_params), [1, 2], 2)


def random_closed_walk_graph(rng, n, length):
    """Connected even multigraph: a single closed walk (loops allowed)."""
    walk = [rng.randrange(n) for _ in range(length)]
    edges = [(x, y, 1) for x, y in zip(walk, walk[1:] + walk[:1])]
    return ColoredMultigraph(sorted(set(walk)), edges, 1)


def random_regular_even_graph(rng, n, factors):
    """Union of random spanning 2-regular graphs, each read off a permutation's cycles."""
    edges = []
    for _ in range(factors):
        perm = list(range(n))
        rng.shuffle(perm)
        edges.extend((x, perm[x], 1) for x in range(n))
    return ColoredMultigraph(range(n), edges, 1)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
