from math import comb

import pytest

from hamembed.amalgamation import (HUB, build_g1, build_g3, extend_coloring_a, hub_copy,
                                   reabsorb_extra_color)
from hamembed.conditions import evaluate
from hamembed.detachment import DetachmentPlan, eta_detach
from hamembed.errors import ConstructionError
from hamembed.family import GddParams, build_gdd
from hamembed.multigraph import UNCOLORED

from .conftest import recolor


def test_g1_unit_r(k22_params, k22_matchings):
    st = build_g1(k22_matchings, k22_params)
    g1 = st.graph
    assert g1.loop_count(HUB) == 0
    for v in k22_matchings.vertices:
        assert g1.multiplicity(v, HUB) == 2
        assert g1.degree(v) == 4
    assert st.stage == "G1" and st.k == 2


def test_g1_loops_for_two_new_parts():
    params = GddParams(2, 1, 2, 1, r=2)
    g = recolor(build_gdd(params), [1, 2], 3)
    g1 = build_g1(g, params).graph
    assert g1.loop_count(HUB) == 4
    assert all(e.color == UNCOLORED for e in g1.edges if HUB in (e.u, e.v))


def test_extend_coloring_unit_r(k22_params, k22_matchings):
    v = evaluate(k22_matchings, k22_params)
    st = extend_coloring_a(build_g1(k22_matchings, k22_params), k22_params, v.stats)
    assert st.b == (4, 4, 0)
    assert st.graph.degree(HUB, 3) == 0
    for v in k22_matchings.vertices:
        assert all(st.graph.degree(v, j) == 2 for j in (1, 2))


def test_extend_requires_g1(k22_params, k22_matchings):
    v = evaluate(k22_matchings, k22_params)
    st = extend_coloring_a(build_g1(k22_matchings, k22_params), k22_params, v.stats)
    with pytest.raises(ConstructionError):
        extend_coloring_a(st, k22_params, v.stats)


def run_to_g3(g, params):
    v = evaluate(g, params)
    st = extend_coloring_a(build_g1(g, params), params, v.stats,
                           boundary=v.regime.tag.value == "Boundary")
    hubs = [hub_copy(params, i) for i in range(1, params.r + 1)]
    g2 = eta_detach(st.graph, DetachmentPlan({HUB: params.r}, {HUB: hubs}))
    st = st.__class__(g2, "G2", st.k, st.b, (), st.boundary)
    st = reabsorb_extra_color(st, params)
    return build_g3(st, params)


def test_g3_budget(k22_params, k22_matchings):
    st = run_to_g3(k22_matchings, k22_params)
    x = hub_copy(k22_params, 1)
    assert st.stage == "G3"
    assert st.graph.loop_count(x) == k22_params.lam * comb(2, 2) == 0
    assert all(st.graph.degree(x, j) == 4 for j in (1, 2))


def test_g3_boundary(boundary_params, boundary_instance):
    st = run_to_g3(boundary_instance, boundary_params)
    x = hub_copy(boundary_params, 1)
    assert st.graph.loop_count(x) == 2
    assert all(st.graph.degree(x, j) == 4 for j in (1, 2))
    # detaching u_1 into two vertices: the pure pair gets lambda, cross pairs mu
    from hamembed.amalgamation import new_vertex
    names = [new_vertex(boundary_params, 1, s) for s in (1, 2)]
    g4 = eta_detach(st.graph, DetachmentPlan({x: 2}, {x: names}))
    assert g4.multiplicity(*names) == 2
    for v in boundary_instance.vertices:
        assert all(g4.multiplicity(v, y) == 1 for y in names)


def test_multi_part_reabsorption():
    params = GddParams(2, 1, 2, 1, r=2)
    # k = 3; the two parallel pure edges get colors 1 and 2, class 3 is empty
    g = recolor(build_gdd(params), [1, 2], 3)
    st = run_to_g3(g, params)
    for i in (1, 2):
        x = hub_copy(params, i)
        assert all(st.graph.degree(x, j) == 4 for j in (1, 2, 3))
