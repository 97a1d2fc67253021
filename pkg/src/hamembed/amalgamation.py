"""Intermediate graphs of the embedding construction.

Stage G1 adds one hub vertex ``u`` standing in for all r*a new vertices;
stage G2 is its detachment into ``u_1..u_r`` (one per new part); stage G3
adds the pure edges of each new part as loops on ``u_i`` before the final
detachment into single vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb

from .conditions import MAIN_III, EQ2, BND_IV, ClassStats
from .errors import ConstructionError, ContractViolation
from .euler import two_factorize
from .family import GddParams
from .multigraph import ADDED, UNCOLORED, ColoredMultigraph, VertexId

HUB = VertexId(0, 0, ADDED)


def hub_copy(params: GddParams, i: int) -> VertexId:
    """``u_i``: stands for the whole i-th new part."""
    return VertexId(params.p + i, 0, ADDED)


def new_vertex(params: GddParams, i: int, s: int) -> VertexId:
    """``u_is``: slot s of the i-th new part."""
    return VertexId(params.p + i, s, ADDED)


@dataclass(frozen=True)
class AmalgamationState:
    graph: ColoredMultigraph
    stage: str  # "G1", "G2" or "G3"
    k: int
    b: tuple = ()        # b[j-1]: color-j degree of u divided by r (j = 1..k+1)
    b_prime: tuple = ()  # b'[j-1]: color-j degree of each u_i after reabsorbing k+1
    boundary: bool = False

    @property
    def extra_color(self) -> int:
        return self.k + 1


def build_g1(g: ColoredMultigraph, params: GddParams) -> AmalgamationState:
    """Add hub u with mu*a^2*C(r,2) loops and mu*a*r uncolored edges to every vertex."""
    r, a, mu = params.r, params.a, params.mu
    k = g.num_colors
    edges = list(g.edges)
    for v in g.vertices:
        edges.extend((v, HUB, UNCOLORED) for _ in range(mu * a * r))
    edges.extend((HUB, HUB, UNCOLORED) for _ in range(mu * a * a * comb(r, 2)))
    g1 = ColoredMultigraph(list(g.vertices) + [HUB], edges, k + 1)
    return AmalgamationState(g1, "G1", k)


def extend_coloring_a(state: AmalgamationState, params: GddParams, stats,
                      boundary: bool = False) -> AmalgamationState:
    """Color the hub edges so every old vertex has degree 2 in every color,
    then color ``r - s_j`` loops with j (``r - omega_j`` in the boundary case)
    and the remaining loops with the extra color k+1."""
    g1, k, r = state.graph, state.k, params.r
    if state.stage != "G1" or state.b:
        raise ConstructionError("coloring extension needs a fresh G1")
    colors = [e.color for e in g1.edges]
    originals = [v for v in g1.vertices if v != HUB]

    for v in originals:
        need = {j: 2 - g1.degree(v, j) for j in range(1, k + 1)}
        if any(x < 0 for x in need.values()):
            raise ConstructionError(f"{v} has color degree above 2", MAIN_III)
        hub_edges = [i for i in g1.incident(v) if colors[i] == UNCOLORED]
        it = iter(hub_edges)
        for j in range(1, k + 1):
            for _ in range(need[j]):
                colors[next(it)] = j

    stats = sorted(stats, key=lambda st: st.color)
    if boundary:
        want = [r - st.omega for st in stats]
        if any(x < 0 for x in want):
            raise ConstructionError("a color class has more than r components", BND_IV)
    else:
        want = [r - st.s for st in stats]
    loops = [i for i in g1.incident(HUB) if g1.edges[i].is_loop]
    if sum(want) > len(loops):
        raise ConstructionError("not enough loops at the hub", EQ2)
    it = iter(loops)
    for j, count in enumerate(want, start=1):
        for _ in range(count):
            colors[next(it)] = j
    for i in it:
        if boundary:
            raise ContractViolation("boundary construction left loops for the extra color")
        colors[i] = k + 1

    g1 = g1.replace_edges((e.u, e.v, c) for e, c in zip(g1.edges, colors))
    b = []
    for j in range(1, k + 2):
        d = g1.degree(HUB, j)
        if d % (2 * r):
            raise ContractViolation(f"hub degree {d} in color {j} is not an even multiple of r")
        b.append(d // r)
    for j in range(1, k + 1):
        if b[j - 1] > 2 * params.a:
            raise ContractViolation(f"b_{j} = {b[j - 1]} exceeds 2a")
        if not g1.color_class(j).is_connected():
            raise ContractViolation(f"color class {j} of G1 is disconnected")
        st = stats[j - 1]
        expected = 2 * st.omega + 2 * (r - st.omega if boundary else r - st.s)
        if g1.degree(HUB, j) != expected:
            raise ContractViolation(f"hub degree in color {j} is not {expected}")
    for v in originals:
        if any(g1.degree(v, j) != 2 for j in range(1, k + 1)):
            raise ContractViolation(f"{v} does not have degree 2 in every color")
    return replace(state, graph=g1, b=tuple(b), boundary=boundary)


def reabsorb_extra_color(state: AmalgamationState, params: GddParams) -> AmalgamationState:
    """Give each 2-factor of color k+1 the lowest color with room below 2a at every u_i."""
    if state.stage != "G2":
        raise ConstructionError("reabsorption runs on the detached hub (stage G2)")
    g2, k, a = state.graph, state.k, params.a
    hubs = [hub_copy(params, i) for i in range(1, params.r + 1)]
    extra = [i for i, e in enumerate(g2.edges) if e.color == k + 1]
    colors = [e.color for e in g2.edges]
    load = {j: g2.degree(hubs[0], j) for j in range(1, k + 1)}
    if extra:
        sub = ColoredMultigraph(hubs, [g2.edges[i] for i in extra], k + 1)
        for factor in two_factorize(sub).factors:
            target = next((j for j in range(1, k + 1) if load[j] + 2 <= 2 * a), None)
            if target is None:
                raise ContractViolation("no color has room for a 2-factor of the extra color")
            for li in factor:
                colors[extra[li]] = target
            load[target] += 2
    g2 = ColoredMultigraph(g2.vertices, [(e.u, e.v, c) for e, c in zip(g2.edges, colors)], k)
    b_prime = []
    for j in range(1, k + 1):
        ds = {g2.degree(x, j) for x in hubs}
        if len(ds) != 1:
            raise ContractViolation(f"color {j} degrees differ across hub copies: {ds}")
        d = ds.pop()
        if d % 2 or d > 2 * a:
            raise ContractViolation(f"b'_{j} = {d} is not an even number at most 2a")
        b_prime.append(d)
    return replace(state, graph=g2, b_prime=tuple(b_prime))


def build_g3(state: AmalgamationState, params: GddParams) -> AmalgamationState:
    """Add lambda*C(a,2) loops at each u_i, a - b'_j/2 of them in color j."""
    if state.stage != "G2" or not state.b_prime:
        raise ConstructionError("G3 needs the reabsorbed G2")
    g2, k, a = state.graph, state.k, params.a
    budget = params.lam * comb(a, 2)
    per_color = [a - bj // 2 for bj in state.b_prime]
    if sum(per_color) != budget or min(per_color) < 0:
        raise ContractViolation(f"loop budget mismatch: {per_color} vs {budget}")
    hubs = [hub_copy(params, i) for i in range(1, params.r + 1)]
    edges = list(g2.edges)
    for x in hubs:
        for j, count in enumerate(per_color, start=1):
            edges.extend((x, x, j) for _ in range(count))
    g3 = ColoredMultigraph(g2.vertices, edges, k)
    for j in range(1, k + 1):
        if any(g3.degree(x, j) != 2 * a for x in hubs):
            raise ContractViolation(f"color {j} degree at a hub copy is not 2a")
        if not g3.color_class(j).is_connected():
            raise ContractViolation(f"color class {j} of G3 is disconnected")
    return replace(state, graph=g3, stage="G3")
