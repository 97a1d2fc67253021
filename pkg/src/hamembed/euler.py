"""Euler circuits and 2-factorizations of even multigraphs (loops allowed)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .multigraph import ColoredMultigraph


@dataclass(frozen=True)
class EulerCircuit:
    vertices: tuple  # closed walk, vertices[0] == vertices[-1]
    edges: tuple     # edge indices, edges[i] joins vertices[i] and vertices[i+1]


@dataclass(frozen=True)
class TwoFactorization:
    factors: tuple  # tuples of edge indices into the factorized graph


def euler_circuit(g: ColoredMultigraph, start=None) -> EulerCircuit:
    """Hierholzer's algorithm over edge indices."""
    if not g.edges:
        v = start if start is not None else (g.vertices[0] if g.vertices else None)
        return EulerCircuit((v,) if v is not None else (), ())
    for v in g.vertices:
        if g.degree(v) % 2:
            raise DomainError(f"vertex {v!r} has odd degree")
    if not g.is_connected():
        raise DomainError("edges do not form a connected graph")
    if start is None or not g.incident(start):
        start = g.support()[0]

    pending = {v: list(reversed(g.incident(v))) for v in g.support()}
    used = [False] * len(g.edges)
    stack = [(start, None)]
    walk_v, walk_e = [], []
    while stack:
        v, via = stack[-1]
        inc = pending[v]
        while inc and used[inc[-1]]:
            inc.pop()
        if inc:
            i = inc.pop()
            used[i] = True
            stack.append((g.edges[i].other(v), i))
        else:
            stack.pop()
            walk_v.append(v)
            if via is not None:
                walk_e.append(via)
    walk_v.reverse()
    walk_e.reverse()
    return EulerCircuit(tuple(walk_v), tuple(walk_e))


def _perfect_matching(left, adj, alive):
    """Kuhn's augmenting paths on a bipartite multigraph.

    ``adj[x]`` lists ``(edge_index, y)``; only indices with ``alive[i]`` are used.
    Returns ``{x: edge_index}``.
    """
    match_right = {}  # y -> (x, edge)

    def augment(x, seen):
        for i, y in adj[x]:
            if not alive[i] or y in seen:
                continue
            seen.add(y)
            if y not in match_right or augment(match_right[y][0], seen):
                match_right[y] = (x, i)
                return True
        return False

    for x in left:
        if not augment(x, set()):
            raise DomainError("regular bipartite graph without a perfect matching")
    return {x: i for x, i in match_right.values()}


def two_factorize(g: ColoredMultigraph) -> TwoFactorization:
    """Split each component, regular of even degree 2d, into d 2-factors.

    Orient along an Euler circuit, so every vertex has d out- and d in-ends;
    the out/in bipartite graph is d-regular and peels into d perfect
    matchings, each of which is a 2-factor of the component.
    """
    for v in g.vertices:
        if g.degree(v) % 2:
            raise DomainError(f"vertex {v!r} has odd degree")
    factors = []
    for comp in g.subgraph(g.support()).components():
        degs = {g.degree(v) for v in comp}
        if len(degs) != 1:
            raise DomainError("component is not regular")
        d = degs.pop() // 2
        inside = set(comp)
        sub_idx = [i for i, e in enumerate(g.edges) if e.u in inside]
        local = ColoredMultigraph(comp, [g.edges[i] for i in sub_idx], g.num_colors)
        circ = euler_circuit(local)
        adj = {v: [] for v in comp}
        for pos, li in enumerate(circ.edges):
            adj[circ.vertices[pos]].append((sub_idx[li], circ.vertices[pos + 1]))
        alive = {i: True for i in sub_idx}
        for _ in range(d):
            m = _perfect_matching(comp, adj, alive)
            for i in m.values():
                alive[i] = False
            factors.append(tuple(sorted(m.values())))
    return TwoFactorization(tuple(factors))
