"""Edge-colored multigraphs with loops.

Edges are kept as an explicit, ordered tuple so that an edge index survives
amalgamation and detachment: the i-th edge of a detachment is the i-th edge
of the graph it was detached from.

Vertices may be any hashable value.  Graphs built from the complete
equipartite family use :class:`VertexId`.  No algorithm here iterates over a
``set`` of vertices, so results do not depend on string hash randomization.
"""

from __future__ import annotations

from collections import Counter
from typing import Hashable, Iterable, NamedTuple, Optional

from .errors import DomainError

ORIGINAL = "original"
ADDED = "added"

# Color 0 marks an edge that has not been colored yet.
UNCOLORED = 0


class VertexId(NamedTuple):
    part: int
    slot: int
    tier: str = ORIGINAL

    def __str__(self):
        return f"p{self.part}.v{self.slot}"


class Edge(NamedTuple):
    u: Hashable
    v: Hashable
    color: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def key(self):
        """Endpoint-unordered identity of the edge, including its color."""
        return (frozenset((self.u, self.v)), self.color)

    def other(self, x):
        return self.v if x == self.u else self.u


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


class ColoredMultigraph:
    """Immutable loop-aware multigraph whose edges carry a color index.

    ``num_colors`` is the declared color count k; every edge color must lie
    in ``0..num_colors`` (0 only for not-yet-colored edges).
    """

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable = (),
                 num_colors: Optional[int] = None):
        self._vertices = tuple(dict.fromkeys(vertices))
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._edges = tuple(Edge(*e) for e in edges)
        top = max((e.color for e in self._edges), default=0)
        if num_colors is None:
            num_colors = top
        self._num_colors = num_colors
        self._incident = {v: [] for v in self._vertices}
        for i, e in enumerate(self._edges):
            if e.u not in self._index or e.v not in self._index:
                raise DomainError(f"edge {i} has an endpoint outside the vertex set")
            if e.color < 0 or e.color > num_colors:
                raise DomainError(f"edge {i} has color {e.color} outside 0..{num_colors}")
            self._incident[e.u].append(i)
            if not e.is_loop:
                self._incident[e.v].append(i)

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def num_colors(self) -> int:
        return self._num_colors

    def __contains__(self, v) -> bool:
        return v in self._index

    def __repr__(self):
        return (f"ColoredMultigraph(|V|={len(self._vertices)}, |E|={len(self._edges)}, "
                f"k={self._num_colors})")

    def __eq__(self, other):
        if not isinstance(other, ColoredMultigraph):
            return NotImplemented
        return (set(self._vertices) == set(other._vertices)
                and self.edge_multiset() == other.edge_multiset())

    __hash__ = None

    def _check(self, v):
        if v not in self._index:
            raise DomainError(f"unknown vertex {v!r}")

    def incident(self, v) -> tuple:
        """Indices of edges at v; a loop is listed once."""
        self._check(v)
        return tuple(self._incident[v])

    def edge_multiset(self) -> Counter:
        return Counter(e.key() for e in self._edges)

    def colors(self) -> range:
        return range(1, self._num_colors + 1)

    # -- degree-type queries -----------------------------------------------

    def degree(self, v, color: Optional[int] = None) -> int:
        """Degree of v, optionally within one color class; loops count 2."""
        self._check(v)
        d = 0
        for i in self._incident[v]:
            e = self._edges[i]
            if color is None or e.color == color:
                d += 2 if e.is_loop else 1
        return d

    def loop_count(self, v, color: Optional[int] = None) -> int:
        self._check(v)
        return sum(1 for i in self._incident[v]
                   if self._edges[i].is_loop and (color is None or self._edges[i].color == color))

    def multiplicity(self, v, w, color: Optional[int] = None) -> int:
        self._check(v)
        self._check(w)
        if v == w:
            raise DomainError("multiplicity of a vertex with itself; use loop_count")
        return sum(1 for i in self._incident[v]
                   if self._edges[i].other(v) == w
                   and (color is None or self._edges[i].color == color))

    # -- derived graphs ----------------------------------------------------

    def color_class(self, j: int) -> "ColoredMultigraph":
        """Spanning subgraph of color j; isolated vertices are kept."""
        return ColoredMultigraph(self._vertices, [e for e in self._edges if e.color == j],
                                 self._num_colors)

    def subgraph(self, vertices: Iterable) -> "ColoredMultigraph":
        keep = list(dict.fromkeys(vertices))
        inside = set(keep)
        return ColoredMultigraph(keep, [e for e in self._edges if e.u in inside and e.v in inside],
                                 self._num_colors)

    def replace_edges(self, edges: Iterable, vertices: Optional[Iterable] = None,
                      num_colors: Optional[int] = None) -> "ColoredMultigraph":
        return ColoredMultigraph(self._vertices if vertices is None else vertices, edges,
                                 self._num_colors if num_colors is None else num_colors)

    # -- connectivity --------------------------------------------------------

    def components(self) -> list:
        """Vertex partition into connected components (isolated vertices are singletons)."""
        uf = _UnionFind(self._vertices)
        for e in self._edges:
            uf.union(e.u, e.v)
        groups = {}
        for v in self._vertices:
            groups.setdefault(uf.find(v), []).append(v)
        return list(groups.values())

    def support(self) -> list:
        return [v for v in self._vertices if self._incident[v]]

    def is_connected(self) -> bool:
        """True iff the edges form one connected piece (isolated vertices ignored)."""
        sup = self.support()
        if not sup:
            return True
        return len(self.subgraph(sup).components()) == 1

    def is_path_forest(self) -> bool:
        if any(e.is_loop for e in self._edges):
            return False
        if any(self.degree(v) > 2 for v in self._vertices):
            return False
        # A forest: every component has one edge fewer than vertices.
        return len(self._edges) == len(self._vertices) - len(self.components())

    def is_hamiltonian_cycle(self) -> bool:
        n = len(self._vertices)
        return (n >= 2 and len(self._edges) == n
                and not any(e.is_loop for e in self._edges)
                and all(self.degree(v) == 2 for v in self._vertices)
                and len(self.components()) == 1)

    def cycle_order(self) -> list:
        """Vertex order of a Hamiltonian cycle, starting at the first vertex."""
        if not self.is_hamiltonian_cycle():
            raise DomainError("graph is not a Hamiltonian cycle")
        start = self._vertices[0]
        order, used, cur = [start], set(), start
        while len(order) < len(self._vertices):
            for i in self._incident[cur]:
                if i not in used:
                    used.add(i)
                    cur = self._edges[i].other(cur)
                    order.append(cur)
                    break
        return order
