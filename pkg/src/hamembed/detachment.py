"""Constructive eta-detachment of edge-colored multigraphs.

Given a graph H whose color classes are connected and a split function eta
meeting the divisibility hypotheses (see :func:`validate_plan`), produce a
loopless detachment G in which

* copies of one vertex v are joined by ``loops(v) / C(eta(v), 2)`` edges,
* copies of distinct v, w are joined by ``m(v, w) / (eta(v) eta(w))`` edges,
* each copy of v has color-j degree ``d_j(v) / eta(v)``,
* every color class is still connected.

The construction splits one copy off at a time.  Each step is a small
integral transportation problem (edge-end quotas per neighbor and per color)
solved by max-flow, followed by exchange moves that make every color class
stay connected; an exhaustive search over the quota matrix is kept as a
last resort.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping, Optional

import networkx as nx

from .errors import ContractViolation, DomainError
from .multigraph import ColoredMultigraph

_LOOP = object()


class _Residual:
    """Placeholder for the not-yet-split remainder of a vertex."""

    __slots__ = ("origin",)

    def __init__(self, origin):
        self.origin = origin

    def __repr__(self):
        return f"_Residual({self.origin!r})"


@dataclass(frozen=True)
class DetachmentPlan:
    """Split counts ``eta`` (default 1) and optional names for the copies."""

    eta: Mapping
    names: Optional[Mapping] = None

    def count(self, v) -> int:
        return self.eta.get(v, 1)

    def copies(self, v) -> tuple:
        if self.names is not None and v in self.names:
            return tuple(self.names[v])
        n = self.count(v)
        return (v,) if n == 1 else tuple((v, i) for i in range(1, n + 1))


@dataclass
class DetachmentStats:
    steps: int = 0
    exchange_moves: int = 0
    restarts: int = 0
    fallback_used: bool = False


def validate_plan(h: ColoredMultigraph, plan: DetachmentPlan) -> list:
    """Violated hypotheses as ``(id, detail)`` pairs; empty means the plan is admissible."""
    out = []
    for v in plan.eta:
        if v not in h:
            out.append(("plan", f"{v!r} is not a vertex"))
    for v in h.vertices:
        n = plan.count(v)
        if n < 1:
            out.append(("plan", f"eta({v!r}) = {n} is not positive"))
            continue
        if len(plan.copies(v)) != n:
            out.append(("plan", f"{v!r} has {len(plan.copies(v))} names for {n} copies"))
        loops = h.loop_count(v)
        if n == 1 and loops:
            out.append(("i", f"{v!r} has loops but eta = 1"))
        for j in h.colors():
            d = h.degree(v, j)
            if d % n or (d // n) % 2:
                out.append(("ii", f"d_{j}({v!r}) = {d} is not an even multiple of {n}"))
        if n >= 2 and loops % comb(n, 2):
            out.append(("iii", f"C({n},2) does not divide {loops} loops at {v!r}"))
    for v, w in combinations(h.vertices, 2):
        m = h.multiplicity(v, w)
        if m % (plan.count(v) * plan.count(w)):
            out.append(("iv", f"eta({v!r}) eta({w!r}) does not divide m = {m}"))
    for j in h.colors():
        if not h.color_class(j).is_connected():
            out.append(("connected", f"color class {j} is disconnected"))
    return out


# -- one splitting step -------------------------------------------------------


class _Step:
    """Quota problem for splitting one copy off residual vertex ``res``."""

    def __init__(self, eu, ev, col, res, n, ncolors):
        self.res = res
        groups = {}
        for i, (x, y) in enumerate(zip(eu, ev)):
            if x is res and y is res:
                key = _LOOP
            elif x is res:
                key = y
            elif y is res:
                key = x
            else:
                continue
            groups.setdefault(key, defaultdict(list))[col[i]].append(i)
        self.keys = list(groups)
        self.colors = list(range(1, ncolors + 1))
        self.ids = groups
        self.cap = {(g, j): len(groups[g].get(j, ())) for g in self.keys for j in self.colors}
        d = Counter()
        for g in self.keys:
            for j, lst in groups[g].items():
                d[j] += len(lst) * (2 if g is _LOOP else 1)
        self.degree = d
        self.row = {}
        for g in self.keys:
            total = sum(len(lst) for lst in groups[g].values())
            self.row[g] = 2 * total // n if g is _LOOP else total // n
        self.column = {j: d[j] // n for j in self.colors}

        # components of each color class with the residual vertex removed
        self.component = {}
        for j in self.colors:
            if not d[j]:
                continue
            parent = {}

            def find(x):
                parent.setdefault(x, x)
                while parent[x] != x:
                    x = parent[x]
                return x

            for i, (x, y) in enumerate(zip(eu, ev)):
                if col[i] == j and x is not res and y is not res:
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[ry] = rx
            self.component[j] = {g: find(g) for g in self.keys
                                 if g is not _LOOP and self.cap[g, j]}

    def initial(self):
        if not self.keys:
            return {}
        net = nx.DiGraph()
        for g_idx, g in enumerate(self.keys):
            net.add_edge("s", ("g", g_idx), capacity=self.row[g])
            for j in self.colors:
                if self.cap[g, j]:
                    net.add_edge(("g", g_idx), ("c", j), capacity=self.cap[g, j])
        for j in self.colors:
            net.add_edge(("c", j), "t", capacity=self.column[j])
        value, flow = nx.maximum_flow(net, "s", "t", flow_func=nx.algorithms.flow.edmonds_karp)
        if value != sum(self.column.values()) or value != sum(self.row.values()):
            raise ContractViolation("edge-end quotas admit no integral selection")
        return {(g, j): flow[("g", g_idx)].get(("c", j), 0)
                for g_idx, g in enumerate(self.keys) for j in self.colors}

    def connected_after(self, x, j) -> bool:
        """Whether color j stays connected once the selection x is split off."""
        if not self.degree[j]:
            return True
        if _LOOP in self.ids and x[_LOOP, j] > 0:
            return True
        taken, total = Counter(), Counter()
        for g, root in self.component[j].items():
            taken[root] += x[g, j]
            total[root] += self.cap[g, j]
        return any(0 < taken[c] < total[c] for c in total)

    def bad(self, x) -> list:
        return [j for j in self.colors if not self.connected_after(x, j)]

    def moves(self, x, j):
        """Exchanges raising color j in one group and lowering it in another."""
        for g in self.keys:
            if x[g, j] >= self.cap[g, j]:
                continue
            for h in self.keys:
                if h is g or x[h, j] == 0:
                    continue
                for i in self.colors:
                    if i != j and x[g, i] > 0 and x[h, i] < self.cap[h, i]:
                        yield g, h, i

    @staticmethod
    def apply(x, j, move, sign=1):
        g, h, i = move
        x[g, j] += sign
        x[g, i] -= sign
        x[h, j] -= sign
        x[h, i] += sign

    def search(self, rng, stats, max_iters=4000, restarts=8):
        base = self.initial()
        for attempt in range(restarts):
            x = dict(base)
            if attempt:
                stats.restarts += 1
                self._scramble(x, rng, 20 * attempt)
            bad = self.bad(x)
            for _ in range(max_iters):
                if not bad:
                    return x
                j = rng.choice(bad)
                options = list(self.moves(x, j))
                if not options:
                    break
                move = rng.choice(options)
                self.apply(x, j, move)
                after = self.bad(x)
                if len(after) <= len(bad) or rng.random() < 0.05:
                    bad = after
                    stats.exchange_moves += 1
                else:
                    self.apply(x, j, move, -1)
            if not bad:
                return x
        stats.fallback_used = True
        return self._exhaustive()

    def _scramble(self, x, rng, count):
        for _ in range(count):
            j = rng.choice(self.colors)
            options = list(self.moves(x, j))
            if options:
                self.apply(x, j, rng.choice(options))

    def _exhaustive(self, node_budget=2_000_000):
        cells = [(g, j) for g in self.keys for j in self.colors if self.cap[g, j]]
        x = {(g, j): 0 for g in self.keys for j in self.colors}
        row_left = dict(self.row)
        col_left = dict(self.column)
        budget = [node_budget]

        def capacity_after(idx, g=None, j=None):
            rest_g = sum(self.cap[c] for c in cells[idx:] if c[0] is g) if g is not None else 0
            rest_j = sum(self.cap[c] for c in cells[idx:] if c[1] == j) if j is not None else 0
            return rest_g, rest_j

        def rec(idx):
            budget[0] -= 1
            if budget[0] < 0:
                return False
            if idx == len(cells):
                return (all(v == 0 for v in row_left.values())
                        and all(v == 0 for v in col_left.values())
                        and not self.bad(x))
            g, j = cells[idx]
            rest_g, rest_j = capacity_after(idx + 1, g, j)
            lo = max(0, row_left[g] - rest_g, col_left[j] - rest_j)
            hi = min(self.cap[g, j], row_left[g], col_left[j])
            for val in range(lo, hi + 1):
                x[g, j] = val
                row_left[g] -= val
                col_left[j] -= val
                if rec(idx + 1):
                    return True
                row_left[g] += val
                col_left[j] += val
            x[g, j] = 0
            return False

        if rec(0):
            return x
        raise ContractViolation("no connectivity-preserving split found")


def eta_detach(h: ColoredMultigraph, plan: DetachmentPlan, seed: int = 0,
               stats: Optional[DetachmentStats] = None, check: bool = True) -> ColoredMultigraph:
    """Detach every vertex v of h into ``plan.count(v)`` copies."""
    problems = validate_plan(h, plan)
    if problems:
        raise DomainError(f"detachment hypotheses fail: {problems}")
    stats = stats if stats is not None else DetachmentStats()
    rng = random.Random(seed)
    eu = [e.u for e in h.edges]
    ev = [e.v for e in h.edges]
    col = [e.color for e in h.edges]

    for v in h.vertices:
        n = plan.count(v)
        names = plan.copies(v)
        if n == 1:
            if names[0] != v:
                eu = [names[0] if x == v else x for x in eu]
                ev = [names[0] if y == v else y for y in ev]
            continue
        res = _Residual(v)
        eu = [res if x == v else x for x in eu]
        ev = [res if y == v else y for y in ev]
        for step, new in enumerate(names[:-1]):
            stats.steps += 1
            problem = _Step(eu, ev, col, res, n - step, h.num_colors)
            x = problem.search(rng, stats)
            for (g, j), count in x.items():
                for i in problem.ids[g].get(j, [])[:count]:
                    if g is _LOOP:
                        ev[i] = new
                    elif eu[i] is res:
                        eu[i] = new
                    else:
                        ev[i] = new
        last = names[-1]
        eu = [last if x is res else x for x in eu]
        ev = [last if y is res else y for y in ev]

    verts = [c for v in h.vertices for c in plan.copies(v)]
    g = ColoredMultigraph(verts, zip(eu, ev, col), h.num_colors)
    if check:
        report = verify_detachment_contract(h, plan, g)
        if report:
            raise ContractViolation(f"detachment contract broken: {report}")
    return g


def verify_detachment_contract(h: ColoredMultigraph, plan: DetachmentPlan,
                               g: ColoredMultigraph) -> list:
    """Independent re-check of every clause; returns human-readable violations."""
    out = []
    origin = {}
    for v in h.vertices:
        for c in plan.copies(v):
            origin[c] = v
    if list(g.vertices) != list(origin):
        out.append("vertex set is not the union of the planned copies")
        return out
    if len(g.edges) != len(h.edges):
        return out + [f"edge count {len(g.edges)} != {len(h.edges)}"]
    for i, (e, f) in enumerate(zip(g.edges, h.edges)):
        if e.color != f.color or Counter((origin[e.u], origin[e.v])) != Counter((f.u, f.v)):
            out.append(f"edge {i} does not amalgamate back to {f}")
    if any(e.is_loop for e in g.edges):
        out.append("detachment has loops")
    mult = Counter(frozenset((e.u, e.v)) for e in g.edges if not e.is_loop)
    for v in h.vertices:
        n = plan.count(v)
        cv = plan.copies(v)
        if n >= 2:
            want = h.loop_count(v) // comb(n, 2)
            for x, y in combinations(cv, 2):
                if mult[frozenset((x, y))] != want:
                    out.append(f"m({x!r},{y!r}) = {mult[frozenset((x, y))]}, expected {want}")
        for j in h.colors():
            want = h.degree(v, j) // n
            for x in cv:
                if g.degree(x, j) != want:
                    out.append(f"d_{j}({x!r}) = {g.degree(x, j)}, expected {want}")
    for v, w in combinations(h.vertices, 2):
        want = h.multiplicity(v, w) // (plan.count(v) * plan.count(w))
        for x in plan.copies(v):
            for y in plan.copies(w):
                if mult[frozenset((x, y))] != want:
                    out.append(f"m({x!r},{y!r}) = {mult[frozenset((x, y))]}, expected {want}")
    for j in g.colors():
        if not g.color_class(j).is_connected():
            out.append(f"color class {j} is disconnected")
    return out


def amalgamate(g: ColoredMultigraph, plan: DetachmentPlan, h_vertices) -> ColoredMultigraph:
    """Merge the copies named by ``plan`` back into their original vertices."""
    origin = {c: v for v in h_vertices for c in plan.copies(v)}
    return ColoredMultigraph(h_vertices,
                             [(origin[e.u], origin[e.v], e.color) for e in g.edges],
                             g.num_colors)
