"""Brute-force oracles and instance generators for desk-scale testing.

Nothing here reuses the embedding pipeline: decompositions and extensions are
found by plain backtracking so they can serve as independent witnesses.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from math import comb, gcd, lcm
from typing import Iterator, Optional

from .conditions import evaluate
from .errors import BudgetExceeded
from .family import EdgeKind, GddParams, build_gdd, classify_edge, vertices_of
from .multigraph import ColoredMultigraph


@dataclass(frozen=True)
class EnumerationBudget:
    max_vertices: int = 12
    max_colors: int = 12
    timeout: float = 30.0  # seconds
    max_items: int = 1_000_000


class _Clock:
    def __init__(self, budget: EnumerationBudget):
        self.deadline = time.monotonic() + budget.timeout
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.ticks % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("enumeration budget exhausted")


# -- Hamiltonian decomposition -------------------------------------------------


def _multiplicity_matrix(params: GddParams, parts: int):
    verts = vertices_of(params.a, parts)
    n = len(verts)
    m = [[0] * n for _ in range(n)]
    for x, y in combinations(range(n), 2):
        kind = classify_edge(verts[x], verts[y])
        m[x][y] = m[y][x] = params.lam if kind is EdgeKind.PURE else params.mu
    return verts, m


def _connected(m, n) -> bool:
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in range(n):
            if m[x][y] and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _decompose(m, n, k, rng, clock, node_limit):
    """Peel k Hamiltonian cycles off multiplicity matrix m (mutated in place)."""
    cycles = []
    nodes = [0]

    def next_cycle():
        if len(cycles) == k:
            return True
        if not _connected(m, n):
            return False
        path, on_path = [0], [False] * n
        on_path[0] = True

        def extend():
            clock.tick()
            nodes[0] += 1
            if nodes[0] > node_limit:
                raise _Restart
            cur = path[-1]
            if len(path) == n:
                if m[cur][0] == 0:
                    return False
                m[cur][0] -= 1
                m[0][cur] -= 1
                cycles.append(list(path))
                if next_cycle():
                    return True
                cycles.pop()
                m[cur][0] += 1
                m[0][cur] += 1
                return False
            options = [y for y in range(n) if not on_path[y] and m[cur][y]]
            rng.shuffle(options)
            # heavily used pairs first: they are the ones left uncovered otherwise
            options.sort(key=lambda y: -m[cur][y])
            for y in options:
                m[cur][y] -= 1
                m[y][cur] -= 1
                on_path[y] = True
                path.append(y)
                if extend():
                    return True
                path.pop()
                on_path[y] = False
                m[cur][y] += 1
                m[y][cur] += 1
            return False

        return extend()

    return cycles if next_cycle() else None


class _Restart(Exception):
    pass


def brute_force_decompose(params: GddParams, parts: Optional[int] = None, seed: int = 0,
                          budget: EnumerationBudget = EnumerationBudget()
                          ) -> Optional[ColoredMultigraph]:
    """A Hamiltonian decomposition of K(a^(parts); lambda, mu) or ``None`` if none exists.

    Randomized restarts are used first; the final attempt is unbounded so a
    ``None`` answer is always the result of an exhaustive search.
    Raises :class:`BudgetExceeded` on timeout.
    """
    parts = params.total_parts if parts is None else parts
    verts, base = _multiplicity_matrix(params, parts)
    n = len(verts)
    if n > budget.max_vertices:
        raise BudgetExceeded(f"{n} vertices exceeds the budget")
    degree = params.lam * (params.a - 1) + params.mu * params.a * (parts - 1)
    if degree % 2:
        return None
    k = degree // 2
    if k > budget.max_colors:
        raise BudgetExceeded(f"{k} colors exceeds the budget")
    rng = random.Random(seed)
    clock = _Clock(budget)
    limit = 2000
    cycles = None
    for attempt in range(12):
        m = [row[:] for row in base]
        try:
            cycles = _decompose(m, n, k, rng, clock, limit if attempt < 11 else float("inf"))
            break
        except _Restart:
            limit *= 2
    if cycles is None:
        return None
    pair_colors = {}
    for c, cyc in enumerate(cycles, start=1):
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            pair_colors.setdefault(frozenset((x, y)), []).append(c)
    edges = []
    for x, y in combinations(range(n), 2):
        for c in sorted(pair_colors.get(frozenset((x, y)), [])):
            edges.append((verts[x], verts[y], c))
    return ColoredMultigraph(verts, edges, k)


def generate_valid_input(params: GddParams, seed: int = 0,
                         budget: EnumerationBudget = EnumerationBudget()) -> ColoredMultigraph:
    """Restrict a random Hamiltonian decomposition of p+r parts to the first p parts."""
    full = brute_force_decompose(params, params.total_parts, seed, budget)
    if full is None:
        raise ValueError("K(a^(p+r); lambda, mu) has no Hamiltonian decomposition")
    return full.subgraph(vertices_of(params.a, params.p))


# -- extension search ------------------------------------------------------------


def find_extension(g: ColoredMultigraph, params: GddParams,
                   budget: EnumerationBudget = EnumerationBudget()) -> Optional[ColoredMultigraph]:
    """Exhaustively look for a coloring of the new edges of K(a^(p+r)) making
    every color class a Hamiltonian cycle.  ``None`` means none exists."""
    verts, m = _multiplicity_matrix(params, params.total_parts)
    n = len(verts)
    k = g.num_colors
    if k < 1:
        return None
    index = {v: i for i, v in enumerate(verts)}
    new_edges = []
    old = Counter(frozenset((index[e.u], index[e.v])) for e in g.edges)
    for x, y in combinations(range(n), 2):
        new_edges.extend([(x, y)] * (m[x][y] - old[frozenset((x, y))]))

    deg = [[0] * n for _ in range(k + 1)]
    adj = [[[] for _ in range(n)] for _ in range(k + 1)]
    size = [0] * (k + 1)
    for e in g.edges:
        x, y = index[e.u], index[e.v]
        deg[e.color][x] += 1
        deg[e.color][y] += 1
        adj[e.color][x].append(y)
        adj[e.color][y].append(x)
        size[e.color] += 1
    if any(deg[c][x] > 2 for c in range(1, k + 1) for x in range(n)):
        return None
    clock = _Clock(budget)
    chosen = [0] * len(new_edges)

    def reachable(c, x, y):
        seen, stack = {x}, [x]
        while stack:
            z = stack.pop()
            if z == y:
                return True
            for w in adj[c][z]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def rec(idx):
        clock.tick()
        if idx == len(new_edges):
            return all(size[c] == n and all(reachable(c, 0, y) for y in range(1, n))
                       for c in range(1, k + 1))
        x, y = new_edges[idx]
        # parallel copies take non-decreasing colors
        start = chosen[idx - 1] if idx and new_edges[idx - 1] == (x, y) else 1
        for c in range(start, k + 1):
            if deg[c][x] == 2 or deg[c][y] == 2:
                continue
            if reachable(c, x, y) and size[c] + 1 != n:
                continue
            chosen[idx] = c
            deg[c][x] += 1
            deg[c][y] += 1
            adj[c][x].append(y)
            adj[c][y].append(x)
            size[c] += 1
            if rec(idx + 1):
                return True
            size[c] -= 1
            adj[c][y].pop()
            adj[c][x].pop()
            deg[c][y] -= 1
            deg[c][x] -= 1
        return False

    if not rec(0):
        return None
    edges = list(g.edges) + [(verts[x], verts[y], c) for (x, y), c in zip(new_edges, chosen)]
    return ColoredMultigraph(verts, edges, k)


# -- input enumeration -------------------------------------------------------------


@dataclass(frozen=True)
class EnumeratedInput:
    graph: ColoredMultigraph
    verdict: object


class InputEnumeration:
    """All colorings of K(a^(p)) with ``colors`` colors, tagged with their verdict.

    With ``quotient=True`` only colorings whose colors first appear in
    increasing order are produced (one per color permutation class).
    ``truncated`` is set when the budget stops the stream early.
    """

    def __init__(self, params: GddParams, colors: Optional[int] = None, quotient: bool = False,
                 budget: EnumerationBudget = EnumerationBudget()):
        self.params = params
        self.colors = params.k if colors is None else colors
        self.quotient = quotient
        self.budget = budget
        self.truncated = False

    def __iter__(self) -> Iterator[EnumeratedInput]:
        base = build_gdd(self.params)
        k = self.colors
        deadline = time.monotonic() + self.budget.timeout
        count = 0
        for assignment in product(range(1, k + 1), repeat=len(base.edges)):
            if self.quotient and not _first_appearance_ordered(assignment):
                continue
            if count >= self.budget.max_items or time.monotonic() > deadline:
                self.truncated = True
                return
            count += 1
            g = base.replace_edges([(e.u, e.v, c) for e, c in zip(base.edges, assignment)],
                                   num_colors=k)
            yield EnumeratedInput(g, evaluate(g, self.params))


def enumerate_inputs(params: GddParams, budget: EnumerationBudget = EnumerationBudget(),
                     quotient: bool = False, colors: Optional[int] = None) -> InputEnumeration:
    return InputEnumeration(params, colors, quotient, budget)


def _first_appearance_ordered(assignment) -> bool:
    top = 0
    for c in assignment:
        if c > top + 1:
            return False
        top = max(top, c)
    return True


# -- random amalgamations --------------------------------------------------------------


def random_amalgam(rng: random.Random, max_vertices: int = 5, max_colors: int = 3,
                   max_eta: int = 3, max_repeat: int = 6):
    """A random colored multigraph H and split counts eta meeting the detachment hypotheses.

    Each color class is a closed walk (hence connected) repeated ``L`` times,
    with ``L`` the least factor that makes every divisibility hypothesis hold;
    walks never step from a vertex to itself when its split count is 1.
    Returns ``(H, eta)``.
    """
    while True:
        n = rng.randint(2, max_vertices)
        eta = {v: rng.randint(1, max_eta) for v in range(n)}
        if all(e == 1 for e in eta.values()):
            eta[rng.randrange(n)] = rng.randint(2, max_eta)
        k = rng.randint(1, max_colors)
        walks = [w for w in (_random_walk(rng, n, eta) for _ in range(k))]
        if any(w is None for w in walks):
            continue
        occ = [Counter(w) for w in walks]
        pairs = Counter()
        for w in walks:
            for x, y in zip(w, w[1:] + w[:1]):
                pairs[frozenset((x, y))] += 1
        repeat = 1
        for v in range(n):
            for c in occ:
                repeat = lcm(repeat, eta[v] // gcd(eta[v], c[v]))
        for key, cnt in pairs.items():
            ends = tuple(key)
            if len(ends) == 1:
                need = comb(eta[ends[0]], 2)
            else:
                need = eta[ends[0]] * eta[ends[1]]
            if need:
                repeat = lcm(repeat, need // gcd(need, cnt))
        if repeat > max_repeat:
            continue
        edges = []
        for c, w in enumerate(walks, start=1):
            for _ in range(repeat):
                edges.extend((x, y, c) for x, y in zip(w, w[1:] + w[:1]))
        return ColoredMultigraph(range(n), edges, k), eta


def _random_walk(rng, n, eta):
    length = rng.randint(2, 6)
    walk = [rng.randrange(n)]
    for _ in range(length - 1):
        cur = walk[-1]
        choices = [y for y in range(n) if y != cur or eta[cur] >= 2]
        walk.append(rng.choice(choices))
    if walk[-1] == walk[0] and eta[walk[0]] == 1:
        return None
    return walk
