"""The complete equipartite multigraphs K(a^(p); lambda, mu)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import DomainError, LambdaEqualsMuError, ParameterError
from .multigraph import ColoredMultigraph, VertexId


class EdgeKind(str, enum.Enum):
    PURE = "pure"
    MIXED = "mixed"


@dataclass(frozen=True)
class GddParams:
    """Part size ``a``, part count ``p``, multiplicities ``lam``/``mu`` and radius ``r``.

    ``r`` may be ``None`` when only the base graph is of interest.
    """

    a: int
    p: int
    lam: int
    mu: int
    r: Optional[int] = None

    def __post_init__(self):
        for name in ("a", "p", "lam", "mu"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ParameterError(f"{name} must be an integer")
        if self.a <= 1:
            raise ParameterError("part size a must exceed 1")
        if self.p < 1:
            raise ParameterError("part count p must be at least 1")
        if self.lam < 0:
            raise ParameterError("lambda must be non-negative")
        if self.mu < 1:
            raise ParameterError("mu must be at least 1")
        if self.r is not None and (not isinstance(self.r, int) or self.r < 1):
            raise ParameterError("radius r must be a positive integer")
        if self.lam == self.mu:
            raise LambdaEqualsMuError("lambda == mu is excluded")

    def with_r(self, r: Optional[int]) -> "GddParams":
        return replace(self, r=r)

    def _radius(self) -> int:
        if self.r is None:
            raise ParameterError("embedding radius r is required")
        return self.r

    @property
    def total_parts(self) -> int:
        return self.p + self._radius()

    def color_count(self) -> Fraction:
        """(lambda(a-1) + mu*a*(p+r-1)) / 2, possibly non-integral."""
        return Fraction(self.lam * (self.a - 1) + self.mu * self.a * (self.total_parts - 1), 2)

    @property
    def k(self) -> Optional[int]:
        """Number of Hamiltonian cycles in K(a^(p+r)); ``None`` if not an integer."""
        c = self.color_count()
        return int(c) if c.denominator == 1 else None

    @property
    def boundary_lambda(self) -> int:
        return self.mu * self.a * (self.total_parts - 1)

    def as_dict(self) -> dict:
        d = {"a": self.a, "p": self.p, "lambda": self.lam, "mu": self.mu}
        if self.r is not None:
            d["r"] = self.r
        return d


def vertices_of(a: int, parts: int) -> list:
    return [VertexId(i, s) for i in range(1, parts + 1) for s in range(1, a + 1)]


def classify_edge(v: VertexId, w: VertexId) -> EdgeKind:
    if v == w:
        raise DomainError("a loop is neither pure nor mixed")
    return EdgeKind.PURE if v.part == w.part else EdgeKind.MIXED


def build_gdd(params: GddParams, parts: Optional[int] = None, color: int = 1) -> ColoredMultigraph:
    """K(a^(parts); lambda, mu) with every edge in one color."""
    parts = params.p if parts is None else parts
    if parts < 1:
        raise DomainError("parts must be at least 1")
    verts = vertices_of(params.a, parts)
    edges = []
    for v, w in combinations(verts, 2):
        m = params.lam if classify_edge(v, w) is EdgeKind.PURE else params.mu
        edges.extend((v, w, color) for _ in range(m))
    return ColoredMultigraph(verts, edges, num_colors=color)


def conforms_to_gdd(g: ColoredMultigraph, params: GddParams, parts: Optional[int] = None) -> bool:
    parts = params.p if parts is None else parts
    expected = vertices_of(params.a, parts)
    if len(g.vertices) != len(expected):
        return False
    if {(v.part, v.slot) for v in g.vertices if isinstance(v, VertexId)} != {
            (v.part, v.slot) for v in expected}:
        return False
    if any(e.is_loop for e in g.edges):
        return False
    for v, w in combinations(g.vertices, 2):
        m = params.lam if classify_edge(v, w) is EdgeKind.PURE else params.mu
        if g.multiplicity(v, w) != m:
            return False
    return True
