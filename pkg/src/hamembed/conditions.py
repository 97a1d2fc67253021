"""Embeddability conditions and the parameter-regime classifier.

Condition identifiers are stable strings::

    thm1.2.i .. thm1.2.iv   necessary conditions of the general theorem
    eq2                     the sum inequality (sufficiency side only)
    thm3.5.i .. thm3.5.iv   conditions of the boundary case lambda = mu*a*(p+r-1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ContractViolation, DomainError, ParameterError
from .family import EdgeKind, GddParams, classify_edge, conforms_to_gdd
from .multigraph import ColoredMultigraph

MAIN_I, MAIN_II, MAIN_III, MAIN_IV = "thm1.2.i", "thm1.2.ii", "thm1.2.iii", "thm1.2.iv"
EQ2 = "eq2"
BND_I, BND_II, BND_III, BND_IV = "thm3.5.i", "thm3.5.ii", "thm3.5.iii", "thm3.5.iv"


class RegimeTag(str, enum.Enum):
    SUM_CONDITION = "SumCondition"
    LARGE_R = "LargeR"
    UNIT_R = "UnitR"
    SMALL_PARAMS = "SmallParams"
    BOUNDARY = "Boundary"
    UNDETERMINED = "Undetermined"


# Regimes in which the sum inequality holds for every coloring.
GUARANTEED = (RegimeTag.UNIT_R, RegimeTag.LARGE_R, RegimeTag.SMALL_PARAMS)


@dataclass(frozen=True)
class Regime:
    tag: RegimeTag
    needs_instance: bool = False


@dataclass(frozen=True)
class ClassStats:
    color: int
    omega: int
    s: int
    mixed_edges: int
    pure_edges_per_part: tuple


@dataclass(frozen=True)
class Verdict:
    embeddable: str  # "yes" | "no" | "undetermined"
    violated: tuple = ()
    stats: tuple = ()
    regime: Regime | None = None
    # sufficiency-side conditions that failed (never makes the verdict "no")
    unmet: tuple = ()

    def __post_init__(self):
        if (self.embeddable == "no") != bool(self.violated):
            raise ValueError("verdict 'no' iff violated conditions are listed")


def residue(omega: int, r: int) -> int:
    """The representative of omega mod r in 1..r."""
    return (omega - 1) % r + 1


def class_stats_all(g: ColoredMultigraph, params: GddParams) -> list:
    r = params._radius()
    out = []
    for j in g.colors():
        cls = g.color_class(j)
        omega = len(cls.components())
        mixed = 0
        pure = [0] * params.p
        for e in cls.edges:
            if e.is_loop:
                continue
            if classify_edge(e.u, e.v) is EdgeKind.MIXED:
                mixed += 1
            else:
                pure[e.u.part - 1] += 1
        out.append(ClassStats(j, omega, residue(omega, r), mixed, tuple(pure)))
    return out


def _require_conforming(g, params):
    if not conforms_to_gdd(g, params):
        raise DomainError("graph does not conform to K(a^(p); lambda, mu)")


def check_main_conditions(g: ColoredMultigraph, params: GddParams) -> Verdict:
    """Conditions (i)-(iv) of the general theorem; all failures are recorded."""
    _require_conforming(g, params)
    r = params._radius()
    stats = class_stats_all(g, params)
    violated = []
    if params.k is None or params.k != g.num_colors:
        violated.append(MAIN_I)
    if params.lam > params.boundary_lambda:
        violated.append(MAIN_II)
    if any(e.color == 0 for e in g.edges) or not all(
            g.color_class(j).is_path_forest() for j in g.colors()):
        violated.append(MAIN_III)
    if any(st.omega > params.a * r for st in stats):
        violated.append(MAIN_IV)
    return Verdict("no" if violated else "yes", tuple(violated), tuple(stats))


def sum_condition_rhs(k: int, params: GddParams) -> int:
    r = params._radius()
    return k * r - params.mu * params.a ** 2 * comb(r, 2)


def check_sum_condition(stats, params: GddParams) -> bool:
    s = [st if isinstance(st, int) else st.s for st in stats]
    return sum(s) >= sum_condition_rhs(len(s), params)


def check_boundary_conditions(g: ColoredMultigraph, params: GddParams) -> Verdict:
    r = params._radius()
    if params.lam != params.boundary_lambda:
        raise DomainError("boundary conditions apply only when lambda = mu*a*(p+r-1)")
    _require_conforming(g, params)
    a, p = params.a, params.p
    stats = class_stats_all(g, params)
    violated = []
    k = Fraction(params.mu * a * a * (p + r - 1), 2)
    if k.denominator != 1 or k != g.num_colors:
        violated.append(BND_I)
    if any(e.color == 0 for e in g.edges) or not all(
            g.color_class(j).is_path_forest() for j in g.colors()):
        violated.append(BND_II)
    if any(st.mixed_edges > p - 1 or any(c != a - 1 for c in st.pure_edges_per_part)
           for st in stats):
        violated.append(BND_III)
    if any(st.omega > r for st in stats):
        violated.append(BND_IV)
    return Verdict("no" if violated else "yes", tuple(violated), tuple(stats))


def large_r_bound(params: GddParams) -> Fraction:
    """Smallest real r for which the sum inequality holds for every coloring."""
    a, p, lam, mu = params.a, params.p, params.lam, params.mu
    return Fraction(lam * (a - 1) + mu * a * (p - 1), mu * a * (a - 1))


def small_params(params: GddParams) -> bool:
    """lambda/(mu a) + (p-1)/(a-1) <= 2, so r=1 and every r >= 2 are both covered."""
    return Fraction(params.lam, params.mu * params.a) + Fraction(params.p - 1, params.a - 1) <= 2


def classify_regime(params: GddParams) -> Regime:
    if params.r is None:
        if small_params(params):
            return Regime(RegimeTag.SMALL_PARAMS)
        raise ParameterError("regime depends on r for these parameters")
    if params.lam == params.boundary_lambda:
        return Regime(RegimeTag.BOUNDARY)
    if params.r == 1:
        return Regime(RegimeTag.UNIT_R)
    if params.r >= large_r_bound(params):
        return Regime(RegimeTag.LARGE_R)
    if small_params(params):
        return Regime(RegimeTag.SMALL_PARAMS)
    return Regime(RegimeTag.SUM_CONDITION, needs_instance=True)


def evaluate(g: ColoredMultigraph, params: GddParams) -> Verdict:
    """Full decision for one colored instance: yes, no, or undetermined."""
    regime = classify_regime(params)
    if regime.tag is RegimeTag.BOUNDARY:
        v = check_boundary_conditions(g, params)
        return Verdict(v.embeddable, v.violated, v.stats, regime)
    v = check_main_conditions(g, params)
    if v.violated:
        return Verdict("no", v.violated, v.stats, regime)
    if check_sum_condition(v.stats, params):
        tag = RegimeTag.SUM_CONDITION if regime.needs_instance else regime.tag
        return Verdict("yes", (), v.stats, Regime(tag))
    if regime.tag in GUARANTEED:
        raise ContractViolation("sum inequality failed in a regime that guarantees it")
    return Verdict("undetermined", (), v.stats, Regime(RegimeTag.UNDETERMINED), unmet=(EQ2,))
