"""End-to-end embedding of a colored K(a^(p)) into a Hamiltonian decomposition of K(a^(p+r))."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Optional

from .amalgamation import (HUB, AmalgamationState, build_g1, build_g3, extend_coloring_a,
                           hub_copy, new_vertex, reabsorb_extra_color)
from .conditions import RegimeTag, Verdict, evaluate
from .detachment import DetachmentPlan, DetachmentStats, eta_detach
from .errors import ContractViolation
from .family import GddParams, conforms_to_gdd
from .multigraph import ColoredMultigraph

log = logging.getLogger(__name__)


@dataclass
class EmbedReport:
    verdict: Verdict
    params: GddParams
    result: Optional[ColoredMultigraph] = None
    trace: list = field(default_factory=list)


@dataclass
class EmbeddingCheck:
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def embed(g: ColoredMultigraph, params: GddParams, seed: int = 0) -> EmbedReport:
    verdict = evaluate(g, params)
    report = EmbedReport(verdict, params)
    if verdict.embeddable != "yes":
        return report
    boundary = verdict.regime.tag is RegimeTag.BOUNDARY
    r, a = params.r, params.a

    state = build_g1(g, params)
    state = extend_coloring_a(state, params, verdict.stats, boundary=boundary)
    report.trace.append({"stage": "G1", "hub_loops": state.graph.loop_count(HUB),
                         "b": list(state.b)})

    dstats = DetachmentStats()
    hubs = [hub_copy(params, i) for i in range(1, r + 1)]
    plan = DetachmentPlan({HUB: r}, {HUB: hubs})
    g2 = eta_detach(state.graph, plan, seed=seed, stats=dstats)
    state = replace(state, graph=g2, stage="G2")
    report.trace.append({"stage": "detach-r", "steps": dstats.steps,
                         "fallback": dstats.fallback_used})

    state = reabsorb_extra_color(state, params)
    report.trace.append({"stage": "reabsorb", "b_prime": list(state.b_prime)})

    state = build_g3(state, params)
    report.trace.append({"stage": "G3", "loops_per_hub": state.graph.loop_count(hubs[0])})

    dstats = DetachmentStats()
    plan = DetachmentPlan({x: a for x in hubs},
                          {x: [new_vertex(params, i, s) for s in range(1, a + 1)]
                           for i, x in enumerate(hubs, start=1)})
    g4 = eta_detach(state.graph, plan, seed=seed + 1, stats=dstats)
    report.trace.append({"stage": "detach-a", "steps": dstats.steps,
                         "fallback": dstats.fallback_used})

    check = verify_embedding(g, g4, params)
    if not check.ok:
        raise ContractViolation(f"constructed embedding fails verification: {check.failures}")
    log.debug("embedding trace: %s", report.trace)
    report.result = g4
    return report


def verify_embedding(g: ColoredMultigraph, result: ColoredMultigraph,
                     params: GddParams) -> EmbeddingCheck:
    """Independent check that ``result`` is a Hamiltonian decomposition of
    K(a^(p+r)) whose restriction to the first p parts is exactly ``g``."""
    failures = []
    if not conforms_to_gdd(result, params, params.total_parts):
        failures.append("result is not K(a^(p+r); lambda, mu)")
    k = g.num_colors
    if any(not 1 <= e.color <= k for e in result.edges):
        failures.append("edge colors outside 1..k")
    for j in range(1, k + 1):
        if not result.color_class(j).is_hamiltonian_cycle():
            failures.append(f"color class {j} is not a Hamiltonian cycle")
    key = lambda v: (v.part, v.slot)
    old = {key(v) for v in g.vertices}
    restricted = [(frozenset((key(e.u), key(e.v))), e.color) for e in result.edges
                  if key(e.u) in old and key(e.v) in old]
    original = [(frozenset((key(e.u), key(e.v))), e.color) for e in g.edges]
    if Counter(restricted) != Counter(original):
        failures.append("restriction to the original parts differs from the input coloring")
    return EmbeddingCheck(failures)
