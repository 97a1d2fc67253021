"""Embed edge-colored K(a^(p); lambda, mu) into Hamiltonian decompositions of K(a^(p+r); lambda, mu)."""

from .conditions import (ClassStats, Regime, RegimeTag, Verdict, check_boundary_conditions,
                         check_main_conditions, check_sum_condition, class_stats_all,
                         classify_regime, evaluate)
from .detachment import (DetachmentPlan, amalgamate, eta_detach, validate_plan,
                         verify_detachment_contract)
from .euler import euler_circuit, two_factorize
from .family import GddParams, build_gdd, classify_edge, conforms_to_gdd
from .multigraph import ColoredMultigraph, Edge, VertexId
from .pipeline import EmbedReport, embed, verify_embedding

__version__ = "0.1.0"
