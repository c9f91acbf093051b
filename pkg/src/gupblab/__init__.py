"""Toolkit for minimal-GUPB candidate analysis via orthogonality graphs.

Core layers: exact graph queries (`graphs`), isomorph-free regular-graph
enumeration and IO (`gen`), named fixtures (`catalog`), forbidden induced
subgraph filtering (`filtering`), the equality-propagation and numerical
FOR solver (`propagation`, `solver`), spanning certificates (`spanning`),
bound arithmetic (`bounds`) and end-to-end scenarios (`scenarios`).
"""

from .bounds import gupb_lower_bound, required_log_regularity
from .catalog import get_fixture, get_graph
from .filtering import ObstructionPattern, ObstructionSet, filter_graphs
from .gen import EnumerationSpec, enumerate_disconnected_regular, enumerate_regular
from .graphs import Graph, canonical_form, find_induced_embedding
from .propagation import propagate_equalities
from .representations import Representation, orthogonality_graph, verify_representation
from .scenarios import ScenarioConfig, emit_report, run_scenario
from .solver import solve_for
from .spanning import check_pair_spanning, check_single_party_spanning

__version__ = "0.1.0"

__all__ = [
    "EnumerationSpec",
    "Graph",
    "ObstructionPattern",
    "ObstructionSet",
    "Representation",
    "ScenarioConfig",
    "canonical_form",
    "check_pair_spanning",
    "check_single_party_spanning",
    "emit_report",
    "enumerate_disconnected_regular",
    "enumerate_regular",
    "filter_graphs",
    "find_induced_embedding",
    "get_fixture",
    "get_graph",
    "gupb_lower_bound",
    "orthogonality_graph",
    "propagate_equalities",
    "required_log_regularity",
    "run_scenario",
    "solve_for",
    "verify_representation",
]
