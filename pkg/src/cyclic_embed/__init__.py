"""Wirelength laboratory for folded hypercubes on cycle-of-ladders and
circulants on star-of-cycle graphs."""

from .constructions import (
    algorithm_a,
    algorithm_b,
    theorem_a_wirelength,
    theorem_b_formula,
    theorem_b_wirelength,
)
from .engine import (
    CutPartition,
    EdgeCut,
    Embedding,
    edge_congestion,
    make_cut,
    route_all,
    verify_mcl,
    wirelength_by_cuts,
    wirelength_by_distance,
)
from .graphs import Graph
from .isoperimetric import (
    BudgetExceeded,
    IsoperimetricProfile,
    circulant_xi,
    exact_profile,
    lex_segment_profile,
)
from .oracle import OracleResult, brute_force_min_wirelength, certify_optimal

__version__ = "0.1.0"
