"""
Edge swaps that raise q(G) on the near-extremal configurations with Δ = n - 1.
"""
from qplanar.rewiring.configs import build_config, check_parameters, config_edges, plan_for
from qplanar.rewiring.data import CONFIGS, IncreaseCheck, Reduction, SwapPlan, SwapReport
from qplanar.rewiring.swap import (
    apply_swap,
    detect_config,
    is_H,
    perron_orderings,
    reduce_to_H,
    swap_demo,
    verify_increase,
)

__all__ = [
    "CONFIGS",
    "IncreaseCheck",
    "Reduction",
    "SwapPlan",
    "SwapReport",
    "apply_swap",
    "build_config",
    "check_parameters",
    "config_edges",
    "detect_config",
    "is_H",
    "perron_orderings",
    "plan_for",
    "reduce_to_H",
    "swap_demo",
    "verify_increase",
]
