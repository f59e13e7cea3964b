"""Exact solver toolkit for SALBP-1 and the task-division variant TDALBP."""

from .bounds import BoundReport, bound_report, lb1, lb23, lb_bin
from .datasets import example2
from .expansion import ExpandedGraph, expand, feasible_activations
from .generator import GenConfig, generate, method_m, method_r, random_salbp, split_time
from .hoffmann import HeuristicConfig, mhh
from .instance import (Instance, InstanceError, ParseError, Solution, format_instance, metrics,
                       parse_instance, parse_solution, read_instance, solution_from_labels,
                       validate_solution)
from .milp import build_model, parse_lp_solution, write_lp
from .oracle import OracleResult, brute_force
from .solver import SolveResult, SolverConfig, solve

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "ExpandedGraph", "GenConfig", "HeuristicConfig", "Instance", "InstanceError",
    "OracleResult", "ParseError", "Solution", "SolveResult", "SolverConfig", "bound_report",
    "brute_force", "build_model", "example2", "expand", "feasible_activations", "format_instance",
    "generate", "random_salbp", "solution_from_labels",
    "lb1", "lb23", "lb_bin", "method_m", "method_r", "metrics", "mhh", "parse_instance",
    "parse_lp_solution", "parse_solution", "read_instance", "solve", "split_time",
    "validate_solution", "write_lp",
]
