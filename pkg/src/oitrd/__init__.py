"""Exact outer-independent total Roman domination: generators, solvers, certificate builders and bound audits."""

from .graph import DomainError, Graph, InputError, build_graph, degree_profile, set_predicate
from .labeling import RomanLabeling, Variant, make_labeling, validate
from .solvers import ParameterRecord, SolverTimeout, full_record, solve_roman_parameter, solve_set_parameter

__all__ = [
    "DomainError",
    "Graph",
    "InputError",
    "ParameterRecord",
    "RomanLabeling",
    "SolverTimeout",
    "Variant",
    "build_graph",
    "degree_profile",
    "full_record",
    "make_labeling",
    "set_predicate",
    "solve_roman_parameter",
    "solve_set_parameter",
    "validate",
]
