# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Grouping methods."""

from ..errors import InvalidConfigError
from .adjustment import group_adjustment
from .base import HeuristicConfig, Solver, SolverConfig
from .heuristic import HeuristicSolver, heuristic_solve, initial_assignment
from .knapsack import KnapsackItem, KnapsackSelection, KnapsackSolver, \
    knapsack_01, knapsack_assignment, knapsack_solve
from .oracle import OracleSolver, oracle_solve

SOLVERS = {
    HeuristicSolver.name: HeuristicSolver,
    KnapsackSolver.name: KnapsackSolver,
    OracleSolver.name: OracleSolver,
}
"""Solver classes by method name."""


def get_solver(method, config=None):
    """Instantiate the solver registered under ``method``."""
    try:
        return SOLVERS[method](config)
    except KeyError:
        raise InvalidConfigError(
            f"unknown method {method!r}, expected one of {sorted(SOLVERS)}"
        )


def solve(instance, method="heuristic", **options):
    """Group ``instance`` with ``method``.

    :param options: :class:`SolverConfig` overrides.
    :returns: a ``(Grouping, MetricsReport)`` pair.
    """
    return get_solver(method, SolverConfig.build(**options)).solve(instance)


__all__ = (
    'HeuristicConfig',
    'HeuristicSolver',
    'KnapsackItem',
    'KnapsackSelection',
    'KnapsackSolver',
    'OracleSolver',
    'SOLVERS',
    'Solver',
    'SolverConfig',
    'get_solver',
    'group_adjustment',
    'heuristic_solve',
    'initial_assignment',
    'knapsack_01',
    'knapsack_assignment',
    'knapsack_solve',
    'oracle_solve',
    'solve',
)
