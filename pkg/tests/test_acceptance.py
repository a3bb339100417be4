# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""End-to-end properties of the solvers on seeded random instances."""

import time

import pytest
from scipy.stats import spearmanr

from mfc_grouping.fixtures import GeneratorConfig, generate_semisynthetic
from mfc_grouping.records import is_complete_partition
from mfc_grouping.solvers import heuristic_solve, knapsack_solve, oracle_solve
from mfc_grouping.sweep import SweepConfig, run_sweep

SOLVE = {"heuristic": heuristic_solve, "knapsack": knapsack_solve}


def test_complete_partitions(feasible_instances):
    instances = feasible_instances(
        200, 1, n_range=(6, 60), m_range=(3, 30), h=3, lower_range=(2, 6)
    )
    for instance in instances:
        for solve in SOLVE.values():
            grouping, metrics = solve(instance)
            assert is_complete_partition(grouping, instance)
            assert all(
                size in instance.bounds for size in metrics.cardinalities
            )


def test_oracle_bound(feasible_instances, instance_factory):
    instances = feasible_instances(
        49, 2, n_range=(4, 7), m_range=(2, 4), h=2, lower_range=(1, 3)
    )
    # no contention, every student alone on its first wish
    instances.append(instance_factory(
        wishes=[[1, 2], [2, 3], [3, 4], [4, 1]],
        categories=[0, 1, 0, 1],
        m=4,
        bounds=(1, 2),
    ))
    reached = 0
    for instance in instances:
        _, _, optimum = oracle_solve(instance)
        for solve in SOLVE.values():
            _, metrics = solve(instance)
            assert metrics.nash_product <= optimum * (1 + 1e-9)
            reached += metrics.nash_product >= optimum * (1 - 1e-9)
    assert reached >= 1


@pytest.mark.slow
@pytest.mark.parametrize("method", sorted(SOLVE))
def test_satisfaction_decreases_with_cardinality(method):
    instance = generate_semisynthetic(GeneratorConfig(395, 200, 3, seed=7))
    result = run_sweep(
        instance, SweepConfig(lower_range=(2, 18), methods=(method,))
    )
    rows = result.rows_for(method)
    assert len(rows) == 17
    assert all(row.ok for row in rows)
    rho, _ = spearmanr(
        [row.bounds.lower for row in rows],
        [float(row.metrics.satisfaction) for row in rows],
    )
    assert rho < 0


def _best_time(solve, instance, repeat=3):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        solve(instance)
        times.append(time.perf_counter() - start)
    return min(times)


@pytest.mark.slow
@pytest.mark.parametrize("method", sorted(SOLVE))
def test_runtime_scaling(method):
    solve = SOLVE[method]
    timings = []
    for n in (100, 200, 400):
        instance = generate_semisynthetic(GeneratorConfig(n, 200, 3, seed=n))
        solve(instance)
        timings.append(_best_time(solve, instance))
    for smaller, larger in zip(timings, timings[1:]):
        assert larger < 4 * smaller
