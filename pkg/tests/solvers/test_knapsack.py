# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Knapsack solver tests."""

import random

import pytest

from mfc_grouping.records import Bounds, Grouping, is_complete_partition
from mfc_grouping.serializers import render_grouping
from mfc_grouping.solvers import KnapsackItem, SolverConfig, knapsack_01, \
    knapsack_assignment, knapsack_solve, oracle_solve
from mfc_grouping.solvers.knapsack import knapsack_budget, \
    rebalance_selection, topic_order


def _items(values, weights=None, categories=None):
    weights = weights or [1] * len(values)
    categories = categories or [None] * len(values)
    return [
        KnapsackItem(student_id=i, weight=w, value=v, category=c)
        for i, (v, w, c) in enumerate(
            zip(values, weights, categories), start=1
        )
    ]


def _brute_force(items, budget):
    # every subset within budget, grown one item at a time
    totals = [(0, 0)]
    for item in items:
        totals += [
            (weight + item.weight, value + item.value)
            for weight, value in totals
            if weight + item.weight <= budget
        ]
    return max(value for _, value in totals)


def test_classic_instance():
    selection = knapsack_01(_items([60, 100, 120], [10, 20, 30]), 50)
    assert selection.value == 220
    assert selection.student_ids == (2, 3)
    assert selection.weight == 50


def test_zero_budget():
    selection = knapsack_01(_items([5, 3]), 0)
    assert selection.items == ()
    assert selection.value == 0


def test_unit_weights_take_the_top_values():
    values = [5, 9, 1, 7, 3, 8]
    for budget in range(len(values) + 1):
        selection = knapsack_01(_items(values), budget)
        top = sorted(values, reverse=True)[:budget]
        assert sorted(item.value for item in selection.items) == \
            sorted(top)


def test_equal_values_pick_smallest_ids():
    selection = knapsack_01(_items([4, 4, 2]), 2)
    assert selection.student_ids == (1, 2)
    assert selection.value == 8


def test_zero_values_are_never_taken():
    selection = knapsack_01(_items([0, 2, 0]), 3)
    assert selection.student_ids == (2,)


def test_invalid_input():
    with pytest.raises(ValueError):
        knapsack_01(_items([1]), -1)
    with pytest.raises(ValueError):
        knapsack_01(_items([1], [0]), 1)


def test_matches_brute_force():
    rng = random.Random(2022)
    for _ in range(500):
        size = rng.randint(0, 15)
        items = _items(
            [rng.randint(1, 50) for _ in range(size)],
            [rng.randint(1, 8) for _ in range(size)],
        )
        budget = rng.randint(0, 30)
        selection = knapsack_01(items, budget)
        assert selection.value == _brute_force(items, budget)
        assert selection.weight <= budget
        assert selection.weight == \
            sum(item.weight for item in selection.items)


def test_budget_rule():
    assert knapsack_budget(6, Bounds(3, 4)) == 3
    assert knapsack_budget(7, Bounds(3, 4)) == 4
    assert knapsack_budget(0, Bounds(3, 4)) == 3


def test_rebalance_swaps_equal_values():
    items = _items([4, 4, 4, 4], categories=[0, 0, 1, 1])
    selection = knapsack_01(items, 2)
    assert selection.student_ids == (1, 2)
    balanced = rebalance_selection(selection, items)
    assert balanced.student_ids == (1, 3)
    assert balanced.value == selection.value


def test_rebalance_reads_item_categories():
    items = _items([4, 4, 4], categories=[1, 1, 1])
    selection = knapsack_01(items, 2)
    assert rebalance_selection(selection, items) == selection
    items = _items([4, 4, 4], categories=[1, 1, 0])
    assert rebalance_selection(selection, items).student_ids == (1, 3)


def test_rebalance_keeps_the_optimum():
    items = _items([5, 4, 4], categories=[0, 0, 1])
    selection = knapsack_01(items, 2)
    assert selection.student_ids == (1, 2)
    balanced = rebalance_selection(selection, items)
    assert balanced.student_ids == (1, 3)
    assert balanced.value == 9


@pytest.fixture()
def seven_students(instance_factory):
    """One student wishes topic 1, six wish topic 2."""
    return instance_factory(
        wishes=[[1]] + [[2]] * 6,
        categories=[0, 1, 0, 1, 0, 1, 0],
        m=3,
        bounds=(2, 3),
    )


def test_mod_basis(seven_students):
    unassigned = knapsack_assignment(
        seven_students, SolverConfig.build(mod_basis="unassigned")
    )
    assert unassigned == Grouping({1: [1], 2: [2, 3]})
    overall = knapsack_assignment(
        seven_students, SolverConfig.build(mod_basis="global")
    )
    assert overall == Grouping({1: [1], 2: [2, 3, 4]})


def test_unwished_topic_gets_no_group(seven_students):
    partial = knapsack_assignment(seven_students, SolverConfig.build())
    assert 3 not in partial.topics


def test_step_one_groups_hold_wishers(feasible_instances):
    config = SolverConfig.build()
    for instance in feasible_instances(20, 3, (6, 40), (3, 12), 3, (2, 4)):
        partial = knapsack_assignment(instance, config)
        for topic, members in partial.items():
            assert len(members) <= instance.bounds.upper
            for student in members:
                assert instance.welfare(student, topic) > 0


def test_topic_order(instance_factory):
    instance = instance_factory(
        wishes=[[3, 1], [3, 2], [2, 3]],
        categories=[0, 1, 0],
        m=4,
    )
    index = SolverConfig.build(topic_order="index")
    demand = SolverConfig.build(topic_order="demand")
    assert topic_order(instance, index) == [1, 2, 3, 4]
    assert topic_order(instance, demand) == [3, 2, 1, 4]


def test_six_students(six_students):
    grouping, metrics = knapsack_solve(six_students)
    assert is_complete_partition(grouping, six_students)
    _, _, optimum = oracle_solve(six_students)
    assert metrics.nash_product <= optimum * (1 + 1e-9)


@pytest.mark.parametrize("options", [
    {},
    {"mod_basis": "global"},
    {"topic_order": "demand"},
    {"balance_tiebreak": False},
])
def test_roster(roster, options):
    config = SolverConfig.build(**options)
    for lower in range(2, 9):
        instance = roster.with_bounds(lower, lower + 1)
        grouping, _ = knapsack_solve(instance, config)
        assert is_complete_partition(grouping, instance)


def test_deterministic(roster):
    first = render_grouping(*knapsack_solve(roster), roster)
    second = render_grouping(*knapsack_solve(roster), roster)
    assert first == second
