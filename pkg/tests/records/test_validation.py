# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Validation and feasibility tests."""

import random

import numpy as np
import pytest

from mfc_grouping.errors import InfeasibleBoundsError, InvalidGroupingError
from mfc_grouping.records import Bounds, Grouping, Instance, \
    check_feasibility, is_complete_partition, require_feasible, \
    validate_instance


def _replace_arrays(instance, **arrays):
    fields = dict(
        students=instance.students,
        m=instance.m,
        wishes=instance.wishes,
        interest=instance.interest,
        priority=instance.priority,
        bounds=instance.bounds,
    )
    fields.update(arrays)
    return Instance(**fields)


def test_valid_instance(figure_instance):
    report = validate_instance(figure_instance)
    assert report.passed
    assert report
    assert figure_instance.validation == report


def test_duplicate_wish(figure_instance):
    wishes = np.array(figure_instance.wishes)
    wishes[0] = [1, 1]
    report = validate_instance(_replace_arrays(figure_instance, wishes=wishes))
    assert not report
    assert any("duplicate wish" in v for v in report.violations)


def test_interest_support_mismatch(figure_instance):
    interest = np.array(figure_instance.interest)
    # student 1 wishes topics 1 and 2 only
    interest[0, 3] = 1.0
    report = validate_instance(
        _replace_arrays(figure_instance, interest=interest)
    )
    assert any("V support mismatch" in v for v in report.violations)


def test_priority_order_violation(figure_instance):
    priority = np.array(figure_instance.priority)
    # topic 1 choosers by time: 2 (t=1), 4 (t=2), 1 (t=3)
    priority[[1, 3], 0] = priority[[3, 1], 0]
    report = validate_instance(
        _replace_arrays(figure_instance, priority=priority)
    )
    assert any("W order violation" in v for v in report.violations)


def test_registration_ties_are_noted(instance_factory):
    instance = instance_factory(
        wishes=[[1, 2], [1, 2], [2, 1]],
        categories=[0, 1, 0],
        times=[1, 1, 2],
        bounds=(1, 2),
    )
    report = validate_instance(instance)
    assert report.passed
    assert any("registration tie on topic 1" in n for n in report.notes)
    # ties resolve by id: student 1 before student 2
    assert instance.priority[0, 0] > instance.priority[1, 0]


@pytest.mark.parametrize("n,bounds,m,k_range", [
    (24, Bounds(5, 6), 16, (4, )),
    (3, Bounds(4, 5), 10, ()),
    (4, Bounds(2, 3), 2, (2, )),
    (7, Bounds(2, 3), 4, (3, )),
    (12, Bounds(2, 4), 8, (3, 4, 5, 6)),
])
def test_check_feasibility(n, bounds, m, k_range):
    verdict = check_feasibility(n, bounds, m)
    assert verdict.k_range == k_range
    assert bool(verdict) == bool(k_range)


def test_require_feasible_names_the_range():
    with pytest.raises(InfeasibleBoundsError) as error:
        require_feasible(3, Bounds(4, 5), 10)
    assert "empty k-range" in str(error.value)
    assert require_feasible(4, Bounds(2, 3), 2).k_min == 2


@pytest.mark.parametrize("seed", range(5))
def test_feasibility_grows_with_upper_bound(seed):
    rng = random.Random(seed)
    for _ in range(200):
        n = rng.randint(1, 60)
        m = rng.randint(1, 20)
        lower = rng.randint(1, 8)
        upper = rng.randint(lower, lower + 5)
        if check_feasibility(n, Bounds(lower, upper), m):
            assert check_feasibility(n, Bounds(lower, upper + 1), m)


def test_feasible_instance_batches(feasible_instances):
    instances = feasible_instances(10, 4, (6, 20), (3, 8), 2, (2, 4))
    assert len(instances) == 10
    for instance in instances:
        assert instance.bounds.upper == instance.bounds.lower + 1
        assert check_feasibility(instance.n, instance.bounds, instance.m)


def test_is_complete_partition(instance_factory):
    instance = instance_factory(
        wishes=[[1, 2], [1, 2], [2, 1], [2, 1]],
        categories=[0, 1, 0, 1],
        bounds=(2, 3),
    )
    assert is_complete_partition(Grouping({1: [1, 2], 2: [3, 4]}), instance)
    assert not is_complete_partition(Grouping({1: [1, 2], 2: [3]}), instance)
    assert not is_complete_partition(
        Grouping({1: [1, 2, 3], 2: [4]}), instance
    )
    with pytest.raises(InvalidGroupingError):
        is_complete_partition(Grouping({1: [1, 2], 2: [3, 4, 9]}), instance)
