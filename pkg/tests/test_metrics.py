# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Measure tests."""

import math
import random
from fractions import Fraction
from itertools import permutations

import pytest

from mfc_grouping.errors import EmptyGroupError, InvalidConfigError
from mfc_grouping.metrics import compute_metrics, dataset_balance, \
    describe_instance, group_balance, grouping_balance, log_nash_product, \
    nash_normalized, nash_product, satisfaction
from mfc_grouping.records import Grouping


def _welfare(table):
    return lambda student, topic: table.get((student, topic), 0.0)


def test_nash_product_of_two_groups():
    welfare = _welfare({(1, 1): 1.0, (2, 1): 2.0, (3, 2): 4.0})
    grouping = Grouping({1: [1, 2], 2: [3]})
    assert nash_product(grouping, welfare) == 20.0
    assert log_nash_product(grouping, welfare) == pytest.approx(math.log(20))


def test_nash_product_single_group_and_zero_welfare():
    welfare = _welfare({(1, 1): 2.5})
    assert nash_product(Grouping({1: [1]}), welfare) == 3.5
    assert nash_product(Grouping({1: [2, 3], 2: [4]}), welfare) == 1.0


def test_nash_product_of_empty_grouping(caplog):
    assert nash_product(Grouping(), _welfare({})) == 1.0
    assert "empty grouping" in caplog.text


def test_nash_product_permutation_invariance():
    rng = random.Random(7)
    table = {
        (s, t): rng.choice([0.0, 1.0, 1.5, 3.0])
        for s in range(1, 7) for t in range(1, 4)
    }
    welfare = _welfare(table)
    groups = {1: [1, 2], 2: [3, 4], 3: [5, 6]}
    expected = nash_product(Grouping(groups), welfare)
    for order in permutations(groups.items()):
        shuffled = Grouping({t: members[::-1] for t, members in order})
        assert nash_product(shuffled, welfare) == pytest.approx(expected)


@pytest.mark.parametrize("value,k,expected", [
    (20.0, 2, math.log2(20)),
    (1.0, 2, 0.0),
    (1.0, 7, 0.0),
    (5.0 ** 3, 5, 3.0),
    (2.0 ** 3, 2, 3.0),
])
def test_nash_normalized(value, k, expected):
    assert abs(nash_normalized(value, k) - expected) <= 1e-12


def test_nash_normalized_with_one_group(caplog):
    assert nash_normalized(math.e, 1) == pytest.approx(1.0)
    assert "natural log" in caplog.text
    with pytest.raises(ValueError):
        nash_normalized(0.5, 2)


@pytest.mark.parametrize("categories,expected", [
    ([0, 0, 1, 1], Fraction(1)),
    ([0, 1, 1, 1], Fraction(1, 3)),
    ([1, 0, 0, 0], Fraction(1, 3)),
    ([1, 1, 1, 1], Fraction(0)),
    ([0, 0, 0, 0], Fraction(0)),
])
def test_group_balance(categories, expected):
    members = list(range(1, len(categories) + 1))
    lookup = dict(zip(members, categories))
    assert group_balance(members, lookup) == expected


def test_group_balance_symmetry():
    lookup = {1: 0, 2: 1, 3: 1, 4: 0, 5: 1}
    flipped = {s: 1 - c for s, c in lookup.items()}
    for size in range(1, 6):
        members = list(range(1, size + 1))
        assert group_balance(members, lookup) == \
            group_balance(members, flipped)


def test_group_balance_of_empty_group():
    with pytest.raises(EmptyGroupError):
        group_balance([], {})


def test_grouping_balance_is_the_minimum():
    lookup = {1: 0, 2: 1, 3: 0, 4: 1, 5: 1, 6: 1}
    assert grouping_balance(
        Grouping({1: [1, 2], 2: [3, 4, 5, 6]}), lookup
    ) == Fraction(1, 3)
    assert grouping_balance(Grouping({1: [1, 2]}), lookup) == 1


def test_satisfaction():
    wishes = [[1, 2], [2, 3], [3, 1], [1, 3], [2, 1]]
    grouping = Grouping({1: [1, 2, 3], 2: [4, 5]})
    assert satisfaction(grouping, wishes, 5) == Fraction(3, 5)
    assert satisfaction(
        Grouping({1: [1], 3: [2, 3, 4, 5]}), wishes, 5
    ) == Fraction(4, 5)
    assert satisfaction(Grouping({4: [1, 2, 3, 4, 5]}), wishes, 5) == 0
    with pytest.raises(InvalidConfigError):
        satisfaction(grouping, wishes, 0)


def test_compute_metrics(six_students):
    grouping = Grouping({1: [1, 2, 6], 2: [3, 4], 3: [5]})
    metrics = compute_metrics(grouping, six_students)
    welfare = six_students.welfare
    sums = [
        sum(welfare(s, t) for s in members)
        for t, members in grouping.items()
    ]
    assert metrics.nash_product == pytest.approx(
        math.prod(1 + s for s in sums)
    )
    assert metrics.log_nash == pytest.approx(math.log(metrics.nash_product))
    assert metrics.nash_normalized == pytest.approx(
        math.log(metrics.nash_product, 3)
    )
    assert metrics.group_count == 3
    assert metrics.cardinalities == (3, 2, 1)
    assert (metrics.min_card, metrics.max_card) == (1, 3)
    # categories 0, 1, 0, 1, 0, 1
    assert metrics.balance == 0
    assert metrics.satisfaction == 1
    assert 0 <= metrics.satisfaction <= 1
    assert metrics.warnings == ()


def test_compute_metrics_with_one_group(six_students):
    metrics = compute_metrics(
        Grouping({1: [1, 2, 3, 4, 5, 6]}), six_students
    )
    assert metrics.group_count == 1
    assert metrics.nash_normalized == pytest.approx(metrics.log_nash)
    assert len(metrics.warnings) == 1


def test_dataset_figures(roster):
    assert dataset_balance(roster) == Fraction(1, 2)
    assert describe_instance(roster) == {
        "n": 24,
        "m": 16,
        "h": 3,
        "category_0": 16,
        "category_1": 8,
        "balance": Fraction(1, 2),
    }


@pytest.mark.parametrize("k", [2, 3, 7])
def test_nash_normalized_increases_with_nash(k):
    values = [1, 1.5, 2, 10, 1e3, 1e9]
    normalized = [nash_normalized(value, k) for value in values]
    assert all(a < b for a, b in zip(normalized, normalized[1:]))


@pytest.mark.parametrize("seed", range(5))
def test_satisfaction_ignores_wish_order(seed):
    rng = random.Random(seed)
    n, m = 12, 5
    wishes = [rng.sample(range(1, m + 1), 3) for _ in range(n)]
    groups = {}
    for student in range(1, n + 1):
        groups.setdefault(rng.randint(1, m), []).append(student)
    grouping = Grouping(groups)
    shuffled = [rng.sample(row, len(row)) for row in wishes]
    assert satisfaction(grouping, shuffled, n) == \
        satisfaction(grouping, wishes, n)
