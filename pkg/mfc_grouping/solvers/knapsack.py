# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Knapsack-based grouping.

Every topic, in turn, picks among the still unassigned students that wish
it the subset of maximal total welfare that fits a head-count budget. The
budget is ``C_l`` when the number of unassigned students is a multiple of
``C_l`` and ``C_u`` otherwise. :func:`group_adjustment` then repairs the
cardinalities.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .. import config as mfc_config
from ..metrics import group_balance
from .adjustment import GroupState, group_adjustment
from .base import Solver, SolverConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KnapsackItem:
    """A student competing for seats of one topic."""

    student_id: int
    weight: int
    value: float
    category: int = None


@dataclass(frozen=True)
class KnapsackSelection:
    """Items chosen by :func:`knapsack_01`."""

    items: tuple
    value: float
    weight: int

    @property
    def student_ids(self):
        """Ids of the selected students, ascending."""
        return tuple(item.student_id for item in self.items)


def knapsack_01(items, budget, tolerance=mfc_config.MFC_FLOAT_TOLERANCE):
    """Exact 0/1 knapsack by dynamic programming over items x budget.

    Among the selections of maximal value the one with the smallest
    student ids is returned: items are visited by ascending id and each is
    taken whenever taking it still allows the optimum. Items without
    positive value are never taken.

    :param items: iterable of :class:`KnapsackItem` with positive integer
        weights.
    :param budget: non-negative integer capacity.
    """
    items = sorted(items, key=lambda item: item.student_id)
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")
    for item in items:
        if item.weight <= 0:
            raise ValueError(f"weights must be positive, got {item.weight}")

    # best[i, w]: maximal value of items[i:] within capacity w
    best = np.zeros((len(items) + 1, budget + 1))
    for i in range(len(items) - 1, -1, -1):
        weight, value = items[i].weight, items[i].value
        best[i] = best[i + 1]
        if weight <= budget:
            best[i, weight:] = np.maximum(
                best[i + 1, weight:],
                best[i + 1, :budget + 1 - weight] + value,
            )

    chosen = []
    capacity = budget
    for i, item in enumerate(items):
        if item.value <= tolerance or item.weight > capacity:
            continue
        taken = best[i + 1, capacity - item.weight] + item.value
        if taken >= best[i, capacity] - tolerance:
            chosen.append(item)
            capacity -= item.weight
    return KnapsackSelection(
        items=tuple(chosen),
        value=float(sum(item.value for item in chosen)),
        weight=budget - capacity,
    )


def rebalance_selection(selection, items,
                        tolerance=mfc_config.MFC_FLOAT_TOLERANCE):
    """Swap equal-value, equal-weight items to raise the group balance.

    Balance is measured on the items' protected categories.

    Swaps keep the selection's total value and weight, so an optimal
    selection stays optimal. Each step applies the swap with the highest
    resulting balance (ties by smallest ids) until no swap improves it.
    """
    chosen = list(selection.items)
    if not chosen:
        return selection
    pool = sorted(items, key=lambda item: item.student_id)
    categories = {item.student_id: item.category for item in pool}

    def balance(group):
        return group_balance(
            [item.student_id for item in group], categories
        )

    current = balance(chosen)
    while True:
        candidates = []
        chosen_ids = {item.student_id for item in chosen}
        for out in chosen:
            for inc in pool:
                if inc.student_id in chosen_ids \
                        or inc.weight != out.weight \
                        or inc.category == out.category \
                        or abs(inc.value - out.value) > tolerance:
                    continue
                swapped = [inc if item is out else item for item in chosen]
                candidates.append((
                    -balance(swapped),
                    sorted(item.student_id for item in swapped),
                    swapped,
                ))
        if not candidates:
            break
        score, _, swapped = min(candidates, key=lambda c: c[:2])
        if -score <= current:
            break
        chosen, current = swapped, -score
    chosen.sort(key=lambda item: item.student_id)
    return KnapsackSelection(
        items=tuple(chosen), value=selection.value, weight=selection.weight
    )


def topic_order(instance, config):
    """Topics in the order the knapsack solver visits them."""
    topics = list(range(1, instance.m + 1))
    if config.topic_order == "demand":
        demand = instance.welfare.entries.sum(axis=0)
        topics.sort(key=lambda t: (-demand[t - 1], t))
    return topics


def knapsack_budget(n_items, bounds):
    """``C_l`` when ``n_items`` is a multiple of ``C_l``, else ``C_u``."""
    if bounds.lower > 0 and n_items % bounds.lower == 0:
        return bounds.lower
    return bounds.upper


def knapsack_assignment(instance, config):
    """Fill topics one by one with their knapsack-optimal wishers.

    :returns: a partial :class:`~mfc_grouping.records.Grouping`.
    """
    state = GroupState(instance, config)
    welfare = instance.welfare
    for topic in topic_order(instance, config):
        unassigned = state.unassigned()
        if not unassigned:
            break
        items = [
            KnapsackItem(
                student_id=s,
                weight=1,
                value=welfare(s, topic),
                category=instance.categories[s],
            )
            for s in unassigned if welfare(s, topic) > 0
        ]
        if not items:
            continue
        basis = len(unassigned) if config.mod_basis == "unassigned" \
            else instance.n
        selection = knapsack_01(items, knapsack_budget(basis, instance.bounds))
        if config.balance_tiebreak:
            selection = rebalance_selection(selection, items)
        for student in selection.student_ids:
            state.add(student, topic)
    logger.debug(
        "Knapsack assignment placed %s of %s students",
        len(state.assignment), instance.n,
    )
    return state.freeze()


class KnapsackSolver(Solver):
    """Per-topic maximal knapsack selection followed by adjustment."""

    name = "knapsack"

    def group(self, instance):
        """Compute the grouping of a feasible instance."""
        partial = knapsack_assignment(instance, self.config)
        return group_adjustment(partial, instance, self.config)


def knapsack_solve(instance, config=None):
    """Solve with :class:`KnapsackSolver`; returns grouping and metrics."""
    return KnapsackSolver(config or SolverConfig.build()).solve(instance)
