# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Exhaustive search over all assignments of tiny instances.

Every student is tried on every topic, depth first in lexicographic order
of the assignment vector, pruning as soon as a group exceeds ``C_u``.
Complete assignments whose non-empty groups all hold at least ``C_l``
students are scored by their Nash product; ties go to the higher
balance, then to the first assignment found.
"""

import logging
import math
from dataclasses import replace

from .. import config as mfc_config
from ..errors import InfeasibleBoundsError, StateBudgetExceededError
from ..metrics import grouping_balance
from ..records import Grouping
from .base import Solver, SolverConfig

logger = logging.getLogger(__name__)


def _assignments(n, m, upper):
    """Yield assignment vectors (topic per student) with sizes <= upper."""
    vector = [0] * n
    sizes = [0] * (m + 1)

    def extend(i):
        if i == n:
            yield tuple(vector)
            return
        for topic in range(1, m + 1):
            if sizes[topic] == upper:
                continue
            vector[i] = topic
            sizes[topic] += 1
            yield from extend(i + 1)
            sizes[topic] -= 1

    yield from extend(0)


def _grouping(vector, student_ids):
    groups = {}
    for student, topic in zip(student_ids, vector):
        groups.setdefault(topic, []).append(student)
    return Grouping(groups)


class OracleSolver(Solver):
    """Brute-force optimum of the Nash product, for tests and checks."""

    name = "oracle"

    def check_budget(self, instance):
        """Refuse instances whose ``m**n`` exceeds the state budget."""
        states = instance.m ** instance.n
        if states > self.config.max_states:
            raise StateBudgetExceededError(states, self.config.max_states)
        return states

    def group(self, instance):
        """Enumerate every assignment and keep the best feasible one."""
        self.check_budget(instance)
        welfare = instance.welfare.entries
        ids = instance.student_ids
        lower, upper = instance.bounds.lower, instance.bounds.upper
        tolerance = mfc_config.MFC_FLOAT_TOLERANCE

        best = None
        best_log = -math.inf
        best_balance = None
        for vector in _assignments(instance.n, instance.m, upper):
            sums = {}
            for student, topic in zip(ids, vector):
                sums[topic] = sums.get(topic, 0.0) \
                    + welfare[student - 1, topic - 1]
            sizes = {}
            for topic in vector:
                sizes[topic] = sizes.get(topic, 0) + 1
            if any(size < lower for size in sizes.values()):
                continue
            log_nash = math.fsum(math.log1p(s) for s in sums.values())
            if log_nash < best_log - tolerance:
                continue
            grouping = _grouping(vector, ids)
            balance = grouping_balance(grouping, instance.categories)
            if log_nash <= best_log + tolerance and balance <= best_balance:
                continue
            best, best_log, best_balance = grouping, log_nash, balance

        if best is None:
            raise InfeasibleBoundsError(
                instance.n, instance.bounds, instance.m
            )
        logger.debug("Oracle optimum ln(L)=%s balance=%s",
                     best_log, best_balance)
        return best


def oracle_solve(instance, max_states=None, config=None):
    """Exhaustive optimum.

    :returns: ``(Grouping, MetricsReport, optimal_nash)``.
    :raises StateBudgetExceededError: when ``m**n > max_states``.
    """
    config = config or SolverConfig.build()
    if max_states is not None:
        config = replace(config, max_states=max_states)
    grouping, metrics = OracleSolver(config).solve(instance)
    return grouping, metrics, metrics.nash_product
