# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Preference-first heuristic.

Students are first placed in the group of their most preferred topic,
strongest welfare first, then :func:`group_adjustment` repairs the
cardinalities.
"""

import logging

from .adjustment import GroupState, group_adjustment
from .base import Solver, SolverConfig

logger = logging.getLogger(__name__)


def initial_assignment(instance, config):
    """Assign students by preference rank, capping groups at ``C_l``.

    For each rank ``p = 1..h`` and each topic in index order, unassigned
    students whose ``p``-th wish is the topic are admitted by descending
    welfare while the group holds fewer than ``C_l`` students.

    :returns: a partial :class:`~mfc_grouping.records.Grouping`.
    """
    state = GroupState(instance, config)
    lower = instance.bounds.lower
    for p in range(instance.h):
        by_topic = {}
        for student in state.unassigned():
            topic = int(instance.wishes[student - 1, p])
            by_topic.setdefault(topic, []).append(student)
        for topic in sorted(by_topic):
            state.admit_best(topic, by_topic[topic], lower)
    logger.debug(
        "Initial assignment placed %s of %s students",
        len(state.assignment), instance.n,
    )
    return state.freeze()


class HeuristicSolver(Solver):
    """Greedy preference-first assignment followed by adjustment."""

    name = "heuristic"

    def group(self, instance):
        """Compute the grouping of a feasible instance."""
        partial = initial_assignment(instance, self.config)
        return group_adjustment(partial, instance, self.config)


def heuristic_solve(instance, config=None):
    """Solve with :class:`HeuristicSolver`; returns grouping and metrics."""
    return HeuristicSolver(config or SolverConfig.build()).solve(instance)
