# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Group adjustment shared by the heuristic and the knapsack solvers.

Adjustment turns a partial grouping into a complete one whose group sizes
all lie in ``[C_l, C_u]``. It runs three phases:

1. unassigned students join groups that are still below ``C_l``,
   preferring groups of their own wishes;
2. while students remain unassigned, the topic most wished by them gets
   (or extends) a group of its wishers, up to ``C_u``. When no wished
   topic can take anybody, a group is opened on the lowest unused topic;
3. for sizes ``1 .. C_l - 1``, groups of that size are resolved, cheapest
   welfare first. A group is disbanded when the other groups have enough
   free seats for its members, otherwise it is topped up to ``C_l`` with
   members of groups larger than ``C_l``.

On feasible bounds one of the two repairs of phase 3 always applies, so
the result is a complete partition.
"""

import logging
from collections import Counter

from ..errors import AdjustmentDidNotConvergeError, InfeasibleBoundsError
from ..metrics import group_balance
from ..records import Grouping

logger = logging.getLogger(__name__)


class GroupState:
    """Mutable groups under construction for one instance."""

    def __init__(self, instance, config, grouping=None):
        """Constructor.

        :param grouping: optional :class:`Grouping` to start from.
        """
        self.instance = instance
        self.config = config
        self.bounds = instance.bounds
        self.welfare = instance.welfare
        self.categories = instance.categories
        self.rank = instance.registration_rank
        self.groups = {}
        self.assignment = {}
        for topic, members in (grouping.items() if grouping else ()):
            for student in members:
                self.add(student, topic)

    #
    # Bookkeeping
    #
    def add(self, student, topic):
        """Put an unassigned student in the group of ``topic``."""
        self.groups.setdefault(topic, []).append(student)
        self.assignment[student] = topic

    def remove(self, student):
        """Take a student out of its group; drop the group if emptied."""
        topic = self.assignment.pop(student)
        members = self.groups[topic]
        members.remove(student)
        if not members:
            del self.groups[topic]
        return topic

    def size(self, topic):
        """Current size of the group of ``topic`` (0 if none)."""
        return len(self.groups.get(topic, ()))

    def has_room(self, topic):
        """Whether the group of ``topic`` is below ``C_u``."""
        return self.size(topic) < self.bounds.upper

    def unassigned(self):
        """Unassigned students in registration order."""
        return sorted(
            (s for s in self.instance.student_ids
             if s not in self.assignment),
            key=self.rank.get,
        )

    def welfare_sum(self, topic):
        """Total welfare of the group of ``topic``."""
        return sum(self.welfare(s, topic) for s in self.groups[topic])

    def freeze(self):
        """Immutable :class:`Grouping` of the current groups."""
        return Grouping(self.groups)

    #
    # Tie-breaking keys
    #
    def balance_key(self, topic, student):
        """Sort key favoring the more balanced group once joined."""
        if not self.config.balance_tiebreak:
            return 0
        return -group_balance(
            self.groups.get(topic, []) + [student], self.categories
        )

    def admission_key(self, topic, student):
        """Order candidates for a seat in the group of ``topic``."""
        return (
            -self.welfare(student, topic),
            self.balance_key(topic, student),
            self.rank[student],
            student,
        )

    def admit_best(self, topic, candidates, limit):
        """Admit candidates by :meth:`admission_key` while size < limit.

        Admitted students are removed from ``candidates``.
        """
        admitted = []
        while candidates and self.size(topic) < limit:
            best = min(
                candidates, key=lambda s: self.admission_key(topic, s)
            )
            candidates.remove(best)
            self.add(best, topic)
            admitted.append(best)
        return admitted

    def smallest_open_group(self, student, predicate):
        """Smallest group satisfying ``predicate``, balance then index."""
        topics = [t for t in self.groups if predicate(t)]
        if not topics:
            return None
        return min(
            topics,
            key=lambda t: (self.size(t), self.balance_key(t, student), t),
        )


#
# Phases
#
def _fill_undersized(state):
    """Place unassigned students into groups smaller than ``C_l``."""
    lower = state.bounds.lower
    for student in state.unassigned():
        undersized = [t for t in state.groups if state.size(t) < lower]
        if not undersized:
            break
        wished = [
            t for t in state.instance.wish_list(student) if t in undersized
        ]
        if wished:
            target = wished[0]
        else:
            target = state.smallest_open_group(
                student, lambda t: state.size(t) < lower
            )
        state.add(student, target)


def _open_prevalent_groups(state):
    """Group remaining students around the topics they wish most."""
    instance = state.instance
    while True:
        remaining = state.unassigned()
        if not remaining:
            return
        demand = Counter(
            t for s in remaining for t in instance.wish_list(s)
        )
        actionable = sorted(
            (t for t in demand if state.has_room(t)),
            key=lambda t: (-demand[t], t),
        )
        if actionable:
            topic = actionable[0]
            wishers = [s for s in remaining if topic in instance.wish_list(s)]
            state.admit_best(topic, wishers, state.bounds.upper)
            logger.debug("Prevalent topic %s now has %s members",
                         topic, state.size(topic))
            continue

        unused = [
            t for t in range(1, instance.m + 1) if t not in state.groups
        ]
        if unused:
            state.admit_best(unused[0], remaining, state.bounds.upper)
            continue

        for student in remaining:
            target = state.smallest_open_group(student, state.has_room)
            if target is None:
                raise InfeasibleBoundsError(
                    instance.n, state.bounds, instance.m
                )
            state.add(student, target)


def _place_freed(state, student):
    """Seat a student taken out of a disbanded group."""
    for topic in state.instance.wish_list(student):
        if topic in state.groups and state.has_room(topic):
            state.add(student, topic)
            return
    state.add(student, state.smallest_open_group(student, state.has_room))


def _disband(state, topic):
    members = sorted(state.groups[topic], key=state.rank.get)
    for student in members:
        state.remove(student)
    for student in members:
        _place_freed(state, student)
    logger.debug("Disbanded group %s, reassigned %s", topic, members)


def _borrow(state, topic):
    """Top the group of ``topic`` up to ``C_l`` from larger groups."""
    lower = state.bounds.lower
    while state.size(topic) < lower:
        moves = [
            (donor, s)
            for donor, members in state.groups.items()
            if donor != topic and len(members) > lower
            for s in members
        ]
        if not moves:
            raise InfeasibleBoundsError(
                state.instance.n, state.bounds, state.instance.m
            )
        donor, student = min(
            moves,
            key=lambda move: (
                state.welfare(move[1], move[0])
                - state.welfare(move[1], topic),
                state.balance_key(topic, move[1]),
                state.rank[move[1]],
                move[1],
            ),
        )
        state.remove(student)
        state.add(student, topic)
    logger.debug("Topped up group %s to %s members", topic, lower)


def _resolve_small_groups(state):
    """Repair every group below ``C_l``, smallest sizes first."""
    instance = state.instance
    budget = max(1, state.config.safety_factor * instance.n * instance.m)
    iterations = 0
    for n_items in range(1, state.bounds.lower):
        while True:
            small = [t for t in state.groups if state.size(t) == n_items]
            if not small:
                break
            iterations += 1
            if iterations > budget:
                raise AdjustmentDidNotConvergeError(budget)
            topic = min(small, key=lambda t: (state.welfare_sum(t), t))
            spare = sum(
                state.bounds.upper - state.size(t)
                for t in state.groups if t != topic
            )
            if spare >= n_items:
                _disband(state, topic)
            else:
                _borrow(state, topic)


def group_adjustment(partial, instance, config):
    """Complete a partial grouping within the cardinality bounds.

    :param partial: a disjoint :class:`Grouping`, possibly leaving students
        out or with groups outside the bounds (at most ``C_u`` members).
    :returns: a complete in-bounds :class:`Grouping`.
    """
    state = GroupState(instance, config, partial)
    _fill_undersized(state)
    _open_prevalent_groups(state)
    _resolve_small_groups(state)
    return state.freeze()
