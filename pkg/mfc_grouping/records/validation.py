# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Validity and feasibility checks shared by every module."""

import math
from dataclasses import dataclass
from itertools import groupby

import numpy as np

from ..errors import InfeasibleBoundsError, InvalidGroupingError


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_instance`.

    ``violations`` break an invariant of the instance. ``notes`` record
    situations that were resolved by policy, e.g. registration ties
    disambiguated by student id.
    """

    violations: tuple = ()
    notes: tuple = ()

    @property
    def passed(self):
        """Whether no invariant is violated."""
        return not self.violations

    def __bool__(self):
        """Truthy when the report passes."""
        return self.passed


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Outcome of :func:`check_feasibility`."""

    feasible: bool
    k_range: tuple = ()

    @property
    def k_min(self):
        """Smallest feasible number of groups."""
        return self.k_range[0] if self.k_range else None

    @property
    def k_max(self):
        """Largest feasible number of groups."""
        return self.k_range[-1] if self.k_range else None

    def __bool__(self):
        """Truthy when feasible."""
        return self.feasible


def check_feasibility(n, bounds, m):
    """Numbers of groups k in 1..m with ``k*C_l <= n <= k*C_u``."""
    k_range = tuple(
        k for k in range(1, m + 1)
        if k * bounds.lower <= n <= k * bounds.upper
    )
    return FeasibilityVerdict(feasible=bool(k_range), k_range=k_range)


def require_feasible(n, bounds, m):
    """Return the verdict, raise if the bounds admit no grouping."""
    verdict = check_feasibility(n, bounds, m)
    if not verdict:
        raise InfeasibleBoundsError(n, bounds, m)
    return verdict


def _check_students(instance, violations):
    ids = [s.id for s in instance.students]
    if len(set(ids)) != len(ids):
        violations.append("duplicate student id")
    if sorted(ids) != list(range(1, len(ids) + 1)):
        violations.append("student ids are not contiguous from 1")
    if instance.n < 1:
        violations.append("instance has no students")


def _check_wishes(instance, violations):
    if instance.h > instance.m:
        violations.append(
            f"more wishes per student ({instance.h}) than topics "
            f"({instance.m})"
        )
    for student in instance.students:
        row = instance.wish_list(student.id)
        if any(t < 1 or t > instance.m for t in row):
            violations.append(
                f"invalid topic index in wishes of student {student.id}"
            )
        if len(set(row)) != len(row):
            violations.append(f"duplicate wish for student {student.id}")


def _check_interest(instance, violations):
    h = instance.h
    for student in instance.students:
        row = instance.interest[student.id - 1]
        wished = set(instance.wish_list(student.id))
        support = {int(j) + 1 for j in np.flatnonzero(row > 0)}
        if support != wished:
            violations.append(
                f"V support mismatch for student {student.id}"
            )
            continue
        for p, topic in enumerate(instance.wish_list(student.id), start=1):
            if not math.isclose(row[topic - 1], h / p):
                violations.append(
                    f"V value mismatch for student {student.id} on topic "
                    f"{topic}: expected {h / p}"
                )


def _check_priority(instance, violations, notes):
    times = {s.id: s.registration_time for s in instance.students}
    choosers = {}
    for student in instance.students:
        row = instance.priority[student.id - 1]
        wished = set(instance.wish_list(student.id))
        support = {int(j) + 1 for j in np.flatnonzero(row > 0)}
        if support != wished:
            violations.append(
                f"W support mismatch for student {student.id}"
            )
        for topic in wished:
            choosers.setdefault(topic, []).append(student.id)

    ordered = len(set(times.values())) > 1 or len(times) <= 1
    if not ordered:
        notes.append("registration times unavailable, W order not checked")

    for topic in sorted(choosers):
        ids = sorted(choosers[topic], key=lambda s: (times[s], s))
        column = instance.priority[:, topic - 1]
        values = [column[s - 1] for s in ids]
        if len(set(values)) != len(values):
            violations.append(f"W values not distinct on topic {topic}")
        if not ordered:
            continue
        earlier_min = math.inf
        for _, tied in groupby(ids, key=times.get):
            tied = list(tied)
            tied_values = [column[s - 1] for s in tied]
            if max(tied_values) >= earlier_min:
                violations.append(
                    f"W order violation on topic {topic}: an earlier "
                    "registration has a lower priority"
                )
                break
            earlier_min = min(earlier_min, min(tied_values))
            if len(tied) > 1:
                notes.append(
                    f"registration tie on topic {topic} between students "
                    f"{', '.join(str(s) for s in tied)}, resolved by "
                    "student id"
                )


def validate_instance(instance):
    """Check every invariant of an instance.

    Never raises; returns a :class:`ValidationReport`.
    """
    violations = []
    notes = list(instance.notes)
    _check_students(instance, violations)
    _check_wishes(instance, violations)
    _check_interest(instance, violations)
    _check_priority(instance, violations, notes)
    if instance.alpha < 0 or instance.beta < 0:
        violations.append("welfare weights must be non-negative")
    return ValidationReport(
        violations=tuple(violations), notes=tuple(dict.fromkeys(notes))
    )


def validate_grouping(grouping, instance):
    """Raise if a grouping references unknown students or topics."""
    known = set(instance.student_ids)
    unknown = set(grouping.assignment) - known
    if unknown:
        raise InvalidGroupingError(
            f"unknown student ids {sorted(unknown)}"
        )
    bad_topics = [t for t in grouping.topics if t > instance.m]
    if bad_topics:
        raise InvalidGroupingError(f"unknown topics {bad_topics}")


def is_complete_partition(grouping, instance):
    """Whether every student is grouped once and every size is in bounds."""
    validate_grouping(grouping, instance)
    if set(grouping.assignment) != set(instance.student_ids):
        return False
    return all(size in instance.bounds for size in grouping.cardinalities)
