# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Interest, priority and welfare matrices.

The interest of student ``i`` in its ``p``-th wish is ``h / p``. The
priority of the chooser registered ``q``-th (1-based) among the ``c``
choosers of a topic is ``(c - q + 1) / c``, so the first registration
gets 1 and every later one strictly less. Welfare is ``alpha * v +
beta * w``.
"""

import numpy as np

from .errors import InvalidConfigError, InvalidTopicIndexError, \
    MalformedWishesError, RegistrationTieError, ShapeMismatchError
from .records.api import Instance, WelfareMatrix


def _check_wishes(wishes, h, m):
    wishes = np.asarray(wishes, dtype=int)
    if wishes.ndim != 2 or wishes.shape[1] != h:
        raise MalformedWishesError(
            f"expected {h} wishes per student, got shape {wishes.shape}"
        )
    for row_number, row in enumerate(wishes, start=1):
        for topic in row:
            if not 1 <= topic <= m:
                raise InvalidTopicIndexError(int(topic), m, row=row_number)
        if len(set(row.tolist())) != h:
            raise MalformedWishesError(
                "wished topics must be distinct", row=row_number
            )
    return wishes


def build_interest_matrix(wishes, h, m):
    """Interest matrix V with ``v[i, wishes[i, p]] = h / p``."""
    wishes = _check_wishes(wishes, h, m)
    interest = np.zeros((wishes.shape[0], m))
    for p in range(1, h + 1):
        interest[np.arange(wishes.shape[0]), wishes[:, p - 1] - 1] = h / p
    return interest


def build_priority_matrix(wishes, registration_times, m):
    """Priority matrix W from registration order.

    :param wishes: ``n x h`` wished topics.
    :param registration_times: one sortable key per student (row order);
        keys of two choosers of the same topic must differ.
    :param m: number of topics.
    """
    wishes = np.asarray(wishes, dtype=int)
    _check_wishes(wishes, wishes.shape[1], m)
    if len(registration_times) != wishes.shape[0]:
        raise ShapeMismatchError(
            (len(registration_times),), (wishes.shape[0],)
        )
    priority = np.zeros((wishes.shape[0], m))
    for topic in range(1, m + 1):
        choosers = np.flatnonzero((wishes == topic).any(axis=1)).tolist()
        if not choosers:
            continue
        choosers.sort(key=lambda i: registration_times[i])
        for earlier, later in zip(choosers, choosers[1:]):
            if registration_times[earlier] == registration_times[later]:
                raise RegistrationTieError(topic, (earlier + 1, later + 1))
        c = len(choosers)
        for q, i in enumerate(choosers, start=1):
            priority[i, topic - 1] = (c - q + 1) / c
    return priority


def build_welfare(interest, priority, alpha=1.0, beta=1.0):
    """Entrywise ``alpha * V + beta * W``."""
    interest = np.asarray(interest, dtype=float)
    priority = np.asarray(priority, dtype=float)
    if interest.shape != priority.shape:
        raise ShapeMismatchError(interest.shape, priority.shape)
    if alpha < 0 or beta < 0:
        raise InvalidConfigError(
            f"welfare weights must be non-negative, got {alpha}, {beta}"
        )
    return WelfareMatrix(
        entries=alpha * interest + beta * priority, alpha=alpha, beta=beta
    )


def build_instance(students, wishes, m, bounds, alpha=1.0, beta=1.0,
                   priority=None, notes=()):
    """Assemble an :class:`Instance` from students and their wishes.

    W is built from the students' registration times (ties broken by
    student id) unless ``priority`` is given, in which case it is taken
    verbatim.
    """
    students = sorted(students, key=lambda s: s.id)
    wishes = np.asarray(wishes, dtype=int)
    interest = build_interest_matrix(wishes, wishes.shape[1], m)
    if priority is None:
        keys = [(s.registration_time, s.id) for s in students]
        priority = build_priority_matrix(wishes, keys, m)
    return Instance(
        students=tuple(students),
        m=m,
        wishes=wishes,
        interest=interest,
        priority=priority,
        bounds=bounds,
        alpha=alpha,
        beta=beta,
        notes=notes,
    )
