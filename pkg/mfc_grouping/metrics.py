# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Evaluation measures of a grouping.

* Nash product: product over groups of ``1 + sum of members' welfare for
  the group topic``.
* Normalized Nash: logarithm of the Nash product in base k (the number of
  groups).
* Balance: per group the smaller of the two ratios between protected
  category counts, per grouping the minimum over groups.
* Satisfaction: share of students placed in a topic they wished.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGroupError, InvalidConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MetricsReport:
    """Measures of one grouping.

    ``nash_product`` may overflow to ``inf`` on large instances;
    ``log_nash`` and ``nash_normalized`` are computed in log space and stay
    finite.
    """

    nash_product: float
    log_nash: float
    nash_normalized: float
    balance: Fraction
    satisfaction: Fraction
    group_count: int
    cardinalities: tuple
    warnings: tuple = ()

    @property
    def min_card(self):
        """Smallest group size."""
        return min(self.cardinalities, default=0)

    @property
    def max_card(self):
        """Largest group size."""
        return max(self.cardinalities, default=0)


def group_welfare(members, topic, welfare):
    """Sum of the members' welfare for ``topic``."""
    return math.fsum(welfare(student, topic) for student in members)


def _group_sums(grouping, welfare):
    return [
        group_welfare(members, topic, welfare)
        for topic, members in grouping.items()
    ]


def nash_product(grouping, welfare):
    """Product over groups of ``1 + group welfare``.

    An empty grouping yields the empty product 1 and logs a warning.
    """
    if not len(grouping):
        logger.warning("Nash product of an empty grouping is 1.")
    return math.prod(1.0 + s for s in _group_sums(grouping, welfare))


def log_nash_product(grouping, welfare):
    """Natural logarithm of :func:`nash_product`, without overflow."""
    return math.fsum(math.log1p(s) for s in _group_sums(grouping, welfare))


def _normalize_log(log_nash, k):
    """Convert ``ln(L)`` to ``log_k(L)``; returns ``(value, warning)``."""
    if k <= 1:
        return log_nash, (
            f"log base {k} is undefined, reporting the natural log instead"
        )
    return log_nash / math.log(k), None


def nash_normalized(nash_product, k):
    """``log_k`` of the Nash product.

    For ``k <= 1`` the natural logarithm is returned and a warning logged.
    """
    if nash_product < 1:
        raise ValueError(f"Nash product must be >= 1, got {nash_product}")
    value, warning = _normalize_log(math.log(nash_product), k)
    if warning:
        logger.warning(warning)
    return value


def group_balance(members, categories):
    """``min(c0 / c1, c1 / c0)`` of a group, 0 if a category is absent."""
    if not members:
        raise EmptyGroupError()
    counts = Counter(categories[s] for s in members)
    c0, c1 = counts[0], counts[1]
    if c0 == 0 or c1 == 0:
        return Fraction(0)
    return min(Fraction(c0, c1), Fraction(c1, c0))


def grouping_balance(grouping, categories):
    """Minimum group balance over all groups (0 for no groups)."""
    return min(
        (group_balance(members, categories)
         for members in grouping.groups.values()),
        default=Fraction(0),
    )


def satisfaction(grouping, wishes, n):
    """Share of the ``n`` students whose group topic is one of their wishes.

    :param wishes: ``n x h`` matrix, row ``i - 1`` for student ``i``.
    """
    if n <= 0:
        raise InvalidConfigError("satisfaction needs at least one student")
    satisfied = sum(
        1 for student, topic in grouping.assignment.items()
        if topic in wishes[student - 1]
    )
    return Fraction(satisfied, n)


def compute_metrics(grouping, instance):
    """Full :class:`MetricsReport` of a grouping of ``instance``."""
    warnings = []
    if not len(grouping):
        warnings.append("empty grouping")
    sums = _group_sums(grouping, instance.welfare)
    log_nash = math.fsum(math.log1p(s) for s in sums)
    normalized, warning = _normalize_log(log_nash, len(grouping))
    if warning:
        warnings.append(warning)
    for message in warnings:
        logger.warning(message)
    return MetricsReport(
        nash_product=math.prod(1.0 + s for s in sums),
        log_nash=log_nash,
        nash_normalized=normalized,
        balance=grouping_balance(grouping, instance.categories),
        satisfaction=satisfaction(grouping, instance.wishes, instance.n),
        group_count=len(grouping),
        cardinalities=tuple(grouping.cardinalities),
        warnings=tuple(warnings),
    )


def dataset_balance(instance):
    """Balance of the whole roster taken as a single group."""
    return group_balance(instance.student_ids, instance.categories)


def describe_instance(instance):
    """Dataset-level figures of an instance."""
    counts = Counter(instance.categories.values())
    return {
        "n": instance.n,
        "m": instance.m,
        "h": instance.h,
        "category_0": counts[0],
        "category_1": counts[1],
        "balance": dataset_balance(instance),
    }
