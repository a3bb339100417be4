# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Multi-fair capacitated grouping of students into topic groups.

Students register a ranked list of wished topics. The package partitions
them into non-overlapping topic groups whose cardinalities lie between a
lower and an upper bound, maximizing the Nash product of the groups'
welfare while measuring (and favoring) the balance of a binary protected
attribute inside every group.

Two solvers are provided, a preference-first heuristic and a per-topic
knapsack method, plus an exhaustive oracle for tiny instances.

.. code-block:: python

    from mfc_grouping import load_dataset, solve

    instance = load_dataset("roster.csv").with_bounds(2, 3)
    grouping, metrics = solve(instance, method="knapsack")
"""

from .fixtures import generate_semisynthetic, load_dataset
from .metrics import MetricsReport, compute_metrics
from .records import Bounds, Grouping, Instance, Student
from .solvers import solve

__version__ = '0.1.0'

__all__ = (
    '__version__',
    'Bounds',
    'Grouping',
    'Instance',
    'MetricsReport',
    'Student',
    'compute_metrics',
    'generate_semisynthetic',
    'load_dataset',
    'solve',
)
