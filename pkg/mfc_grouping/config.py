# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Default configuration for MFC-Grouping.

Every value can be overridden per run, either through
:meth:`mfc_grouping.solvers.base.SolverConfig.build` or through the
command line options of :mod:`mfc_grouping.cli`.
"""

# Welfare
# =======

MFC_ALPHA = 1.0
"""Weight of the interest matrix V in the welfare ``alpha*v + beta*w``."""

MFC_BETA = 1.0
"""Weight of the priority matrix W in the welfare ``alpha*v + beta*w``."""

# Solvers
# =======

MFC_BALANCE_TIEBREAK = True
"""Break otherwise tied choices in favor of the more balanced group.

Applies to the admission order of equally ranked students, to the choice
of target groups during adjustment and to equal-value knapsack
selections.
"""

MFC_MOD_BASIS = "unassigned"
"""Basis of the knapsack budget rule ``n mod C_l``.

``unassigned`` uses the number of students still unassigned when the
topic is visited, ``global`` uses the total number of students.
"""

MFC_MOD_BASES = ("unassigned", "global")
"""Accepted values for :const:`MFC_MOD_BASIS`."""

MFC_TOPIC_ORDER = "index"
"""Order in which the knapsack solver visits topics.

``index`` visits topics 1..m, ``demand`` visits them by descending total
welfare of the students wishing them (ties by index).
"""

MFC_TOPIC_ORDERS = ("index", "demand")
"""Accepted values for :const:`MFC_TOPIC_ORDER`."""

MFC_ORACLE_MAX_STATES = 10 ** 7
"""Refuse oracle runs whose full assignment space ``m**n`` exceeds this."""

MFC_ADJUSTMENT_SAFETY_FACTOR = 1
"""Group adjustment gives up after ``factor * n * m`` repair iterations."""

MFC_FLOAT_TOLERANCE = 1e-9
"""Absolute tolerance used when comparing sums of welfare values."""

MFC_METHODS = ("heuristic", "knapsack", "oracle")
"""Registered solving methods."""

# Datasets
# ========

MFC_DATASET_COLUMNS = {
    "id": "ID",
    "name": "Name",
    "protected": "Gender",
    "wish_prefix": "wish",
    "time": "Time",
    "priority_prefix": "T",
}
"""Column names of the input roster.

Wish columns are ``<wish_prefix>1 .. <wish_prefix>h`` and optional priority
columns are ``<priority_prefix>1 .. <priority_prefix>m``. A YAML file with
the same keys can override any of them.
"""

MFC_PROTECTED_VALUES = {
    "0": 0,
    "1": 1,
    "M": 0,
    "F": 1,
    "male": 0,
    "female": 1,
}
"""Mapping of protected attribute labels (case-insensitive) to {0, 1}."""

MFC_PROTECTED_LABELS = {0: "M", 1: "F"}
"""Labels written for each protected category in generated files."""

MFC_ROSTER_PROPORTIONS = {
    "data-science": (8, 16),
    "mathematics": (208, 187),
    "portuguese": (383, 266),
}
"""Named (category 1, category 0) head counts of reference rosters.

Used to derive protected attribute proportions for generated rosters.
"""

MFC_DEFAULT_PROPORTIONS = (0.5, 0.5)
"""Proportions of (category 1, category 0) for generated rosters."""

MFC_GENERATOR_EPOCH = "2022-01-10T08:00:00+00:00"
"""First registration time written for generated rosters."""

# Sweeps and output
# =================

MFC_SWEEP_METHODS = ("heuristic", "knapsack")
"""Methods compared by default in a sweep."""

MFC_SWEEP_CL_RANGE = (2, 8)
"""Default inclusive range of lower bounds explored by a sweep."""

MFC_SWEEP_CU_OFFSET = 1
"""Default rule for the upper bound of a sweep: ``C_u = C_l + offset``."""

MFC_CSV_FIELDS = (
    "method",
    "C_l",
    "C_u",
    "k",
    "nash_product",
    "nash_normalized",
    "balance",
    "satisfaction",
    "min_card",
    "max_card",
    "status",
    "cardinalities",
)
"""Column order of metrics CSV rows."""

MFC_DEFAULT_BOUNDS = (2, 3)
"""Cardinality bounds ``(C_l, C_u)`` used when none are given."""
