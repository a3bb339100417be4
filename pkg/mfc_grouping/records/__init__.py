# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Grouping problem data model."""

from .api import Bounds, Grouping, Instance, Student, WelfareMatrix
from .validation import FeasibilityVerdict, ValidationReport, \
    check_feasibility, is_complete_partition, require_feasible, \
    validate_grouping, validate_instance

__all__ = (
    'Bounds',
    'FeasibilityVerdict',
    'Grouping',
    'Instance',
    'Student',
    'ValidationReport',
    'WelfareMatrix',
    'check_feasibility',
    'is_complete_partition',
    'require_feasible',
    'validate_grouping',
    'validate_instance',
)
