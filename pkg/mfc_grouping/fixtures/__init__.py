# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Roster files and semi-synthetic data."""

from .dataset import DatasetSchema, dump_dataset, load_dataset
from .generator import GeneratorConfig, fake_roster, generate_semisynthetic

__all__ = (
    'DatasetSchema',
    'GeneratorConfig',
    'dump_dataset',
    'fake_roster',
    'generate_semisynthetic',
    'load_dataset',
)
