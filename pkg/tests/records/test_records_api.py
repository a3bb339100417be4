# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Domain type tests."""

import numpy as np
import pytest

from mfc_grouping.errors import InvalidConfigError, InvalidGroupingError, \
    ShapeMismatchError
from mfc_grouping.records import Bounds, Grouping, Instance, Student


def test_student_domains():
    assert Student(id=1, protected_category=1).registration_time == 0.0
    with pytest.raises(InvalidConfigError):
        Student(id=0, protected_category=1)
    with pytest.raises(InvalidConfigError):
        Student(id=1, protected_category=2)


def test_bounds():
    bounds = Bounds(2, 3)
    assert 2 in bounds
    assert 3 in bounds
    assert 4 not in bounds
    assert 1 not in bounds
    assert str(bounds) == "[2, 3]"
    with pytest.raises(InvalidConfigError):
        Bounds(3, 2)
    with pytest.raises(InvalidConfigError):
        Bounds(-1, 2)


def test_instance_shapes(figure_instance):
    assert figure_instance.n == 5
    assert figure_instance.m == 4
    assert figure_instance.h == 2
    assert figure_instance.student_ids == (1, 2, 3, 4, 5)
    assert figure_instance.wish_list(3) == (2, 4)
    assert figure_instance.wish_rank(3, 4) == 2
    assert figure_instance.wish_rank(3, 1) is None
    with pytest.raises(ValueError):
        figure_instance.interest[0, 0] = 5.0


def test_instance_shape_mismatch(figure_instance):
    with pytest.raises(ShapeMismatchError):
        Instance(
            students=figure_instance.students,
            m=4,
            wishes=figure_instance.wishes,
            interest=np.zeros((5, 3)),
            priority=figure_instance.priority,
            bounds=Bounds(2, 3),
        )


def test_registration_rank(figure_instance):
    # times are 3, 1, 5, 2, 4
    assert dict(figure_instance.registration_rank) == {
        2: 0, 4: 1, 1: 2, 5: 3, 3: 4,
    }


def test_instance_copies(figure_instance):
    other = figure_instance.with_bounds(1, 2)
    assert other.bounds == Bounds(1, 2)
    assert other != figure_instance
    assert other.with_bounds(2, 3) == figure_instance
    weighted = figure_instance.with_weights(0.0, 1.0)
    assert np.array_equal(weighted.welfare.entries, weighted.priority)


def test_grouping():
    grouping = Grouping({2: [3, 1], 1: [2], 4: []})
    assert grouping.topics == (1, 2)
    assert grouping[2] == (3, 1)
    assert grouping.cardinalities == [1, 2]
    assert grouping.topic_of(3) == 2
    assert grouping.topic_of(5) is None
    assert grouping.unassigned([1, 2, 3, 4, 5]) == [4, 5]
    assert len(grouping) == 2
    assert grouping == Grouping({1: [2], 2: [3, 1]})
    assert grouping.to_dict() == {1: [2], 2: [3, 1]}


def test_grouping_rejects_overlap():
    with pytest.raises(InvalidGroupingError):
        Grouping({1: [1, 2], 2: [2]})
    with pytest.raises(InvalidGroupingError):
        Grouping({0: [1]})
