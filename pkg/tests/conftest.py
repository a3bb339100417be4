# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration.

Rosters used across the test suite. Randomised helpers always take an
explicit seed.
"""

import random
from pathlib import Path

import pytest

from mfc_grouping.fixtures import load_dataset
from mfc_grouping.records import Bounds, Student, check_feasibility
from mfc_grouping.welfare import build_instance


def make_instance(wishes, categories, times=None, m=None, bounds=(2, 3),
                  alpha=1.0, beta=1.0):
    """Instance of students ``1..n`` from plain lists.

    :param times: registration times, defaults to the student ids.
    """
    n = len(wishes)
    times = times or list(range(1, n + 1))
    students = [
        Student(id=i, protected_category=c, registration_time=t)
        for i, (c, t) in enumerate(zip(categories, times), start=1)
    ]
    m = m or max(max(row) for row in wishes)
    return build_instance(
        students, wishes, m,
        bounds if isinstance(bounds, Bounds) else Bounds(*bounds),
        alpha=alpha, beta=beta,
    )


def random_instance(seed, n, m, h, bounds):
    """Random instance without names, for property suites."""
    rng = random.Random(seed)
    wishes = [rng.sample(range(1, m + 1), h) for _ in range(n)]
    categories = [rng.randint(0, 1) for _ in range(n)]
    times = list(range(n))
    rng.shuffle(times)
    return make_instance(wishes, categories, times, m=m, bounds=bounds)


def feasible_random_instances(count, seed, n_range, m_range, h, lower_range,
                              upper_offset=1):
    """``count`` random feasible instances drawn from one seed."""
    rng = random.Random(seed)
    instances = []
    while len(instances) < count:
        n = rng.randint(*n_range)
        m = rng.randint(max(h, m_range[0]), m_range[1])
        lower = rng.randint(*lower_range)
        bounds = (lower, lower + upper_offset)
        if not check_feasibility(n, Bounds(*bounds), m):
            continue
        instances.append(
            random_instance(rng.randrange(2 ** 32), n, m, h, bounds)
        )
    return instances


@pytest.fixture(scope="session")
def data_dir():
    """Directory of the test rosters."""
    return Path(__file__).parent / "fixtures" / "data"


@pytest.fixture(scope="session")
def roster_path(data_dir):
    """Roster shaped like the data science course: 24 students, 16 topics."""
    return data_dir / "data_science_roster.csv"


@pytest.fixture(scope="session")
def roster(roster_path):
    """Instance loaded from :func:`roster_path`."""
    return load_dataset(roster_path)


@pytest.fixture()
def figure_instance():
    """5 students, 4 topics, 2 wishes each."""
    return make_instance(
        wishes=[[1, 2], [1, 3], [2, 4], [3, 1], [4, 2]],
        categories=[0, 1, 0, 1, 1],
        times=[3, 1, 5, 2, 4],
        m=4,
        bounds=(2, 3),
    )


@pytest.fixture()
def six_students():
    """6 students, 3 topics, bounds ``[2, 3]``."""
    return make_instance(
        wishes=[[1, 2], [1, 3], [2, 1], [2, 3], [3, 1], [1, 2]],
        categories=[0, 1, 0, 1, 0, 1],
        times=[6, 2, 4, 1, 5, 3],
        m=3,
        bounds=(2, 3),
    )


@pytest.fixture(scope="session")
def instance_factory():
    """Factory building instances from plain lists."""
    return make_instance


@pytest.fixture(scope="session")
def random_instance_factory():
    """Factory building one seeded random instance."""
    return random_instance


@pytest.fixture(scope="session")
def feasible_instances():
    """Factory building seeded batches of feasible random instances."""
    return feasible_random_instances
