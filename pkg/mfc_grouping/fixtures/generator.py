# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Semi-synthetic rosters.

Every draw comes from ``random.Random(seed)`` (Mersenne Twister MT19937)
in this order:

1. for a generated roster, the shuffle of protected categories;
2. for each student by ascending id, ``sample(range(1, m + 1), h)`` as
   the wishes, most preferred first;
3. one ``shuffle`` of the student ids as the registration order.

Student ``i`` registered ``r``-th gets the time ``MFC_GENERATOR_EPOCH``
plus ``r`` minutes, and W follows from these times, so every topic's
choosers receive a uniformly random strict priority order. Names come
from Faker seeded with the same seed.
"""

import logging
import random
from dataclasses import dataclass

import arrow
from faker import Faker

from .. import config as mfc_config
from ..errors import InvalidConfigError
from ..records import Bounds, Student
from ..welfare import build_instance
from .dataset import dump_dataset

logger = logging.getLogger(__name__)

GENERATOR_ALGORITHM = "mt19937"


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a semi-synthetic roster.

    :param proportions: relative weights of (category 1, category 0); they
        are normalized, so head counts work as well as fractions.
    """

    n: int
    m: int
    h: int
    seed: int = 0
    proportions: tuple = mfc_config.MFC_DEFAULT_PROPORTIONS

    def __post_init__(self):
        """Check the parameter domains."""
        if self.n < 1 or self.m < 1 or self.h < 1:
            raise InvalidConfigError(
                f"n, m and h must be positive, got {self.n}, {self.m}, "
                f"{self.h}"
            )
        if self.h > self.m:
            raise InvalidConfigError(
                f"cannot draw h={self.h} distinct wishes from m={self.m} "
                "topics"
            )
        if self.seed < 0:
            raise InvalidConfigError(
                f"seed must be unsigned, got {self.seed}"
            )
        ones, zeros = self.proportions
        if ones < 0 or zeros < 0 or ones + zeros <= 0:
            raise InvalidConfigError(
                f"invalid proportions {self.proportions}"
            )
        object.__setattr__(
            self, "proportions",
            (ones / (ones + zeros), zeros / (ones + zeros)),
        )

    @classmethod
    def parse(cls, text, **kwargs):
        """Build from an ``n,m,h,seed`` string (seed optional)."""
        try:
            values = [int(v) for v in text.split(",")]
        except ValueError:
            raise InvalidConfigError(
                f"expected n,m,h[,seed] integers, got '{text}'"
            )
        if len(values) not in (3, 4):
            raise InvalidConfigError(
                f"expected n,m,h[,seed] integers, got '{text}'"
            )
        return cls(*values, **kwargs)

    @classmethod
    def preset(cls, name, n, m, h, seed=0):
        """Use the category proportions of a named reference roster."""
        try:
            proportions = mfc_config.MFC_ROSTER_PROPORTIONS[name]
        except KeyError:
            raise InvalidConfigError(
                f"unknown roster preset '{name}', expected one of "
                f"{', '.join(mfc_config.MFC_ROSTER_PROPORTIONS)}"
            )
        return cls(n, m, h, seed=seed, proportions=proportions)

    @property
    def category_counts(self):
        """Exact ``(category 1, category 0)`` head counts."""
        ones = round(self.n * self.proportions[0])
        return ones, self.n - ones

    def header(self):
        """Comment line recorded at the top of generated files."""
        return (
            f"generator={GENERATOR_ALGORITHM} seed={self.seed} n={self.n} "
            f"m={self.m} h={self.h}"
        )


def fake_roster(config, rng=None):
    """Students ``1..n`` with Faker names and shuffled categories."""
    rng = rng or random.Random(config.seed)
    ones, zeros = config.category_counts
    categories = [1] * ones + [0] * zeros
    rng.shuffle(categories)
    fake = Faker()
    fake.seed_instance(config.seed)
    return tuple(
        Student(id=i, protected_category=category, name=fake.name())
        for i, category in enumerate(categories, start=1)
    )


def generate_semisynthetic(config, roster=None, path=None, bounds=None):
    """Draw wishes and registration order for a roster.

    :param config: a :class:`GeneratorConfig`.
    :param roster: students ``1..n`` to reuse (names and categories);
        generated with :func:`fake_roster` when omitted.
    :param path: when given, the roster file is written there with the
        seed in its header line.
    :param bounds: :class:`~mfc_grouping.records.Bounds` or a pair,
        ``MFC_DEFAULT_BOUNDS`` when omitted.
    :returns: the :class:`~mfc_grouping.records.Instance`.
    """
    rng = random.Random(config.seed)
    if roster is None:
        roster = fake_roster(config, rng)
    roster = sorted(roster, key=lambda s: s.id)
    if [s.id for s in roster] != list(range(1, config.n + 1)):
        raise InvalidConfigError(
            f"base roster must hold students 1..{config.n}"
        )

    wishes = [
        rng.sample(range(1, config.m + 1), config.h) for _ in roster
    ]
    order = [s.id for s in roster]
    rng.shuffle(order)
    epoch = arrow.get(mfc_config.MFC_GENERATOR_EPOCH)
    times = {
        student: epoch.shift(minutes=rank).float_timestamp
        for rank, student in enumerate(order)
    }
    students = [
        Student(
            id=s.id,
            protected_category=s.protected_category,
            registration_time=times[s.id],
            name=s.name,
        )
        for s in roster
    ]
    if bounds is None:
        bounds = Bounds(*mfc_config.MFC_DEFAULT_BOUNDS)
    elif not isinstance(bounds, Bounds):
        bounds = Bounds(*bounds)
    instance = build_instance(
        students, wishes, config.m, bounds,
        alpha=mfc_config.MFC_ALPHA, beta=mfc_config.MFC_BETA,
    )
    logger.info(
        "Generated roster n=%s m=%s h=%s seed=%s",
        config.n, config.m, config.h, config.seed,
    )
    if path is not None:
        dump_dataset(instance, path, comment=config.header(), iso_times=True)
    return instance
