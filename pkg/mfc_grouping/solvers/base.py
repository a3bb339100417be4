# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Solver configuration and base class."""

import logging
from dataclasses import asdict, dataclass

from .. import config
from ..errors import IncompletePartitionError, InvalidConfigError
from ..metrics import compute_metrics
from ..records import is_complete_partition, require_feasible

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    """Options shared by all solvers.

    ``alpha`` and ``beta`` of ``None`` keep the instance's own weights.
    """

    alpha: float = None
    beta: float = None
    balance_tiebreak: bool = config.MFC_BALANCE_TIEBREAK
    mod_basis: str = config.MFC_MOD_BASIS
    topic_order: str = config.MFC_TOPIC_ORDER
    max_states: int = config.MFC_ORACLE_MAX_STATES
    safety_factor: int = config.MFC_ADJUSTMENT_SAFETY_FACTOR

    def __post_init__(self):
        """Check enumerated options."""
        if self.mod_basis not in config.MFC_MOD_BASES:
            raise InvalidConfigError(
                f"mod basis must be one of {config.MFC_MOD_BASES}, "
                f"got {self.mod_basis!r}"
            )
        if self.topic_order not in config.MFC_TOPIC_ORDERS:
            raise InvalidConfigError(
                f"topic order must be one of {config.MFC_TOPIC_ORDERS}, "
                f"got {self.topic_order!r}"
            )
        for weight in (self.alpha, self.beta):
            if weight is not None and weight < 0:
                raise InvalidConfigError(
                    f"welfare weights must be non-negative, got {weight}"
                )

    @classmethod
    def build(cls, **overrides):
        """Defaults from :mod:`mfc_grouping.config` updated by overrides.

        Overrides set to ``None`` are ignored, so command line options that
        were not given fall back to the configuration.
        """
        return cls(**{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self):
        """Plain dictionary of the options."""
        return asdict(self)


HeuristicConfig = SolverConfig


class Solver:
    """Base class for grouping methods."""

    name = None
    """Method name used on the command line and in reports."""

    def __init__(self, config=None):
        """Constructor.

        :param config: a :class:`SolverConfig`, defaults when omitted.
        """
        self.config = config or SolverConfig.build()

    def prepare(self, instance):
        """Apply the configured welfare weights to the instance."""
        alpha = instance.alpha if self.config.alpha is None \
            else self.config.alpha
        beta = instance.beta if self.config.beta is None \
            else self.config.beta
        if (alpha, beta) != (instance.alpha, instance.beta):
            instance = instance.with_weights(alpha, beta)
        return instance

    def group(self, instance):
        """Compute the grouping of a feasible instance."""
        raise NotImplementedError

    def solve(self, instance):
        """Group ``instance`` and measure the result.

        :returns: a ``(Grouping, MetricsReport)`` pair.
        :raises InfeasibleBoundsError: when no k in 1..m fits the bounds.
        """
        instance = self.prepare(instance)
        require_feasible(instance.n, instance.bounds, instance.m)
        logger.debug(
            "Solving n=%s m=%s bounds=%s with %s",
            instance.n, instance.m, instance.bounds, self.name,
        )
        grouping = self.group(instance)
        if not is_complete_partition(grouping, instance):
            raise IncompletePartitionError(
                f"{self.name} produced an incomplete grouping"
            )
        metrics = compute_metrics(grouping, instance)
        logger.info(
            "%s: k=%s nash=%.4f balance=%.3f satisfaction=%.3f",
            self.name, metrics.group_count, metrics.nash_normalized,
            metrics.balance, metrics.satisfaction,
        )
        return grouping, metrics
