# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Parameter sweeps over the lower cardinality bound.

For every method and every ``C_l`` of a range, the instance is solved with
``C_u = C_l + offset`` and its measures are recorded as one row. Runs that
are infeasible or trip a guard are recorded with their status instead of
stopping the sweep.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from . import config as mfc_config
from .errors import GuardTrippedError, InfeasibleError, InvalidConfigError
from .records import Bounds
from .serializers import metrics_row, render_rows, write_rows
from .solvers import SOLVERS, SolverConfig, get_solver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepConfig:
    """Range of lower bounds, upper bound rule and methods of a sweep."""

    lower_range: tuple = mfc_config.MFC_SWEEP_CL_RANGE
    upper_offset: int = mfc_config.MFC_SWEEP_CU_OFFSET
    methods: tuple = mfc_config.MFC_SWEEP_METHODS
    alpha: float = None
    beta: float = None
    solver: SolverConfig = field(default_factory=SolverConfig.build)

    def __post_init__(self):
        """Check the range and the methods."""
        first, last = self.lower_range
        if first < 1 or first > last:
            raise InvalidConfigError(
                f"empty or invalid C_l range {first}..{last}"
            )
        if self.upper_offset < 0:
            raise InvalidConfigError(
                f"C_u offset must be non-negative, got {self.upper_offset}"
            )
        object.__setattr__(self, "methods", tuple(self.methods))
        if not self.methods:
            raise InvalidConfigError("a sweep needs at least one method")
        unknown = [m for m in self.methods if m not in SOLVERS]
        if unknown:
            raise InvalidConfigError(
                f"unknown methods {unknown}, expected some of "
                f"{sorted(SOLVERS)}"
            )

    @property
    def lower_bounds(self):
        """Lower bounds explored, ascending."""
        first, last = self.lower_range
        return range(first, last + 1)

    def bounds(self, lower):
        """Bounds of the run with lower bound ``lower``."""
        return Bounds(lower, lower + self.upper_offset)

    def solver_config(self):
        """Solver options with the sweep's welfare weights."""
        options = self.solver.to_dict()
        if self.alpha is not None:
            options["alpha"] = self.alpha
        if self.beta is not None:
            options["beta"] = self.beta
        return SolverConfig.build(**options)


@dataclass(frozen=True)
class SweepRow:
    """Outcome of one ``(method, bounds)`` run."""

    method: str
    bounds: Bounds
    status: str = "ok"
    metrics: object = None
    message: str = ""

    @property
    def ok(self):
        """Whether the run produced a grouping."""
        return self.status == "ok"

    def to_row(self):
        """Flat mapping for :class:`SweepRowSchema`."""
        return metrics_row(self.method, self.bounds, self.metrics, self.status)


@dataclass(frozen=True)
class SweepResult:
    """All rows of a sweep, methods in order, ``C_l`` ascending."""

    config: SweepConfig
    rows: tuple

    def rows_for(self, method):
        """Rows of one method."""
        return [row for row in self.rows if row.method == method]

    def render(self, format="csv"):
        """Rows as CSV or JSON text."""
        return render_rows([row.to_row() for row in self.rows], format)

    def write(self, path, format="csv"):
        """Write the rows to ``path``."""
        return write_rows([row.to_row() for row in self.rows], path, format)


def _run(instance, method, bounds, config):
    solver = get_solver(method, config)
    try:
        _, metrics = solver.solve(
            instance.with_bounds(bounds.lower, bounds.upper)
        )
    except InfeasibleError as error:
        logger.info("%s %s: infeasible", method, bounds)
        return SweepRow(method, bounds, "infeasible", message=str(error))
    except GuardTrippedError as error:
        logger.warning("%s %s: %s", method, bounds, error)
        return SweepRow(method, bounds, "guard", message=str(error))
    return SweepRow(method, bounds, "ok", metrics)


def run_sweep(instance, sweep=None):
    """Solve ``instance`` for every method and lower bound of ``sweep``.

    :returns: a :class:`SweepResult` with ``len(methods) * len(range)``
        rows.
    """
    sweep = sweep or SweepConfig()
    config = sweep.solver_config()
    rows = [
        _run(instance, method, sweep.bounds(lower), config)
        for method in sweep.methods
        for lower in sweep.lower_bounds
    ]
    logger.info(
        "Sweep done: %s rows, %s feasible",
        len(rows), sum(row.ok for row in rows),
    )
    return SweepResult(config=sweep, rows=tuple(rows))


def summarize_sweep(result):
    """Per-method means over the rows that produced a grouping.

    :returns: ``{method: {"runs", "nash_normalized", "balance",
        "satisfaction"}}``; means are None for a method without feasible
        rows.
    """
    summary = {}
    for method in result.config.methods:
        done = [row.metrics for row in result.rows_for(method) if row.ok]
        entry = {"runs": len(done)}
        for name in ("nash_normalized", "balance", "satisfaction"):
            values = [float(getattr(m, name)) for m in done]
            entry[name] = float(np.mean(values)) if values else None
        summary[method] = entry
    return summary
