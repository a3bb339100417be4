# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""MFC-Grouping errors.

Each error carries the process exit code used by the command line.
"""


class MFCGroupingError(Exception):
    """Base exception for MFC-Grouping errors."""

    exit_code = 1


#
# Ingestion
#
class IngestionError(MFCGroupingError):
    """Input data could not be turned into an instance."""

    exit_code = 3

    def __init__(self, message, row=None):
        """Initialise error."""
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)

    def at_row(self, row):
        """Attach the number of the input row the error comes from."""
        self.row = row
        self.args = (f"row {row}: {self.args[0]}", ) + self.args[1:]
        return self


class MissingColumnError(IngestionError):
    """A required column is missing from the input file."""

    def __init__(self, column):
        """Initialise error."""
        self.column = column
        super().__init__(f"missing column '{column}'")


class InvalidTopicIndexError(IngestionError):
    """A wish references a topic outside 1..m."""

    def __init__(self, value, m, row=None):
        """Initialise error."""
        topics = f"1..{m}" if m else "positive integers"
        super().__init__(
            f"invalid topic index {value} (topics are {topics})", row=row
        )


class DuplicateStudentError(IngestionError):
    """The same student id appears twice."""

    def __init__(self, student_id, row=None):
        """Initialise error."""
        super().__init__(f"duplicate student id {student_id}", row=row)


class NoPrioritySourceError(IngestionError):
    """Neither a registration time nor priority columns are present."""

    def __init__(self):
        """Initialise error."""
        super().__init__(
            "no priority source: expected a registration time column or "
            "priority columns"
        )


class MalformedWishesError(IngestionError):
    """A wish row is not a list of h distinct topics."""


class RegistrationTieError(IngestionError):
    """Two choosers of a topic share a registration rank."""

    def __init__(self, topic, students):
        """Initialise error."""
        self.topic = topic
        self.students = tuple(students)
        super().__init__(
            f"registration tie on topic {topic} between students "
            f"{', '.join(str(s) for s in self.students)}"
        )


class ShapeMismatchError(MFCGroupingError):
    """Matrices that must share a shape do not."""

    def __init__(self, left, right):
        """Initialise error."""
        super().__init__(f"shape mismatch: {left} != {right}")


#
# Feasibility
#
class InfeasibleError(MFCGroupingError):
    """No grouping satisfies the cardinality bounds."""

    exit_code = 2


class InfeasibleBoundsError(InfeasibleError):
    """No number of groups k in 1..m fits n students within the bounds."""

    def __init__(self, n, bounds, m):
        """Initialise error."""
        self.n = n
        self.bounds = bounds
        self.m = m
        super().__init__(
            f"{n} students cannot be split into k in 1..{m} groups of "
            f"{bounds.lower}..{bounds.upper} students (empty k-range)"
        )


#
# Guards
#
class GuardTrippedError(MFCGroupingError):
    """An internal safety limit was reached."""

    exit_code = 4


class AdjustmentDidNotConvergeError(GuardTrippedError):
    """Group adjustment exceeded its iteration budget."""

    def __init__(self, iterations):
        """Initialise error."""
        super().__init__(
            f"group adjustment did not converge after {iterations} "
            "iterations"
        )


class StateBudgetExceededError(GuardTrippedError):
    """The exhaustive search space is larger than allowed."""

    def __init__(self, states, max_states):
        """Initialise error."""
        self.states = states
        self.max_states = max_states
        super().__init__(
            f"refusing to enumerate {states} assignments "
            f"(budget is {max_states})"
        )


#
# Groupings and metrics
#
class InvalidGroupingError(MFCGroupingError):
    """A grouping assigns a student twice or references unknown ids."""


class IncompletePartitionError(MFCGroupingError):
    """A grouping leaves students out or breaks the cardinality bounds."""


class EmptyGroupError(MFCGroupingError):
    """A metric was requested for an empty group."""

    def __init__(self):
        """Initialise error."""
        super().__init__("balance is undefined for an empty group")


class InvalidConfigError(MFCGroupingError):
    """A configuration value is out of its domain."""
