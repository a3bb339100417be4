# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Domain types of the grouping problem.

Students and topics are 1-based. Matrices are stored as read-only numpy
arrays with one row per student (row ``i - 1`` for student ``i``) and one
column per topic (column ``j - 1`` for topic ``j``).
"""

from dataclasses import dataclass, field, replace
from functools import cached_property
from types import MappingProxyType

import numpy as np

from ..errors import InvalidConfigError, InvalidGroupingError, \
    ShapeMismatchError


def _frozen_array(values, dtype):
    """Copy ``values`` into a read-only array."""
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Student:
    """A student with a binary protected attribute."""

    id: int
    protected_category: int
    registration_time: float = 0.0
    name: str = ""

    def __post_init__(self):
        """Check the field domains."""
        if self.id < 1:
            raise InvalidConfigError(f"student ids start at 1, got {self.id}")
        if self.protected_category not in (0, 1):
            raise InvalidConfigError(
                f"protected category of student {self.id} must be 0 or 1, "
                f"got {self.protected_category!r}"
            )


@dataclass(frozen=True)
class Bounds:
    """Inclusive bounds on the cardinality of every group."""

    lower: int
    upper: int

    def __post_init__(self):
        """Check ``0 <= lower <= upper``."""
        if not 0 <= self.lower <= self.upper:
            raise InvalidConfigError(
                f"invalid bounds [{self.lower}, {self.upper}]: "
                "expected 0 <= C_l <= C_u"
            )

    def __contains__(self, size):
        """Whether a group of ``size`` students respects the bounds."""
        return self.lower <= size <= self.upper

    def __str__(self):
        """Render as ``[C_l, C_u]``."""
        return f"[{self.lower}, {self.upper}]"


@dataclass(frozen=True, eq=False)
class WelfareMatrix:
    """Aggregated ``alpha * V + beta * W`` values per (student, topic)."""

    entries: np.ndarray
    alpha: float
    beta: float

    def __post_init__(self):
        """Freeze the entries."""
        object.__setattr__(
            self, "entries", _frozen_array(self.entries, float)
        )

    @property
    def shape(self):
        """Shape ``(n, m)``."""
        return self.entries.shape

    def __call__(self, student_id, topic):
        """Welfare of a student for a topic (both 1-based)."""
        return float(self.entries[student_id - 1, topic - 1])

    def __eq__(self, other):
        """Compare entries and weights."""
        if not isinstance(other, WelfareMatrix):
            return NotImplemented
        return (self.alpha, self.beta) == (other.alpha, other.beta) \
            and np.array_equal(self.entries, other.entries)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Instance:
    """A complete grouping problem.

    :param students: students ordered by id, ids are ``1..n``.
    :param m: number of topics.
    :param wishes: ``n x h`` matrix of 1-based topic indexes, column ``p``
        holds the ``(p+1)``-th preference.
    :param interest: ``n x m`` interest matrix V.
    :param priority: ``n x m`` priority matrix W.
    :param bounds: cardinality bounds of the groups.
    """

    students: tuple
    m: int
    wishes: np.ndarray
    interest: np.ndarray
    priority: np.ndarray
    bounds: Bounds
    alpha: float = 1.0
    beta: float = 1.0
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        """Freeze the matrices and check their shapes."""
        object.__setattr__(self, "students", tuple(self.students))
        object.__setattr__(self, "notes", tuple(self.notes))
        object.__setattr__(self, "wishes", _frozen_array(self.wishes, int))
        object.__setattr__(
            self, "interest", _frozen_array(self.interest, float)
        )
        object.__setattr__(
            self, "priority", _frozen_array(self.priority, float)
        )
        n = len(self.students)
        if self.wishes.ndim != 2 or self.wishes.shape[0] != n:
            raise ShapeMismatchError(self.wishes.shape, (n, "h"))
        for name in ("interest", "priority"):
            shape = getattr(self, name).shape
            if shape != (n, self.m):
                raise ShapeMismatchError(shape, (n, self.m))

    @property
    def n(self):
        """Number of students."""
        return len(self.students)

    @property
    def h(self):
        """Number of wishes per student."""
        return self.wishes.shape[1]

    @property
    def student_ids(self):
        """Student ids in ascending order."""
        return tuple(s.id for s in self.students)

    @cached_property
    def categories(self):
        """Map of student id to protected category."""
        return MappingProxyType(
            {s.id: s.protected_category for s in self.students}
        )

    @cached_property
    def registration_rank(self):
        """Map of student id to its position in registration order."""
        ordered = sorted(
            self.students, key=lambda s: (s.registration_time, s.id)
        )
        return MappingProxyType({s.id: r for r, s in enumerate(ordered)})

    @cached_property
    def validation(self):
        """The :class:`ValidationReport` of this instance."""
        from .validation import validate_instance
        return validate_instance(self)

    @cached_property
    def welfare(self):
        """The :class:`WelfareMatrix` of this instance."""
        from ..welfare import build_welfare
        return build_welfare(
            self.interest, self.priority, self.alpha, self.beta
        )

    def wish_list(self, student_id):
        """Wished topics of a student, most preferred first."""
        return tuple(int(t) for t in self.wishes[student_id - 1])

    def wish_rank(self, student_id, topic):
        """1-based rank of ``topic`` in the student's wishes, or None."""
        try:
            return self.wish_list(student_id).index(topic) + 1
        except ValueError:
            return None

    def with_bounds(self, lower, upper):
        """Copy of the instance with other cardinality bounds."""
        return replace(self, bounds=Bounds(lower, upper))

    def with_weights(self, alpha, beta):
        """Copy of the instance with other welfare weights."""
        return replace(self, alpha=alpha, beta=beta)

    def __eq__(self, other):
        """Compare students, matrices, bounds and weights."""
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.students == other.students
            and self.m == other.m
            and self.bounds == other.bounds
            and (self.alpha, self.beta) == (other.alpha, other.beta)
            and np.array_equal(self.wishes, other.wishes)
            and np.array_equal(self.interest, other.interest)
            and np.allclose(self.priority, other.priority)
        )

    __hash__ = None


class Grouping:
    """Disjoint topic-labeled groups of students.

    Empty groups are dropped. Groups are kept in ascending topic order and
    members in the order they were given.
    """

    def __init__(self, groups=None):
        """Constructor.

        :param groups: mapping of topic index to an iterable of student ids.
        """
        seen = {}
        cleaned = {}
        for topic in sorted(groups or {}):
            members = tuple(int(s) for s in groups[topic])
            if not members:
                continue
            if topic < 1:
                raise InvalidGroupingError(f"invalid topic index {topic}")
            for student in members:
                if student in seen:
                    raise InvalidGroupingError(
                        f"student {student} is in the groups of topics "
                        f"{seen[student]} and {topic}"
                    )
                seen[student] = topic
            cleaned[int(topic)] = members
        self._groups = MappingProxyType(cleaned)
        self._assignment = MappingProxyType(seen)

    @property
    def groups(self):
        """Read-only mapping of topic to members."""
        return self._groups

    @property
    def assignment(self):
        """Read-only mapping of student id to topic."""
        return self._assignment

    @property
    def topics(self):
        """Topics that have a group, ascending."""
        return tuple(self._groups)

    @property
    def cardinalities(self):
        """Group sizes in topic order."""
        return [len(members) for members in self._groups.values()]

    def topic_of(self, student_id):
        """Topic of the student's group, or None when unassigned."""
        return self._assignment.get(student_id)

    def unassigned(self, student_ids):
        """Ids among ``student_ids`` that are in no group."""
        return [s for s in student_ids if s not in self._assignment]

    def items(self):
        """Iterate over ``(topic, members)`` pairs."""
        return self._groups.items()

    def to_dict(self):
        """Plain ``{topic: [members]}`` copy."""
        return {t: list(members) for t, members in self._groups.items()}

    def __len__(self):
        """Number of groups."""
        return len(self._groups)

    def __iter__(self):
        """Iterate over topics."""
        return iter(self._groups)

    def __getitem__(self, topic):
        """Members of the group of ``topic``."""
        return self._groups[topic]

    def __eq__(self, other):
        """Groupings are equal when every topic has the same members."""
        if not isinstance(other, Grouping):
            return NotImplemented
        return dict(self._groups) == dict(other._groups)

    __hash__ = None

    def __repr__(self):
        """Representation."""
        return f"Grouping({self.to_dict()!r})"
