# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Roster files.

A roster is a comma-separated file with a header row and one student per
line::

    ID,Name,Gender,wish1,wish2,wish3,Time,T1,...,Tm

Lines starting with ``#`` are comments. The priority columns ``T1..Tm``
are optional when a registration time column is present; the time is
either a number (an integer rank works) or an ISO-8601 date-time.
"""

import csv
import logging
import re
from dataclasses import dataclass

import arrow
import numpy as np
import yaml
from marshmallow import EXCLUDE, Schema, ValidationError, fields, pre_load, \
    validate, validates_schema

from .. import config as mfc_config
from ..errors import DuplicateStudentError, IngestionError, \
    InvalidConfigError, InvalidTopicIndexError, MalformedWishesError, \
    MissingColumnError, NoPrioritySourceError
from ..records import Bounds, Student
from ..welfare import build_instance

logger = logging.getLogger(__name__)

_COLUMNS = mfc_config.MFC_DATASET_COLUMNS


#
# Column layout
#
@dataclass(frozen=True)
class DatasetSchema:
    """Column names of a roster file."""

    id: str = _COLUMNS["id"]
    name: str = _COLUMNS["name"]
    protected: str = _COLUMNS["protected"]
    wish_prefix: str = _COLUMNS["wish_prefix"]
    time: str = _COLUMNS["time"]
    priority_prefix: str = _COLUMNS["priority_prefix"]

    @classmethod
    def from_yaml(cls, path):
        """Load column overrides from a YAML mapping."""
        with open(path) as fp:
            # Allow empty files
            overrides = yaml.safe_load(fp) or {}
        if not isinstance(overrides, dict):
            raise InvalidConfigError(
                f"column schema {path} must be a mapping"
            )
        unknown = set(overrides) - set(_COLUMNS)
        if unknown:
            raise InvalidConfigError(
                f"unknown schema keys: {', '.join(sorted(unknown))}"
            )
        return cls(**{k: str(v) for k, v in overrides.items()})

    @classmethod
    def resolve(cls, schema):
        """Accept a schema, a YAML path or None (defaults)."""
        if schema is None:
            return cls()
        if isinstance(schema, cls):
            return schema
        return cls.from_yaml(schema)

    def _numbered(self, header, prefix):
        pattern = re.compile(rf"^{re.escape(prefix)}(\d+)$")
        found = {}
        for column in header:
            match = pattern.match(column or "")
            if match:
                found[int(match.group(1))] = column
        if found and sorted(found) != list(range(1, len(found) + 1)):
            raise IngestionError(
                f"columns '{prefix}<j>' must be numbered 1..{len(found)}"
            )
        return [found[j] for j in sorted(found)]

    def wish_columns(self, header):
        """Wish columns of ``header``, most preferred first."""
        return self._numbered(header, self.wish_prefix)

    def priority_columns(self, header):
        """Priority columns of ``header`` in topic order."""
        return self._numbered(header, self.priority_prefix)

    def header(self, h, m):
        """Full header written for ``h`` wishes and ``m`` topics."""
        return (
            [self.id, self.name, self.protected]
            + [f"{self.wish_prefix}{p}" for p in range(1, h + 1)]
            + [self.time]
            + [f"{self.priority_prefix}{j}" for j in range(1, m + 1)]
        )


#
# Row validation
#
class ProtectedCategory(fields.Field):
    """Protected attribute label, loaded as 0 or 1."""

    def _deserialize(self, value, attr, data, **kwargs):
        """Map a label to its category."""
        labels = {
            k.lower(): v for k, v in mfc_config.MFC_PROTECTED_VALUES.items()
        }
        try:
            return labels[str(value).strip().lower()]
        except KeyError:
            raise ValidationError(
                f"unknown protected attribute value '{value}'"
            )

    def _serialize(self, value, attr, obj, **kwargs):
        """Write the label of a category."""
        if value is None:
            return None
        return mfc_config.MFC_PROTECTED_LABELS[value]


class RegistrationTime(fields.Field):
    """Registration time, loaded as a float timestamp."""

    def _deserialize(self, value, attr, data, **kwargs):
        """Parse a number or an ISO-8601 date-time."""
        text = str(value).strip()
        try:
            return float(text)
        except ValueError:
            pass
        try:
            return arrow.get(text).float_timestamp
        except (ValueError, TypeError):
            raise ValidationError(f"invalid registration time '{value}'")


class StudentRowSchema(Schema):
    """Base schema of a roster line; columns are added per file."""

    class Meta:
        """Meta attributes for the schema."""

        unknown = EXCLUDE

    wish_count = 0
    """Number of ``wish`` columns."""

    topic_count = None
    """Number of topics m, None until known."""

    @pre_load
    def drop_blank_cells(self, data, **kwargs):
        """Treat empty cells as missing values."""
        return {
            k: v.strip() for k, v in data.items()
            if k is not None and isinstance(v, str) and v.strip()
        }

    @validates_schema
    def validate_wishes(self, data, **kwargs):
        """Wishes are distinct topics of ``1..m``."""
        wished = [data[f"wish_{p}"] for p in range(1, self.wish_count + 1)]
        for topic in wished:
            if topic < 1 or (self.topic_count and topic > self.topic_count):
                raise InvalidTopicIndexError(topic, self.topic_count)
        if len(set(wished)) != len(wished):
            raise MalformedWishesError("wished topics must be distinct")


def make_row_schema(schema, h, m=0, with_time=True, topics=None):
    """Build the row schema class of a file layout.

    :param schema: the :class:`DatasetSchema`.
    :param h: number of wish columns.
    :param m: number of priority columns (0 when absent).
    :param with_time: whether the file has a registration time column.
    :param topics: number of topics when known before reading the rows.
    """
    attrs = {
        "wish_count": h,
        "topic_count": topics or m or None,
        "id": fields.Integer(
            required=True, data_key=schema.id,
            validate=validate.Range(min=1),
        ),
        "name": fields.String(load_default="", data_key=schema.name),
        "protected": ProtectedCategory(
            required=True, data_key=schema.protected
        ),
    }
    for p in range(1, h + 1):
        attrs[f"wish_{p}"] = fields.Integer(
            required=True, data_key=f"{schema.wish_prefix}{p}"
        )
    if with_time:
        attrs["time"] = RegistrationTime(
            required=True, data_key=schema.time
        )
    for j in range(1, m + 1):
        attrs[f"priority_{j}"] = fields.Float(
            load_default=0.0, data_key=f"{schema.priority_prefix}{j}",
            validate=validate.Range(min=0),
        )
    return type("RosterRowSchema", (StudentRowSchema, ), attrs)


#
# Reading
#
def _data_lines(fp):
    for line in fp:
        if not line.lstrip().startswith("#"):
            yield line


def _read_rows(path):
    """Header and rows of a roster file, comments skipped."""
    with open(path, newline="", encoding="utf-8") as fp:
        reader = csv.DictReader(_data_lines(fp))
        header = list(reader.fieldnames or [])
        rows = list(reader)
    return header, rows


def load_dataset(path, schema=None, bounds=None, m=None, alpha=None,
                 beta=None):
    """Load a roster file into an :class:`~mfc_grouping.records.Instance`.

    V is built from the wish columns. W is read verbatim from the priority
    columns when present, otherwise built from the registration times with
    ties broken by student id. Rows are numbered from 1, header excluded.

    :param path: CSV file.
    :param schema: a :class:`DatasetSchema`, a YAML file of column
        overrides, or None for the default column names.
    :param bounds: :class:`~mfc_grouping.records.Bounds` or a ``(C_l,
        C_u)`` pair; defaults to ``MFC_DEFAULT_BOUNDS``.
    :param m: number of topics; taken from the priority columns when
        present, else from the largest wished topic.
    """
    schema = DatasetSchema.resolve(schema)
    header, rows = _read_rows(path)
    for column in (schema.id, schema.protected):
        if column not in header:
            raise MissingColumnError(column)
    wish_columns = schema.wish_columns(header)
    if not wish_columns:
        raise MissingColumnError(f"{schema.wish_prefix}1")
    priority_columns = schema.priority_columns(header)
    with_time = schema.time in header
    if not with_time and not priority_columns:
        raise NoPrioritySourceError()
    if priority_columns:
        if m is not None and m != len(priority_columns):
            raise IngestionError(
                f"expected {m} priority columns, found "
                f"{len(priority_columns)}"
            )
        m = len(priority_columns)

    h = len(wish_columns)
    row_schema = make_row_schema(
        schema, h, m=len(priority_columns), with_time=with_time, topics=m
    )()
    loaded = {}
    for row_number, row in enumerate(rows, start=1):
        try:
            data = row_schema.load(row)
        except ValidationError as error:
            raise IngestionError(
                f"invalid values {error.normalized_messages()}",
                row=row_number,
            )
        except IngestionError as error:
            raise error.at_row(row_number)
        if data["id"] in loaded:
            raise DuplicateStudentError(data["id"], row=row_number)
        loaded[data["id"]] = data
    if not loaded:
        raise IngestionError(f"no students in {path}")

    ids = sorted(loaded)
    if ids != list(range(1, len(ids) + 1)):
        raise IngestionError(f"student ids must be 1..{len(ids)}")
    records = [loaded[i] for i in ids]
    wishes = [[r[f"wish_{p}"] for p in range(1, h + 1)] for r in records]
    if m is None:
        m = max(max(w) for w in wishes)
        logger.info("No priority columns, assuming m=%s topics", m)

    students = [
        Student(
            id=r["id"],
            protected_category=r["protected"],
            registration_time=r.get("time", 0.0),
            name=r["name"],
        )
        for r in records
    ]
    notes = []
    priority = None
    if priority_columns:
        priority = np.array([
            [r[f"priority_{j}"] for j in range(1, m + 1)] for r in records
        ])
        notes.append("W read from priority columns")
    if bounds is None:
        bounds = Bounds(*mfc_config.MFC_DEFAULT_BOUNDS)
    elif not isinstance(bounds, Bounds):
        bounds = Bounds(*bounds)

    instance = build_instance(
        students, wishes, m, bounds,
        alpha=mfc_config.MFC_ALPHA if alpha is None else alpha,
        beta=mfc_config.MFC_BETA if beta is None else beta,
        priority=priority,
        notes=notes,
    )
    report = instance.validation
    for note in report.notes:
        logger.info(note)
    for violation in report.violations:
        logger.warning(violation)
    logger.info(
        "Loaded %s students, %s topics, %s wishes from %s",
        instance.n, instance.m, instance.h, path,
    )
    return instance


#
# Writing
#
def _format_number(value):
    value = float(value)
    return str(int(value)) if value.is_integer() else repr(value)


def dump_dataset(instance, path, schema=None, comment=None,
                 iso_times=False):
    """Write an instance as a roster file that loads back to it.

    :param comment: optional text written as a leading ``#`` line.
    :param iso_times: write registration times as ISO-8601 date-times
        instead of plain numbers.
    """
    schema = DatasetSchema.resolve(schema)
    labels = mfc_config.MFC_PROTECTED_LABELS
    with open(path, "w", newline="", encoding="utf-8") as fp:
        if comment:
            fp.write(f"# {comment}\n")
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(schema.header(instance.h, instance.m))
        for student in instance.students:
            if iso_times:
                time = arrow.get(student.registration_time).isoformat()
            else:
                time = _format_number(student.registration_time)
            writer.writerow(
                [student.id, student.name,
                 labels[student.protected_category]]
                + list(instance.wish_list(student.id))
                + [time]
                + [repr(float(w)) for w in instance.priority[student.id - 1]]
            )
    logger.debug("Wrote %s students to %s", instance.n, path)
    return path
