# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Result serializers.

Groupings are written as a JSON document, measures as long-format CSV
rows (one per method and lower bound). Two runs on the same inputs write
byte-identical files.
"""

import csv
import io
import json
import logging

from .. import config as mfc_config
from ..errors import IncompletePartitionError, InvalidConfigError
from ..records import Grouping, is_complete_partition
from .schema import GroupingSchema, GroupSchema, MetricsSchema, \
    SweepRowSchema, group_entries, metrics_row

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv")


def _to_json(data):
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


class GroupingJSONSerializer:
    """Marshmallow based JSON serializer for groupings."""

    schema_cls = GroupingSchema

    def dump_obj(self, grouping, metrics, instance, method="", params=None):
        """Dump a grouping with its groups' details and measures."""
        return self.schema_cls().dump({
            "method": method,
            "params": dict(params or {}),
            "groups": group_entries(grouping, instance),
            "metrics": metrics,
        })

    def serialize_object(self, grouping, metrics, instance, method="",
                         params=None):
        """Serialize a grouping into a JSON string."""
        return _to_json(
            self.dump_obj(grouping, metrics, instance, method, params)
        )

    def load_obj(self, text):
        """Load a JSON document back into a grouping and its document."""
        document = self.schema_cls().load(json.loads(text))
        grouping = Grouping({
            group["topic"]: group["members"] for group in document["groups"]
        })
        return grouping, document


class MetricsCSVSerializer:
    """Long-format CSV serializer for measure rows."""

    schema_cls = SweepRowSchema

    def dump_list(self, rows):
        """Dump rows (objects or mappings) to plain dictionaries."""
        return self.schema_cls().dump(rows, many=True)

    def serialize_object_list(self, rows):
        """Serialize rows into CSV text with a header line."""
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer, fieldnames=mfc_config.MFC_CSV_FIELDS, lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(self.dump_list(rows))
        return buffer.getvalue()


class MetricsJSONSerializer(MetricsCSVSerializer):
    """JSON list serializer for measure rows."""

    def serialize_object_list(self, rows):
        """Serialize rows into a JSON list."""
        return _to_json(self.dump_list(rows))


def _check_format(format):
    if format not in FORMATS:
        raise InvalidConfigError(
            f"unknown format '{format}', expected one of {', '.join(FORMATS)}"
        )


def render_grouping(grouping, metrics, instance, format="json", method="",
                    params=None):
    """Text of a grouping document (``json``) or a metrics row (``csv``).

    :raises IncompletePartitionError: when the grouping leaves a student
        out or breaks the cardinality bounds.
    """
    _check_format(format)
    if not is_complete_partition(grouping, instance):
        raise IncompletePartitionError(
            "refusing to emit an incomplete partition "
            f"(cardinalities {grouping.cardinalities}, bounds "
            f"{instance.bounds})"
        )
    if format == "json":
        return GroupingJSONSerializer().serialize_object(
            grouping, metrics, instance, method, params
        )
    return MetricsCSVSerializer().serialize_object_list(
        [metrics_row(method, instance.bounds, metrics)]
    )


def emit_grouping(grouping, metrics, path, format="json", *, instance,
                  method="", params=None):
    """Write a grouping document or a one-row metrics CSV to ``path``."""
    text = render_grouping(
        grouping, metrics, instance, format, method, params
    )
    with open(path, "w", encoding="utf-8", newline="") as fp:
        fp.write(text)
    logger.debug("Wrote %s grouping to %s", format, path)
    return path


def read_grouping(path):
    """Read a grouping document written by :func:`emit_grouping`.

    :returns: ``(Grouping, document)``.
    """
    with open(path, encoding="utf-8") as fp:
        return GroupingJSONSerializer().load_obj(fp.read())


def render_rows(rows, format="csv"):
    """Text of measure rows in ``csv`` or ``json``."""
    _check_format(format)
    if format == "csv":
        return MetricsCSVSerializer().serialize_object_list(rows)
    return MetricsJSONSerializer().serialize_object_list(rows)


def write_rows(rows, path, format="csv"):
    """Write measure rows to ``path``."""
    with open(path, "w", encoding="utf-8", newline="") as fp:
        fp.write(render_rows(rows, format))
    return path


__all__ = (
    'FORMATS',
    'GroupSchema',
    'GroupingJSONSerializer',
    'GroupingSchema',
    'MetricsCSVSerializer',
    'MetricsJSONSerializer',
    'MetricsSchema',
    'SweepRowSchema',
    'emit_grouping',
    'metrics_row',
    'read_grouping',
    'render_grouping',
    'render_rows',
    'write_rows',
)
