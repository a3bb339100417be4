# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Marshmallow schemas of the result documents."""

from marshmallow import EXCLUDE, Schema, fields

from ..metrics import group_balance, group_welfare


class OrderedSchema(Schema):
    """Schema keeping its fields in declaration order."""

    class Meta:
        """Meta attributes for the schema."""

        ordered = True
        unknown = EXCLUDE


class MetricsSchema(OrderedSchema):
    """Measures of one grouping."""

    nash_product = fields.Float(allow_nan=True)
    log_nash = fields.Float()
    nash_normalized = fields.Float()
    balance = fields.Float()
    satisfaction = fields.Float()
    group_count = fields.Integer()
    cardinalities = fields.List(fields.Integer())
    min_card = fields.Integer(dump_only=True)
    max_card = fields.Integer(dump_only=True)
    warnings = fields.List(fields.String())


class GroupSchema(OrderedSchema):
    """One topic group with its members."""

    topic = fields.Integer(required=True)
    members = fields.List(fields.Integer(), required=True)
    balance = fields.Float()
    welfare_sum = fields.Float()
    wished = fields.List(fields.Boolean())


class GroupingSchema(OrderedSchema):
    """A solved grouping: method, parameters, groups and measures."""

    method = fields.String()
    params = fields.Dict(keys=fields.String())
    groups = fields.List(fields.Nested(GroupSchema), required=True)
    metrics = fields.Nested(MetricsSchema)


class Cardinalities(fields.Field):
    """Group sizes as a semicolon-joined list."""

    def _serialize(self, value, attr, obj, **kwargs):
        """Join the sizes."""
        if not value:
            return ""
        return ";".join(str(size) for size in value)

    def _deserialize(self, value, attr, data, **kwargs):
        """Split the sizes."""
        return tuple(int(size) for size in value.split(";") if size)


class SweepRowSchema(OrderedSchema):
    """One ``(method, C_l)`` row of a sweep or a single run."""

    method = fields.String()
    lower = fields.Integer(data_key="C_l")
    upper = fields.Integer(data_key="C_u")
    k = fields.Integer(allow_none=True)
    nash_product = fields.Float(allow_none=True, allow_nan=True)
    nash_normalized = fields.Float(allow_none=True)
    balance = fields.Float(allow_none=True)
    satisfaction = fields.Float(allow_none=True)
    min_card = fields.Integer(allow_none=True)
    max_card = fields.Integer(allow_none=True)
    status = fields.String()
    cardinalities = Cardinalities(allow_none=True)


def group_entries(grouping, instance):
    """Per-group details of a grouping."""
    welfare = instance.welfare
    return [
        {
            "topic": topic,
            "members": list(members),
            "balance": group_balance(members, instance.categories),
            "welfare_sum": group_welfare(members, topic, welfare),
            "wished": [
                instance.wish_rank(student, topic) is not None
                for student in members
            ],
        }
        for topic, members in grouping.items()
    ]


def metrics_row(method, bounds, metrics=None, status="ok"):
    """Flat row of a run, with empty measures when it did not finish."""
    row = {
        "method": method,
        "lower": bounds.lower,
        "upper": bounds.upper,
        "status": status,
        "k": None,
        "nash_product": None,
        "nash_normalized": None,
        "balance": None,
        "satisfaction": None,
        "min_card": None,
        "max_card": None,
        "cardinalities": None,
    }
    if metrics is not None:
        row.update(
            k=metrics.group_count,
            nash_product=metrics.nash_product,
            nash_normalized=metrics.nash_normalized,
            balance=metrics.balance,
            satisfaction=metrics.satisfaction,
            min_card=metrics.min_card,
            max_card=metrics.max_card,
            cardinalities=metrics.cardinalities,
        )
    return row
