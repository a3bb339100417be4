# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 MFC-Grouping contributors.
#
# MFC-Grouping is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Command-line tools for grouping students.

Exit codes: 0 success, 1 usage or configuration error, 2 infeasible
bounds, 3 ingestion error, 4 internal guard tripped.
"""

import logging
from functools import wraps

import click

from . import config as mfc_config
from .errors import InvalidConfigError, MFCGroupingError
from .fixtures import GeneratorConfig, generate_semisynthetic, load_dataset
from .metrics import describe_instance
from .records import Bounds, check_feasibility
from .serializers import FORMATS, render_grouping
from .solvers import SOLVERS, SolverConfig, get_solver
from .sweep import SweepConfig, run_sweep, summarize_sweep

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
HELP_MSG_GENERATE = "Generate a semi-synthetic roster from 'n,m,h,seed'."


def _configure_logging(verbose):
    level = max(logging.WARNING - 10 * verbose, logging.DEBUG)
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger("mfc_grouping").setLevel(level)


def handle_errors(func):
    """Report package errors in red and exit with their exit code."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MFCGroupingError as error:
            click.secho(f"Error: {error}", fg="red", err=True)
            raise SystemExit(error.exit_code)
        except OSError as error:
            click.secho(f"Error: {error}", fg="red", err=True)
            raise SystemExit(1)
    return wrapper


def instance_options(func):
    """Options selecting the roster, the bounds and the welfare weights."""
    options = [
        click.option("-i", "--input", "input_path",
                     type=click.Path(dir_okay=False),
                     help="Roster CSV file."),
        click.option("-g", "--generate", help=HELP_MSG_GENERATE),
        click.option("--alpha", type=float, default=None,
                     help="Weight of the interest matrix V."),
        click.option("--beta", type=float, default=None,
                     help="Weight of the priority matrix W."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def solver_options(func):
    """Options shared by the solvers."""
    options = [
        click.option("--balance-tiebreak/--no-balance-tiebreak",
                     default=None,
                     help="Break ties towards more balanced groups."),
        click.option("--mod-basis",
                     type=click.Choice(mfc_config.MFC_MOD_BASES),
                     default=None,
                     help="Basis of the knapsack budget rule."),
        click.option("--topic-order",
                     type=click.Choice(mfc_config.MFC_TOPIC_ORDERS),
                     default=None,
                     help="Order in which the knapsack visits topics."),
        click.option("--max-states", type=int, default=None,
                     help="Largest m**n the oracle enumerates."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _load_instance(ctx, input_path, generate, bounds, alpha=None,
                   beta=None):
    if bool(input_path) == bool(generate):
        raise InvalidConfigError(
            "give exactly one of --input and --generate"
        )
    if input_path:
        return load_dataset(
            input_path, schema=ctx.obj["schema"], bounds=bounds,
            alpha=alpha, beta=beta,
        )
    instance = generate_semisynthetic(
        GeneratorConfig.parse(generate), bounds=bounds
    )
    if alpha is not None or beta is not None:
        instance = instance.with_weights(
            instance.alpha if alpha is None else alpha,
            instance.beta if beta is None else beta,
        )
    return instance


def _bounds(cl, cu):
    if cl is None:
        cl = mfc_config.MFC_DEFAULT_BOUNDS[0]
        cu = mfc_config.MFC_DEFAULT_BOUNDS[1] if cu is None else cu
    elif cu is None:
        cu = cl + mfc_config.MFC_SWEEP_CU_OFFSET
    return Bounds(cl, cu)


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fp:
            fp.write(text)
        click.secho(f"Wrote {out}", fg="green", err=True)
    else:
        click.echo(text, nl=False)


@click.group()
@click.option("-v", "--verbose", count=True,
              help="Log more (repeat for debug output).")
@click.option("--schema", type=click.Path(exists=True, dir_okay=False),
              help="YAML file overriding roster column names.")
@click.pass_context
def mfc_grouping(ctx, verbose, schema):
    """Fair capacitated grouping of students into topic groups."""
    _configure_logging(verbose)
    ctx.ensure_object(dict)
    ctx.obj["schema"] = schema


@mfc_grouping.command()
@instance_options
@click.option("--cl", type=int, default=None, help="Lower group size C_l.")
@click.option("--cu", type=int, default=None, help="Upper group size C_u.")
@click.option("-m", "--method", type=click.Choice(sorted(SOLVERS)),
              default="heuristic", show_default=True)
@solver_options
@click.option("-o", "--out", type=click.Path(dir_okay=False),
              help="Output file, standard output when omitted.")
@click.option("-f", "--format", "format_", type=click.Choice(FORMATS),
              default="json", show_default=True)
@click.pass_context
@handle_errors
def solve(ctx, input_path, generate, alpha, beta, cl, cu, method,
          balance_tiebreak, mod_basis, topic_order, max_states, out,
          format_):
    """Group a roster and write the grouping or its measures."""
    instance = _load_instance(
        ctx, input_path, generate, _bounds(cl, cu), alpha, beta
    )
    config = SolverConfig.build(
        balance_tiebreak=balance_tiebreak,
        mod_basis=mod_basis,
        topic_order=topic_order,
        max_states=max_states,
    )
    grouping, metrics = get_solver(method, config).solve(instance)
    params = {
        "C_l": instance.bounds.lower,
        "C_u": instance.bounds.upper,
        "alpha": instance.alpha,
        "beta": instance.beta,
        "balance_tiebreak": config.balance_tiebreak,
        "mod_basis": config.mod_basis,
        "topic_order": config.topic_order,
    }
    _write(
        render_grouping(
            grouping, metrics, instance, format_, method, params
        ),
        out,
    )
    click.secho(
        f"{method}: k={metrics.group_count} "
        f"nash={metrics.nash_normalized:.4f} "
        f"balance={float(metrics.balance):.3f} "
        f"satisfaction={float(metrics.satisfaction):.3f}",
        fg="green", err=True,
    )


@mfc_grouping.command()
@instance_options
@click.option("--cl-range", nargs=2, type=int, default=None,
              help="First and last lower bound C_l (inclusive).")
@click.option("--cu-offset", type=int, default=None,
              help="C_u = C_l + offset.")
@click.option("--methods", default=",".join(mfc_config.MFC_SWEEP_METHODS),
              show_default=True, help="Comma-separated methods.")
@solver_options
@click.option("-o", "--out", type=click.Path(dir_okay=False),
              help="Output file, standard output when omitted.")
@click.option("-f", "--format", "format_", type=click.Choice(FORMATS),
              default="csv", show_default=True)
@click.pass_context
@handle_errors
def sweep(ctx, input_path, generate, alpha, beta, cl_range, cu_offset,
          methods, balance_tiebreak, mod_basis, topic_order, max_states,
          out, format_):
    """Solve for a range of lower bounds and write one row per run."""
    instance = _load_instance(ctx, input_path, generate, None, alpha, beta)
    options = {
        "methods": tuple(m.strip() for m in methods.split(",") if m.strip()),
        "solver": SolverConfig.build(
            balance_tiebreak=balance_tiebreak,
            mod_basis=mod_basis,
            topic_order=topic_order,
            max_states=max_states,
        ),
    }
    if cl_range:
        options["lower_range"] = tuple(cl_range)
    if cu_offset is not None:
        options["upper_offset"] = cu_offset
    result = run_sweep(instance, SweepConfig(**options))
    _write(result.render(format_), out)
    for method, entry in summarize_sweep(result).items():
        if not entry["runs"]:
            click.secho(f"{method}: no feasible run", fg="yellow", err=True)
            continue
        click.secho(
            f"{method}: {entry['runs']} runs, "
            f"mean nash={entry['nash_normalized']:.4f} "
            f"balance={entry['balance']:.3f} "
            f"satisfaction={entry['satisfaction']:.3f}",
            fg="green", err=True,
        )


@mfc_grouping.command()
@instance_options
@click.option("--cl", type=int, default=None, help="Lower group size C_l.")
@click.option("--cu", type=int, default=None, help="Upper group size C_u.")
@click.pass_context
@handle_errors
def validate(ctx, input_path, generate, alpha, beta, cl, cu):
    """Check a roster and report its figures and feasibility."""
    instance = _load_instance(
        ctx, input_path, generate, _bounds(cl, cu), alpha, beta
    )
    for key, value in describe_instance(instance).items():
        click.echo(f"{key}: {value}")
    verdict = check_feasibility(instance.n, instance.bounds, instance.m)
    if verdict:
        click.echo(
            f"bounds {instance.bounds}: feasible for k in "
            f"{verdict.k_min}..{verdict.k_max}"
        )
    else:
        click.echo(f"bounds {instance.bounds}: infeasible")
    report = instance.validation
    for note in report.notes:
        click.secho(f"note: {note}", fg="yellow")
    for violation in report.violations:
        click.secho(f"violation: {violation}", fg="red")
    if not report:
        raise SystemExit(3)
    click.secho("Roster is valid.", fg="green")


@mfc_grouping.command()
@click.option("-n", "--students", "n", type=int, required=True)
@click.option("-m", "--topics", "m", type=int, required=True)
@click.option("-h", "--wishes", "h", type=int,
              default=3, show_default=True)
@click.option("-s", "--seed", type=int, default=0, show_default=True)
@click.option("-p", "--preset",
              type=click.Choice(sorted(mfc_config.MFC_ROSTER_PROPORTIONS)),
              default=None, help="Protected attribute proportions.")
@click.option("-o", "--out", type=click.Path(dir_okay=False),
              required=True)
@handle_errors
def generate(n, m, h, seed, preset, out):
    """Write a semi-synthetic roster file."""
    if preset:
        config = GeneratorConfig.preset(preset, n, m, h, seed=seed)
    else:
        config = GeneratorConfig(n, m, h, seed=seed)
    generate_semisynthetic(config, path=out)
    click.secho(
        f"Wrote {n} students ({config.header()}) to {out}", fg="green"
    )
