#!/usr/bin/python
# coding=UTF-8
#
# Alexstrat: Alexander stratifications of finitely presented groups
# Copyright (C) 2026
# All rights reserved.
#
# This code is distributed under the terms of the GNU General Public
# License, Version 3. See the text file "COPYING" for further details
# about the terms of this license.
#
"""The click command group, its global options and output helpers."""
from dataclasses import dataclass
from functools import wraps
import logging
import sys
from typing import Optional

import click
from flask import json

from alexstrat.config import CONFIG
from alexstrat.const import (
    ConfKey,
    ExitCode,
)
from alexstrat.utils import InputError


@dataclass
class RunConfig:
    """Options shared by every subcommand."""

    as_json: bool = False
    threads: Optional[int] = None
    verbose: bool = False


class AlexstratGroup(click.Group):
    """Command group whose usage errors exit with the input error code."""

    def make_context(self, info_name, args, parent=None, **extra):
        """Parse global options."""
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as error:
            error.exit_code = ExitCode.INPUT_ERROR
            raise

    def invoke(self, ctx):
        """Parse and run the subcommand."""
        try:
            return super().invoke(ctx)
        except click.UsageError as error:
            error.exit_code = ExitCode.INPUT_ERROR
            raise


@click.group(cls=AlexstratGroup)
@click.option('--json', 'as_json', is_flag=True,
              help='Emit JSON instead of text.')
@click.option('--threads', type=click.IntRange(min=1), default=None,
              help='Worker threads for per-character work.')
@click.option('--verbose', is_flag=True, help='Log to stderr as well.')
@click.pass_context
def cli(ctx, as_json, threads, verbose):
    """Alexander stratifications of finitely presented groups."""
    ctx.obj = RunConfig(as_json=as_json,
                        threads=threads or CONFIG[ConfKey.THREADS],
                        verbose=verbose)
    if verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(CONFIG[ConfKey.LOG_FORMAT]))
        logging.getLogger().addHandler(handler)
    logging.debug("Running with %s", ctx.obj)


def json_option(func):
    """Per-command --json flag, same effect as the global one."""
    return click.option('--json', 'as_json', is_flag=True,
                        help='Emit JSON instead of text.')(func)


def handle_input_errors(func):
    """Report InputError on stderr and exit with the input error code."""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InputError as error:
            logging.warning("Input error: %s", error)
            click.echo(f"error: {error}", err=True)
            sys.exit(ExitCode.INPUT_ERROR)
    return wrapper


def emit(run_config, as_json, payload, text):
    """Print the payload as sorted JSON, or the text form."""
    if as_json or run_config.as_json:
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(text)
