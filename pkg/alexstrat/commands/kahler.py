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
"""Command: kahler-check."""
import sys

import click

from alexstrat.commands._converters import PRESENTATION
from alexstrat.commands._group import (
    cli,
    emit,
    handle_input_errors,
    json_option,
)
from alexstrat.config import CONFIG
from alexstrat.const import (
    ConfKey,
    ExitCode,
    Status,
)
from alexstrat.controllers.kahler import kahler_report


@cli.command('kahler-check')
@click.argument('presentation', type=PRESENTATION)
@click.option('--max-degree', type=click.IntRange(min=1),
              default=CONFIG[ConfKey.DEFAULT_MAX_DEGREE], show_default=True)
@click.option('--max-order', type=click.IntRange(min=1),
              default=CONFIG[ConfKey.DEFAULT_MAX_ORDER], show_default=True)
@click.option('--base-relator', default=None,
              help='Word to use as the common relator R.')
@json_option
@click.pass_obj
@handle_input_errors
def kahler_check(run_config, presentation, max_degree, max_order, base_relator,
                 as_json):
    """Screen for the binomial-ideal obstruction to being Kahler."""
    base = presentation.word(base_relator) if base_relator else None
    payload, text, status = kahler_report(presentation, max_degree, max_order,
                                          base=base, threads=run_config.threads)
    emit(run_config, as_json, payload, text)
    if status == Status.OBSTRUCTED:
        sys.exit(ExitCode.OBSTRUCTED)
