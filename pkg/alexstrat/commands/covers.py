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
"""Commands: betti, betti-table."""
import sys

import click

from alexstrat.commands._converters import (
    GROUP,
    PRESENTATION,
)
from alexstrat.commands._group import (
    cli,
    emit,
    handle_input_errors,
    json_option,
)
from alexstrat.const import ExitCode
from alexstrat.controllers.covers import (
    betti_report,
    betti_table_report,
)
from alexstrat.covers import (
    cyclic_epimorphism,
    parse_images,
    validate_epimorphism,
)


@cli.command()
@click.argument('presentation', type=PRESENTATION)
@click.option('--group', 'target', type=GROUP, required=True,
              help='Cyclic orders, e.g. 6 or 2,2.')
@click.option('--images', default=None,
              help='Generator images, e.g. "x:1;y:1" or "x:1,0;y:0,1".')
@json_option
@click.pass_obj
@handle_input_errors
def betti(run_config, presentation, target, images, as_json):
    """b1 of the cover given by an epimorphism onto a finite abelian group."""
    if images is None:
        if len(target.orders) != 1:
            raise click.UsageError('--images is required for non-cyclic groups')
        alpha = cyclic_epimorphism(presentation, target.orders[0])
    else:
        alpha = validate_epimorphism(
            presentation, target, parse_images(images, presentation, target))
    payload, text, agree = betti_report(presentation, alpha,
                                        threads=run_config.threads)
    emit(run_config, as_json, payload, text)
    if not agree:
        click.echo("error: formula, oracle and cross check disagree", err=True)
        sys.exit(ExitCode.DISAGREEMENT)


@cli.command('betti-table')
@click.argument('presentation', type=PRESENTATION)
@click.option('--max-order', type=click.IntRange(min=1), default=12,
              show_default=True)
@json_option
@click.pass_obj
@handle_input_errors
def betti_table(run_config, presentation, max_order, as_json):
    """b1 of the cyclic covers of order 1..n, formula next to oracle."""
    payload, text, agree = betti_table_report(presentation, max_order,
                                              threads=run_config.threads)
    emit(run_config, as_json, payload, text)
    if not agree:
        click.echo("error: formula, oracle and cross check disagree", err=True)
        sys.exit(ExitCode.DISAGREEMENT)
