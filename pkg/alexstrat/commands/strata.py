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
"""Commands: strata, torsion-scan."""
import click

from alexstrat.commands._converters import (
    CHARACTER,
    PRESENTATION,
)
from alexstrat.commands._group import (
    cli,
    emit,
    handle_input_errors,
    json_option,
)
from alexstrat.controllers.strata import (
    strata_report,
    torsion_scan_report,
)
from alexstrat.strata import TorsionCharacter


@cli.command()
@click.argument('presentation', type=PRESENTATION)
@click.option('--at', 'character', type=CHARACTER, default=None,
              help='Character N=<N>,a=<a1,...,ar>; trivial by default.')
@click.option('--stratum', 'index', type=click.IntRange(min=0), default=None,
              help='Also report membership of V_i and W_i.')
@json_option
@click.pass_obj
@handle_input_errors
def strata(run_config, presentation, character, index, as_json):
    """Rank of the Alexander matrix at a torsion character."""
    if character is None:
        character = TorsionCharacter(1, (0,) * presentation.rank)
    payload, text = strata_report(presentation, character, index)
    emit(run_config, as_json, payload, text)


@cli.command('torsion-scan')
@click.argument('presentation', type=PRESENTATION)
@click.option('--stratum', 'index', type=click.IntRange(min=1), default=1,
              show_default=True)
@click.option('--order', 'modulus', type=click.IntRange(min=1), required=True,
              help='Scan characters of order dividing N.')
@click.option('--jumping', is_flag=True, help='Filter by W_i instead of V_i.')
@json_option
@click.pass_obj
@handle_input_errors
def torsion_scan(run_config, presentation, index, modulus, jumping, as_json):
    """Torsion characters of order dividing N lying in V_i."""
    payload, text = torsion_scan_report(presentation, index, modulus,
                                        jumping=jumping,
                                        threads=run_config.threads)
    emit(run_config, as_json, payload, text)
