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
"""Commands: derive, matrix, abelianization."""
import click

from alexstrat.commands._converters import PRESENTATION
from alexstrat.commands._group import (
    cli,
    emit,
    handle_input_errors,
    json_option,
)
from alexstrat.controllers.algebra import (
    abelianization_report,
    derive_report,
    matrix_report,
)


@cli.command()
@click.argument('presentation', type=PRESENTATION)
@click.argument('word', required=False)
@json_option
@click.pass_obj
@handle_input_errors
def derive(run_config, presentation, word, as_json):
    """Fox partials of WORD, or of every relator when WORD is omitted."""
    parsed = presentation.word(word) if word is not None else None
    payload, text = derive_report(presentation, parsed)
    emit(run_config, as_json, payload, text)


@cli.command()
@click.argument('presentation', type=PRESENTATION)
@click.option('--quotient', is_flag=True,
              help='Print entries over Z[ab / torsion] instead.')
@json_option
@click.pass_obj
@handle_input_errors
def matrix(run_config, presentation, quotient, as_json):
    """The Alexander matrix, one row per generator."""
    payload, text = matrix_report(presentation, quotient=quotient)
    emit(run_config, as_json, payload, text)


@cli.command()
@click.argument('presentation', type=PRESENTATION)
@json_option
@click.pass_obj
@handle_input_errors
def abelianization(run_config, presentation, as_json):
    """ab of the group: free rank and torsion invariants."""
    payload, text = abelianization_report(presentation)
    emit(run_config, as_json, payload, text)
