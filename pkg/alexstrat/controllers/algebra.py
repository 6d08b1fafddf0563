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
"""Reports for Fox derivatives, Alexander matrices and abelianizations."""
from alexstrat.const import ReportField
from alexstrat.fox import (
    apply_abelianization_quotient,
    fox_gradient,
)
from alexstrat.laurent import variable_names
from alexstrat.strata import (
    cached_abelianization,
    cached_alexander_matrix,
    rank_at_trivial,
)


def derive_report(presentation, word=None):
    """
    Fox partials of one word, or of every relator.

    Args:
        presentation (Presentation):
        word (Optional[Word]):

    Returns (Tuple[Dict, str]): payload and text

    """
    names = presentation.names
    variables = variable_names(names)
    words = [word] if word is not None else list(presentation.relators)
    derivatives = []
    lines = []
    for item in words:
        text = item.format(names)
        gradient = fox_gradient(item)
        derivatives.append({
            ReportField.WORD: text,
            ReportField.PARTIALS: {name: poly.to_json()
                                   for name, poly in zip(names, gradient)},
        })
        lines.append(f"w = {text}")
        lines.extend(f"  D_{name}(w) = {poly.format(variables)}"
                     for name, poly in zip(names, gradient))
    payload = {ReportField.GENERATORS: list(names),
               ReportField.VARIABLES: variables,
               ReportField.DERIVATIVES: derivatives}
    return payload, '\n'.join(lines)


def matrix_report(presentation, quotient=False):
    """
    The Alexander matrix, optionally over Z[ab(Gamma) / torsion].

    Returns (Tuple[Dict, str]):

    """
    matrix = cached_alexander_matrix(presentation)
    if quotient:
        variables, entries = apply_abelianization_quotient(matrix)
        rows = [[poly.to_json() for poly in row] for row in entries]
    else:
        variables, rows = matrix.variables(), matrix.to_json()
    payload = {
        ReportField.GENERATORS: list(presentation.names),
        ReportField.RELATORS: [rel.format(presentation.names)
                               for rel in presentation.relators],
        ReportField.VARIABLES: variables,
        ReportField.MATRIX: rows,
    }
    return payload, matrix.format(quotient=quotient)


def abelianization_report(presentation):
    """
    ab(Gamma) with the rank of M at the trivial character.

    Returns (Tuple[Dict, str]):

    """
    data = cached_abelianization(presentation)
    trivial_rank = rank_at_trivial(presentation)
    payload = {
        ReportField.ABELIANIZATION: data.describe(),
        ReportField.BETTI: data.betti,
        ReportField.TORSION: list(data.torsion),
        ReportField.RANK: trivial_rank,
    }
    torsion = ', '.join(map(str, data.torsion)) or 'none'
    text = '\n'.join([f"ab = {data.describe()}",
                      f"b1 = {data.betti}",
                      f"torsion: {torsion}",
                      f"rank at trivial character = {trivial_rank}"])
    return payload, text
