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
"""Report for the binomial-ideal screen."""
from alexstrat.kahler import kahler_obstruction_report
from alexstrat.laurent import variable_names


def kahler_report(presentation, max_degree=None, max_order=None, base=None,
                  threads=None):
    """
    Run the screen and render its report.

    Returns (Tuple[Dict, str, str]): payload, text and the status

    """
    report = kahler_obstruction_report(presentation, max_degree, max_order,
                                       base=base, threads=threads)
    names = presentation.names
    variables = variable_names(names)
    lines = [f"status: {report.status}"]
    if report.form is not None:
        lines.append(f"base relator: {report.form.base.format(names)}")
    for index, search in enumerate(report.searches, 1):
        found = ', '.join(b.format(variables) for b in search.divisors) or 'none'
        lines.append(f"p_{index} = {search.polynomial.format(variables)}")
        lines.append(f"  binomial factors: {found}")
    if report.witnesses:
        lines.append("torsion points on V(p_1, ..., p_s): "
                     + '; '.join(str(chi) for chi in report.witnesses))
    lines.append(f"bounds: max degree {report.max_degree}, "
                 f"max order {report.max_order}")
    lines.append(report.justification)
    lines.append(report.note)
    return report.to_json(), '\n'.join(lines), report.status
