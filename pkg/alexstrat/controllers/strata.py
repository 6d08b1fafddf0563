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
"""Reports for stratum membership and torsion scans."""
from alexstrat.const import ReportField
from alexstrat.strata import (
    stratum_report,
    torsion_scan,
)


def _yes_no(flag):
    return 'yes' if flag else 'no'


def strata_report(presentation, character, index=None):
    """
    Stratum data at one character, with membership of V_i and W_i if asked.

    Args:
        presentation (Presentation):
        character (TorsionCharacter):
        index (Optional[int]):

    Returns (Tuple[Dict, str]):

    """
    report = stratum_report(presentation, character)
    payload = report.to_json()
    lines = [f"character: {report.character}",
             f"rank: {report.rank}",
             f"dim C1: {report.dim_c1}",
             f"dim H1: {report.dim_h1}",
             f"depth: {report.depth}"]
    if index is not None:
        payload[ReportField.STRATUM] = index
        payload[ReportField.IN_STRATUM] = report.in_stratum(index)
        payload[ReportField.IN_JUMPING_LOCUS] = report.in_jumping_locus(index)
        lines.append(f"in V_{index}: {_yes_no(report.in_stratum(index))}")
        lines.append(f"in W_{index}: {_yes_no(report.in_jumping_locus(index))}")
    return payload, '\n'.join(lines)


def torsion_scan_report(presentation, index, modulus, jumping=False,
                        threads=None):
    """
    Characters of order dividing N in V_i (or W_i).

    Returns (Tuple[Dict, str]):

    """
    characters = torsion_scan(presentation, index, modulus, jumping=jumping,
                              threads=threads)
    payload = {
        ReportField.STRATUM: index,
        ReportField.ORDER: modulus,
        ReportField.JUMPING: jumping,
        ReportField.CHARACTERS: [chi.to_json() for chi in characters],
    }
    locus = 'W' if jumping else 'V'
    lines = [f"{locus}_{index}, order dividing {modulus}: "
             f"{len(characters)} characters"]
    lines.extend(str(chi) for chi in characters)
    return payload, '\n'.join(lines)
