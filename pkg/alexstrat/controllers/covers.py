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
"""Reports for Betti numbers of finite abelian covers."""
import logging

import pandas as pd

from alexstrat.const import ReportField
from alexstrat.covers import (
    betti_cover_cross_check,
    betti_cover_formula,
    betti_cover_oracle,
    cyclic_epimorphism,
)

TABLE_COLUMNS = [ReportField.ORDER, ReportField.FORMULA, ReportField.ORACLE,
                 ReportField.CROSS_CHECK]


def betti_report(presentation, alpha, threads=None):
    """
    b_1 of the cover by the formula, the oracle and the W_i count.

    Returns (Tuple[Dict, str, bool]): payload, text and whether all three
        computations agree

    """
    formula = betti_cover_formula(presentation, alpha, threads=threads)
    oracle = betti_cover_oracle(presentation, alpha)
    cross_check = betti_cover_cross_check(presentation, alpha, threads=threads)
    agree = formula == oracle == cross_check
    if not agree:
        logging.error("Betti numbers disagree: formula %d, oracle %d, "
                      "cross check %d", formula, oracle, cross_check)
    payload = alpha.to_json()
    payload.update({ReportField.FORMULA: formula,
                    ReportField.ORACLE: oracle,
                    ReportField.CROSS_CHECK: cross_check})
    return payload, f"b1 = {formula} (formula) / {oracle} (oracle)", agree


def betti_table(presentation, max_order, threads=None):
    """
    b_1 of the cyclic covers of order 1..max_order.

    Returns (pandas.DataFrame): columns order, formula, oracle, cross_check

    """
    rows = []
    for order in range(1, max_order + 1):
        alpha = cyclic_epimorphism(presentation, order)
        rows.append({ReportField.ORDER: order,
                     ReportField.FORMULA: betti_cover_formula(
                         presentation, alpha, threads=threads),
                     ReportField.ORACLE: betti_cover_oracle(presentation, alpha),
                     ReportField.CROSS_CHECK: betti_cover_cross_check(
                         presentation, alpha, threads=threads)})
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def betti_table_report(presentation, max_order, threads=None):
    """
    Table of cyclic cover Betti numbers.

    Returns (Tuple[Dict, str, bool]):

    """
    frame = betti_table(presentation, max_order, threads=threads)
    agree = bool(((frame[ReportField.FORMULA] == frame[ReportField.ORACLE])
                  & (frame[ReportField.FORMULA]
                     == frame[ReportField.CROSS_CHECK])).all())
    if not agree:
        logging.error("Cyclic cover Betti numbers disagree:\n%s",
                      frame.to_string(index=False))
    payload = {ReportField.TABLE: [
        {key: int(value) for key, value in record.items()}
        for record in frame.to_dict(orient='records')]}
    return payload, frame.to_string(index=False), agree
