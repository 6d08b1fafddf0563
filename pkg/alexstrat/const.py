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
"""Constants used across alexstrat modules.

These need to map to the names used in the config classes, but better
than multiple hardcoded strings in code.
"""
GENERATOR_REGEX = r'[A-Za-z][A-Za-z0-9_]*'
EXPONENT_REGEX = r'[+-]?\d+'
IDENTITY_TOKEN = '1'
COMMENT_CHAR = '#'
FIXTURE_SUFFIX = '.fp'
VARIABLE_PREFIX = 't_'
QUOTIENT_VARIABLE = 't'
ZETA_SYMBOL = 'zeta'
WITHIN_BOUNDS_NOTE = ("Verdict holds within the stated search bounds only; "
                      "the binomial-factor search is an under-approximation "
                      "of binomial-ideal membership.")


# pylint: disable=R0903
class ConfKey:
    """Config key string constants."""

    DEFAULT_MAX_DEGREE = 'DEFAULT_MAX_DEGREE'
    DEFAULT_MAX_ORDER = 'DEFAULT_MAX_ORDER'
    KAHLER_MAX_CANDIDATES = 'KAHLER_MAX_CANDIDATES'
    KAHLER_POINT_THRESHOLD = 'KAHLER_POINT_THRESHOLD'
    LOG_FILE = 'LOG_FILE'
    LOG_FORMAT = 'LOG_FORMAT'
    LOG_LEVEL = 'LOG_LEVEL'
    PRESENTATION_DIR = 'PRESENTATION_DIR'
    SHOW_PROGRESS = 'SHOW_PROGRESS'
    THREADS = 'THREADS'


# pylint: disable=R0903
class ReportField:
    """Stable field names for the JSON reports."""

    ABELIANIZATION = 'abelianization'
    BASE = 'base'
    BETTI = 'betti'
    BINOMIALS = 'binomials'
    BOUNDS = 'bounds'
    CHARACTER = 'character'
    CHARACTERS = 'characters'
    CONJUGATORS = 'conjugators'
    CORANK = 'corank'
    CROSS_CHECK = 'cross_check'
    DEGENERATE = 'degenerate'
    DEPTH = 'depth'
    DERIVATIVES = 'derivatives'
    DIM_C1 = 'dim_c1'
    DIM_H1 = 'dim_h1'
    EXHAUSTIVE = 'exhaustive'
    EXPONENTS = 'exponents'
    FACTORS_FULLY = 'factors_fully'
    FORM = 'form'
    FORMULA = 'formula'
    GENERATORS = 'generators'
    GROUP = 'group'
    IMAGES = 'images'
    IN_STRATUM = 'in_stratum'
    IN_JUMPING_LOCUS = 'in_jumping_locus'
    JUMPING = 'jumping'
    JUSTIFICATION = 'justification'
    MATRIX = 'matrix'
    MAX_DEGREE = 'max_degree'
    MAX_ORDER = 'max_order'
    MODULUS = 'modulus'
    NOTE = 'note'
    ORACLE = 'oracle'
    ORDER = 'order'
    PARTIALS = 'partials'
    PENCILS = 'pencils'
    POLYNOMIAL = 'polynomial'
    RANK = 'rank'
    RELATORS = 'relators'
    SEARCHES = 'searches'
    STATUS = 'status'
    STRATUM = 'stratum'
    TABLE = 'table'
    TORSION = 'torsion'
    UNIT = 'unit'
    VARIABLES = 'variables'
    WITNESSES = 'witnesses'
    WORD = 'word'


# pylint: disable=R0903
class Status:
    """Verdicts of the binomial-ideal screen."""

    OBSTRUCTED = 'OBSTRUCTED'
    CONSISTENT = 'CONSISTENT'
    INCONCLUSIVE = 'INCONCLUSIVE'


# pylint: disable=R0903
class ExitCode:
    """Process exit codes of the command line."""

    OK = 0
    INPUT_ERROR = 1
    OBSTRUCTED = 2
    DISAGREEMENT = 3
