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
"""Command line interface; importing the submodules registers the commands."""
from alexstrat.commands._group import cli
from . import (
    _converters,
    algebra,
    covers,
    kahler,
    strata,
)

__all__ = ['cli']
