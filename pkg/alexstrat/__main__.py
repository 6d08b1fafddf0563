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
"""Entry point for python -m alexstrat."""
from alexstrat.commands import cli

if __name__ == "__main__":
    cli(prog_name='alexstrat')  # pylint: disable=E1120
