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
"""Custom click parameter types for the command line."""
import re

import click

from alexstrat.covers import parse_group
from alexstrat.presentation import load_presentation
from alexstrat.strata import TorsionCharacter
from alexstrat.utils import InputError

CHARACTER_PATTERN = re.compile(
    r'^\s*N\s*=\s*(?P<modulus>\d+)\s*,\s*a\s*=\s*(?P<exponents>[-\d,\s]*)$')


class PresentationType(click.ParamType):
    """A file path, a bundled fixture name, or inline presentation text."""

    name = 'presentation'

    def convert(self, value, param, ctx):
        """Load the presentation, failing on any input error."""
        try:
            return load_presentation(value)
        except InputError as error:
            return self.fail(str(error), param, ctx)


class GroupType(click.ParamType):
    """Cyclic orders such as 6 or 2,2."""

    name = 'group'

    def convert(self, value, param, ctx):
        """Build the FiniteAbelianGroup."""
        try:
            return parse_group(value)
        except InputError as error:
            return self.fail(str(error), param, ctx)


class CharacterType(click.ParamType):
    """A torsion character written N=6,a=1,1."""

    name = 'character'

    def convert(self, value, param, ctx):
        """Parse modulus and exponent vector."""
        if isinstance(value, TorsionCharacter):
            return value
        match = CHARACTER_PATTERN.match(value)
        if not match:
            return self.fail(f"{value!r} is not of the form N=<N>,a=<a1,...>",
                             param, ctx)
        try:
            exponents = [int(part) for part in
                         match.group('exponents').split(',') if part.strip()]
            return TorsionCharacter(int(match.group('modulus')), tuple(exponents))
        except (InputError, ValueError) as error:
            return self.fail(str(error), param, ctx)


PRESENTATION = PresentationType()
GROUP = GroupType()
CHARACTER = CharacterType()
