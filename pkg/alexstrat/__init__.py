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
"""Alexander stratifications, abelian cover Betti numbers and a Kahler screen."""
__version__ = '0.1.0'
