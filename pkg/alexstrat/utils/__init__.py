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
"""General purpose utilities and the exception hierarchy for alexstrat."""
from functools import reduce
import logging
from math import gcd
from os import listdir
from os.path import (
    isfile,
    join,
    splitext,
)

from tqdm.contrib.concurrent import thread_map

from alexstrat.config import CONFIG
from alexstrat.const import (
    ConfKey,
    FIXTURE_SUFFIX,
)

PRESENTATION_DIR = CONFIG[ConfKey.PRESENTATION_DIR]


class AlexstratError(Exception):
    """Base class of all toolkit errors."""


class InputError(AlexstratError):
    """The caller handed over something the operation cannot accept."""


class PresentationParseError(InputError):
    """Presentation text does not follow the grammar."""

    def __init__(self, message, line, column):
        """Record the 1-based position of the offending token."""
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EpimorphismError(InputError):
    """Generator images do not define an epimorphism onto the target."""

    NOT_HOMOMORPHISM = 'not a homomorphism'
    NOT_SURJECTIVE = 'not surjective'

    def __init__(self, reason, detail=''):
        """Keep the machine readable reason next to the message."""
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class InternalError(AlexstratError):
    """A mathematical identity the code relies on did not hold."""


def lcm(*values):
    """Least common multiple of positive integers, 1 for no arguments."""
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def gcd_all(values):
    """Greatest common divisor of a sequence of integers (0 if empty)."""
    return reduce(gcd, values, 0)


def require(condition, message, *args):
    """Raise InputError with a formatted message unless condition holds."""
    if not condition:
        raise InputError(message % args if args else message)


def parallel_map(func, items, threads=None, desc=None):
    """
    Map func over items, in a thread pool when more than one thread is asked.

    Results keep the order of items, so callers get deterministic output
    whatever the scheduling.

    Args:
        func (Callable):
        items (Iterable):
        threads (Optional[int]): defaults to the configured THREADS
        desc (Optional[str]): progress bar label

    Returns (List):

    """
    items = list(items)
    threads = threads or CONFIG[ConfKey.THREADS]
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    logging.debug("Mapping %s over %d items with %d threads", desc or func,
                  len(items), threads)
    return thread_map(func, items, max_workers=threads, desc=desc,
                      disable=not CONFIG[ConfKey.SHOW_PROGRESS])


def _file_to_label(filename):
    return splitext(filename)[0].replace('_', ' ').title()


def list_presentation_fixtures(directory_path=PRESENTATION_DIR):
    """
    List the bundled presentation fixtures.

    Returns (List[Dict]): name and label of every fixture, sorted by name

    """
    output = []
    for item in sorted(listdir(directory_path)):
        if isfile(join(directory_path, item)) and item.endswith(FIXTURE_SUFFIX):
            output.append({'name': splitext(item)[0],
                           'label': _file_to_label(item)})
    return output


def fixture_path(name, directory_path=PRESENTATION_DIR):
    """Return the path of a bundled fixture by name, or None if unknown."""
    if not name.endswith(FIXTURE_SUFFIX):
        name += FIXTURE_SUFFIX
    path = join(directory_path, name)
    return path if isfile(path) else None
