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
"""Finite presentations: the text grammar, builders and abelianization.

Grammar (line- or semicolon-separated)::

    gens: x, y
    rels: x y x y^-1 x^-1 y^-1; ...

An absent or empty ``rels:`` clause gives a free group. ``#`` starts a
comment and ``1`` denotes the identity word.
"""
from dataclasses import dataclass
import logging
import os
import re
from typing import List, Tuple

from alexstrat.const import (
    COMMENT_CHAR,
    EXPONENT_REGEX,
    GENERATOR_REGEX,
    IDENTITY_TOKEN,
)
from alexstrat.utils import (
    InputError,
    PresentationParseError,
    fixture_path,
    list_presentation_fixtures,
)
from alexstrat.utils.linalg import (
    invariant_factors,
    smith_normal_form,
)
from alexstrat.words import (
    Word,
    abelianize_word,
    commutator,
    free_reduce,
    generator,
)

NAME_PATTERN = re.compile(GENERATOR_REGEX)
TOKEN_PATTERN = re.compile(
    rf'(?P<name>{GENERATOR_REGEX})(?:\^(?P<exponent>\S*))?')
EXPONENT_PATTERN = re.compile(EXPONENT_REGEX)
GENS_KEYWORD = re.compile(r'\bgens\s*:')
RELS_KEYWORD = re.compile(r'\brels\s*:')


class Presentation:
    """A finite presentation <x_1..x_r : R_1..R_s>."""

    def __init__(self, names, relators=()):
        """Validate names and store the relators freely reduced."""
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError(f"duplicate generator names in {names}")
        for name in names:
            if not NAME_PATTERN.fullmatch(name):
                raise InputError(f"malformed generator name {name!r}")
        rank = len(names)
        stored = []
        for relator in relators:
            if isinstance(relator, Word):
                if relator.rank != rank:
                    raise InputError(
                        f"relator of rank {relator.rank} in rank {rank}")
                stored.append(relator)
            else:
                stored.append(free_reduce(relator, rank))
        self._names = names
        self._relators = tuple(stored)

    @property
    def names(self):
        """Generator names in index order."""
        return self._names

    @property
    def relators(self):
        """Tuple of reduced relator words."""
        return self._relators

    @property
    def rank(self):
        """Number r of generators."""
        return len(self._names)

    @property
    def relator_count(self):
        """Number s of relators."""
        return len(self._relators)

    def index_of(self, name):
        """1-based index of a generator name."""
        try:
            return self._names.index(name) + 1
        except ValueError as err:
            raise InputError(f"unknown generator {name!r}") from err

    def exponent_matrix(self):
        """
        Relator exponent matrix A: r x s, column j = ab(R_j).

        Returns (List[List[int]]):

        """
        columns = [abelianize_word(rel, self.rank) for rel in self._relators]
        return [[column[i] for column in columns] for i in range(self.rank)]

    def word(self, text):
        """Parse a single word written with this presentation's names."""
        return _parse_word(text, 0, text, self._names)

    def format(self):
        """See format_presentation."""
        return format_presentation(self)

    def __eq__(self, other):
        """Structural equality."""
        if not isinstance(other, Presentation):
            return NotImplemented
        return self._names == other.names and self._relators == other.relators

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self._names, self._relators))

    def __repr__(self):
        """Return a string representation of the presentation."""
        return f"Presentation({self.format()!r})"


@dataclass(frozen=True)
class AbelianizationData:
    """ab(Gamma) read off the Smith form of the relator exponent matrix."""

    betti: int
    torsion: Tuple[int, ...]
    matrix: List[List[int]]
    left: List[List[int]]
    diagonal: List[List[int]]
    right: List[List[int]]

    @property
    def nonzero_factors(self):
        """Count of nonzero invariant factors (rank of A)."""
        return sum(1 for value in invariant_factors(self.diagonal) if value)

    def describe(self):
        """Human readable group, e.g. 'Z^2 x Z/3'."""
        parts = []
        if self.betti:
            parts.append('Z' if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{order}" for order in self.torsion)
        return ' x '.join(parts) if parts else 'trivial'


def abelianization(presentation):
    """
    Abelianization data of a presentation.

    Args:
        presentation (Presentation):

    Returns (AbelianizationData): betti d = r - rank(A) and torsion
        invariants d_k >= 2 from the Smith form U * A * V = D.

    """
    matrix = presentation.exponent_matrix()
    left, diagonal, right = smith_normal_form(matrix,
                                              cols=presentation.relator_count)
    factors = invariant_factors(diagonal)
    rank = sum(1 for value in factors if value)
    data = AbelianizationData(
        betti=presentation.rank - rank,
        torsion=tuple(value for value in factors if value >= 2),
        matrix=matrix,
        left=left,
        diagonal=diagonal,
        right=right,
    )
    logging.debug("Abelianization of %s is %s", presentation, data.describe())
    return data


def _position(text, offset):
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column


def _error(message, text, offset):
    line, column = _position(text, offset)
    return PresentationParseError(message, line, column)


def _strip_comments(text):
    # Blank out comments so offsets still point into the original text.
    return re.sub(rf'{re.escape(COMMENT_CHAR)}[^\n]*',
                  lambda match: ' ' * len(match.group()), text)


def _parse_names(text, start, end):
    names = []
    span = text[start:end]
    trimmed = span.rstrip().rstrip(';').rstrip()
    offset = start
    for piece in trimmed.split(','):
        name = piece.strip()
        name_offset = offset + (len(piece) - len(piece.lstrip()))
        if not name:
            raise _error("empty generator name", text, name_offset)
        if not NAME_PATTERN.fullmatch(name):
            raise _error(f"malformed generator name {name!r}", text,
                         name_offset)
        if name in names:
            raise _error(f"duplicate generator name {name!r}", text,
                         name_offset)
        names.append(name)
        offset += len(piece) + 1
    return names


def _parse_word(chunk, offset, text, names):
    letters = []
    rank = len(names)
    for match in re.finditer(r'\S+', chunk):
        token = match.group()
        position = offset + match.start()
        if token == IDENTITY_TOKEN:
            continue
        parts = TOKEN_PATTERN.fullmatch(token)
        if not parts:
            raise _error(f"malformed token {token!r}", text, position)
        name = parts.group('name')
        if name not in names:
            raise _error(f"unknown generator {name!r}", text, position)
        exponent = parts.group('exponent')
        if exponent is None:
            power = 1
        elif EXPONENT_PATTERN.fullmatch(exponent):
            power = int(exponent)
        else:
            raise _error(f"malformed exponent {exponent!r}", text,
                         position + len(name) + 1)
        index = names.index(name) + 1
        sign = 1 if power > 0 else -1
        letters.extend([(index, sign)] * abs(power))
    return free_reduce(letters, rank)


def parse_presentation(text):
    """
    Parse presentation text.

    Args:
        text (str): text in the presentation grammar

    Returns (Presentation):

    Raises:
        PresentationParseError: with the line and column of the problem

    """
    clean = _strip_comments(text)
    gens = GENS_KEYWORD.search(clean)
    if not gens:
        raise _error("missing 'gens:' clause", text, 0)
    rels = RELS_KEYWORD.search(clean, gens.end())
    if clean[:gens.start()].strip():
        raise _error("unexpected text before 'gens:'", text,
                     len(clean) - len(clean.lstrip()))
    names_end = rels.start() if rels else len(clean)
    names = _parse_names(clean, gens.end(), names_end)
    relators = []
    if rels:
        offset = rels.end()
        for chunk in re.split(r'[;\n]', clean[rels.end():]):
            if chunk.strip():
                relators.append(_parse_word(chunk, offset, text, names))
            offset += len(chunk) + 1
    presentation = Presentation(names, relators)
    logging.debug("Parsed presentation with r=%d, s=%d", presentation.rank,
                  presentation.relator_count)
    return presentation


def format_presentation(presentation):
    """Print a presentation so that parse_presentation reads it back."""
    lines = [f"gens: {', '.join(presentation.names)}"]
    words = [rel.format(presentation.names) for rel in presentation.relators]
    lines.append(f"rels: {'; '.join(words)}" if words else "rels:")
    return '\n'.join(lines)


def load_presentation(source):
    """
    Load a presentation from inline text, a file path or a bundled fixture.

    Args:
        source (str):

    Returns (Presentation):

    """
    if GENS_KEYWORD.search(source):
        return parse_presentation(source)
    path = source if os.path.isfile(source) else fixture_path(source)
    if not path:
        known = ', '.join(item['name'] for item in list_presentation_fixtures())
        raise InputError(f"no presentation file or fixture named {source!r} "
                         f"(bundled fixtures: {known})")
    logging.info("Reading presentation from %s", path)
    with open(path, encoding='utf-8') as data_file:
        return parse_presentation(data_file.read())


def free_group(rank, names=None):
    """F_r with no relators."""
    return Presentation(names or [f"x{i}" for i in range(1, rank + 1)])


def surface_group(genus):
    """
    Surface group with R_g = [x_1, x_{g+1}] ... [x_g, x_{2g}].

    Args:
        genus (int): g >= 1

    Returns (Presentation):

    """
    rank = 2 * genus
    relator = Word.identity(rank)
    for i in range(1, genus + 1):
        relator = relator * commutator(generator(i, rank),
                                       generator(i + genus, rank))
    return Presentation([f"x{i}" for i in range(1, rank + 1)], [relator])


def free_abelian_group(rank):
    """Z^n presented by the commutators [x_i, x_j], i < j."""
    relators = [commutator(generator(i, rank), generator(j, rank))
                for i in range(1, rank + 1) for j in range(i + 1, rank + 1)]
    return Presentation([f"x{i}" for i in range(1, rank + 1)], relators)


def direct_product_of_free_groups(*ranks):
    """
    F_{r_1} x ... x F_{r_k}: commutators between generators of distinct factors.

    Generators of factor j are named with the j-th letter, a1, a2, b1, ...

    Returns (Presentation):

    """
    names = []
    factor_of = []
    for number, factor_rank in enumerate(ranks):
        prefix = chr(ord('a') + number)
        names.extend(f"{prefix}{i}" for i in range(1, factor_rank + 1))
        factor_of.extend([number] * factor_rank)
    rank = len(names)
    relators = [commutator(generator(i, rank), generator(j, rank))
                for i in range(1, rank + 1) for j in range(i + 1, rank + 1)
                if factor_of[i - 1] != factor_of[j - 1]]
    return Presentation(names, relators)


def free_product(first, second):
    """
    Free product: disjoint union of generators and relators.

    Clashing names of the second factor get a '_2' suffix.

    Returns (Presentation):

    """
    names = list(first.names)
    for name in second.names:
        while name in names:
            name += '_2'
        names.append(name)
    rank = len(names)
    shift = first.rank
    relators = [Word(rel.letters, rank, reduced=True) for rel in first.relators]
    relators += [Word([(index + shift, sign) for index, sign in rel], rank,
                      reduced=True) for rel in second.relators]
    return Presentation(names, relators)


def add_relators(presentation, words):
    """Quotient presentation with extra relators appended."""
    return Presentation(presentation.names,
                        list(presentation.relators) + list(words))
