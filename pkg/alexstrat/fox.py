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
"""Fox derivatives and the Alexander matrix of a presentation.

Entries live in Z[t_1^{+-1}, ..., t_r^{+-1}] (the free-group variables);
the quotient to the group ring of ab(Gamma) is only taken when a
character of Gamma is substituted, or for display.
"""
import logging

from alexstrat.const import QUOTIENT_VARIABLE
from alexstrat.laurent import (
    LaurentPoly,
    variable_names,
)
from alexstrat.presentation import abelianization
from alexstrat.utils import InputError


def fox_gradient(word):
    """
    All Fox partials of a word in one left-to-right pass.

    For x_j at abelianized prefix p the j-th partial gains t^p; for x_j^-1
    the prefix first drops by e_j and the partial loses t^p.

    Args:
        word (Word):

    Returns (List[LaurentPoly]): r partials, index i-1 holds D_i(word)

    """
    rank = word.rank
    prefix = [0] * rank
    terms = [{} for _ in range(rank)]
    for index, sign in word.letters:
        if sign < 0:
            prefix[index - 1] -= 1
        key = tuple(prefix)
        bucket = terms[index - 1]
        bucket[key] = bucket.get(key, 0) + sign
        if sign > 0:
            prefix[index - 1] += 1
    return [LaurentPoly(rank, bucket) for bucket in terms]


def fox_partial(word, index):
    """
    The Fox derivative D_index(word).

    Args:
        word (Word):
        index (int): 1-based generator index

    Returns (LaurentPoly):

    """
    if not 1 <= index <= word.rank:
        raise InputError(f"generator index {index} outside 1..{word.rank}")
    return fox_gradient(word)[index - 1]


class AlexanderMatrix:
    """The r x s matrix of Fox partials, column j = gradient of relator j."""

    def __init__(self, presentation, entries):
        """Keep the presentation alongside its r x s entries."""
        self.presentation = presentation
        self.entries = entries

    @property
    def rank(self):
        """Number of rows r."""
        return self.presentation.rank

    @property
    def relator_count(self):
        """Number of columns s."""
        return self.presentation.relator_count

    def entry(self, row, col):
        """Entry D_row(R_col), both indices 1-based."""
        return self.entries[row - 1][col - 1]

    def column(self, col):
        """The gradient of relator col (1-based)."""
        return [row[col - 1] for row in self.entries]

    def variables(self):
        """Variable names t_<generator>."""
        return variable_names(self.presentation.names)

    def format(self, quotient=False):
        """One line per row, entries separated by ' | '."""
        if quotient:
            variables, entries = apply_abelianization_quotient(self)
        else:
            variables, entries = self.variables(), self.entries
        lines = []
        for name, row in zip(self.presentation.names, entries):
            cells = ' | '.join(poly.format(variables) for poly in row)
            lines.append(f"{name}: [{cells}]")
        return '\n'.join(lines)

    def to_json(self):
        """Rows of entries, each entry a list of [exponents, coefficient]."""
        return [[poly.to_json() for poly in row] for row in self.entries]

    @classmethod
    def from_json(cls, presentation, rows):
        """Rebuild from to_json output."""
        entries = [[LaurentPoly.from_json(presentation.rank, pairs)
                    for pairs in row] for row in rows]
        if len(entries) != presentation.rank:
            raise InputError("matrix rows do not match the presentation rank")
        return cls(presentation, entries)

    def __eq__(self, other):
        """Same presentation and entries."""
        if not isinstance(other, AlexanderMatrix):
            return NotImplemented
        return (self.presentation == other.presentation
                and self.entries == other.entries)

    def __hash__(self):
        """Hash on the presentation."""
        return hash(self.presentation)


def alexander_matrix(presentation):
    """
    The Alexander matrix M(F_r, R) of a presentation.

    Args:
        presentation (Presentation):

    Returns (AlexanderMatrix): r x s; s == 0 gives rows with no entries

    """
    columns = [fox_gradient(relator) for relator in presentation.relators]
    entries = [[column[i] for column in columns]
               for i in range(presentation.rank)]
    logging.debug("Alexander matrix of size %dx%d", presentation.rank,
                  presentation.relator_count)
    return AlexanderMatrix(presentation, entries)


def abelianization_images(presentation):
    """
    Exponents of each generator in a basis of ab(Gamma) / torsion.

    Basis elements are the free coordinates of the Smith transform U,
    each negated if needed so its first nonzero generator exponent is
    positive.

    Returns (List[List[int]]): r vectors of length d

    """
    data = abelianization(presentation)
    free_rows = [list(data.left[k]) for k in range(data.nonzero_factors,
                                                   presentation.rank)]
    for row in free_rows:
        first = next((value for value in row if value), 0)
        if first < 0:
            row[:] = [-value for value in row]
    return [[row[i] for row in free_rows] for i in range(presentation.rank)]


def apply_abelianization_quotient(matrix):
    """
    Display form of the matrix over Z[ab(Gamma) / torsion].

    Only for printing; ranks are never computed from this form.

    Args:
        matrix (AlexanderMatrix):

    Returns (Tuple[List[str], List[List[LaurentPoly]]]): variable names and
        substituted entries

    """
    images = abelianization_images(matrix.presentation)
    betti = len(images[0]) if images else 0
    if betti == 1:
        variables = [QUOTIENT_VARIABLE]
    else:
        variables = [f"{QUOTIENT_VARIABLE}{k}" for k in range(1, betti + 1)]
    entries = [[poly.substitute_monomials(images, betti) for poly in row]
               for row in matrix.entries]
    return variables, entries
