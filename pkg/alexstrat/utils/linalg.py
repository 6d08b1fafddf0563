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
"""Exact integer linear algebra: Smith normal form and Bareiss rank.

Matrices are lists of rows of Python ints. A matrix with rows but no
columns is a list of empty rows, so the column count is passed explicitly
wherever it cannot be read off the first row.
"""
import logging


def identity(size):
    """Return the size x size identity matrix."""
    return [[int(i == j) for j in range(size)] for i in range(size)]


def column_count(matrix, cols=None):
    """Number of columns, taking an explicit count for empty shapes."""
    if cols is not None:
        return cols
    return len(matrix[0]) if matrix else 0


def _swap_rows(matrix, i, j):
    matrix[i], matrix[j] = matrix[j], matrix[i]


def _swap_cols(matrix, i, j):
    for row in matrix:
        row[i], row[j] = row[j], row[i]


def _add_row_multiple(matrix, target, source, factor):
    if factor:
        src = matrix[source]
        matrix[target] = [a + factor * b for a, b in zip(matrix[target], src)]


def _add_col_multiple(matrix, target, source, factor):
    if factor:
        for row in matrix:
            row[target] += factor * row[source]


def _smallest_nonzero(matrix, start, rows, cols):
    best = None
    for i in range(start, rows):
        for j in range(start, cols):
            value = matrix[i][j]
            if value and (best is None or abs(value) < abs(matrix[best[0]][best[1]])):
                best = (i, j)
    return best


# pylint: disable=R0912
def smith_normal_form(matrix, cols=None):
    """
    Smith normal form of an integer matrix with its unimodular transforms.

    Pivoting always moves the nonzero entry of least magnitude into the
    pivot position; all arithmetic is on arbitrary-precision ints.

    Args:
        matrix (List[List[int]]): m x n
        cols (Optional[int]): n, needed when m == 0

    Returns (Tuple[List[List[int]], List[List[int]], List[List[int]]]):
        U (m x m), D (m x n), V (n x n) with U * A * V == D, D diagonal
        with nonnegative entries d_1 | d_2 | ...

    """
    rows = len(matrix)
    cols = column_count(matrix, cols)
    diag = [list(row) for row in matrix]
    left = identity(rows)
    right = identity(cols)
    for t in range(min(rows, cols)):
        pivot = _smallest_nonzero(diag, t, rows, cols)
        if pivot is None:
            break
        _swap_rows(diag, t, pivot[0])
        _swap_rows(left, t, pivot[0])
        _swap_cols(diag, t, pivot[1])
        _swap_cols(right, t, pivot[1])
        while True:
            clean = True
            for i in range(t + 1, rows):
                factor = diag[i][t] // diag[t][t]
                _add_row_multiple(diag, i, t, -factor)
                _add_row_multiple(left, i, t, -factor)
                clean = clean and not diag[i][t]
            for j in range(t + 1, cols):
                factor = diag[t][j] // diag[t][t]
                _add_col_multiple(diag, j, t, -factor)
                _add_col_multiple(right, j, t, -factor)
                clean = clean and not diag[t][j]
            if not clean:
                # A remainder smaller than the pivot is left somewhere in
                # row t or column t: move it into the pivot and go again.
                candidates = [(abs(diag[i][t]), 'row', i)
                              for i in range(t + 1, rows) if diag[i][t]]
                candidates += [(abs(diag[t][j]), 'col', j)
                               for j in range(t + 1, cols) if diag[t][j]]
                _, kind, index = min(candidates)
                if kind == 'row':
                    _swap_rows(diag, t, index)
                    _swap_rows(left, t, index)
                else:
                    _swap_cols(diag, t, index)
                    _swap_cols(right, t, index)
                continue
            offender = next(((i, j) for i in range(t + 1, rows)
                             for j in range(t + 1, cols)
                             if diag[i][j] % diag[t][t]), None)
            if offender is None:
                break
            _add_row_multiple(diag, t, offender[0], 1)
            _add_row_multiple(left, t, offender[0], 1)
        if diag[t][t] < 0:
            diag[t] = [-x for x in diag[t]]
            left[t] = [-x for x in left[t]]
    logging.debug("Smith normal form of a %dx%d matrix: %s", rows, cols,
                  [diag[k][k] for k in range(min(rows, cols))])
    return left, diag, right


def invariant_factors(diag):
    """Diagonal entries of a Smith form, zeros included."""
    size = min(len(diag), column_count(diag))
    return [diag[k][k] for k in range(size)]


def integer_rank(matrix, cols=None):
    """
    Rank over the rationals by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by
    the previous pivot is exact.

    Args:
        matrix (List[List[int]]):
        cols (Optional[int]):

    Returns (int):

    """
    work = [list(row) for row in matrix]
    rows = len(work)
    cols = column_count(work, cols)
    rank = 0
    previous = 1
    for col in range(cols):
        if rank == rows:
            break
        pivot = next((i for i in range(rank, rows) if work[i][col]), None)
        if pivot is None:
            continue
        _swap_rows(work, rank, pivot)
        head = work[rank]
        for i in range(rank + 1, rows):
            row = work[i]
            lead = row[col]
            for j in range(col + 1, cols):
                row[j] = (head[col] * row[j] - lead * head[j]) // previous
            row[col] = 0
        previous = head[col]
        rank += 1
    return rank
