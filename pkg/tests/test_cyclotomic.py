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
"""Unit tests for cyclotomic field arithmetic."""
import random
from fractions import Fraction
from itertools import combinations
from unittest import TestCase

import pytest
from sympy import (
    Symbol,
    cyclotomic_poly,
)

from alexstrat.cyclotomic import (
    CyclotomicMatrix,
    cyclotomic_field,
    cyclotomic_polynomial,
)
from alexstrat.utils import InputError
from tests import settings


def _random_element(rng, field, bound=3):
    return field.element([rng.randint(-bound, bound)
                          for _ in range(field.degree)])


def _minor_determinant(rows):
    if not rows:
        return 1
    total = 0
    for col, entry in enumerate(rows[0]):
        if entry:
            rest = [row[:col] + row[col + 1:] for row in rows[1:]]
            term = entry * _minor_determinant(rest)
            total = total + term if col % 2 == 0 else total - term
    return total


def _rank_by_minors(entries, rows, cols):
    for size in range(min(rows, cols), 0, -1):
        for picked_rows in combinations(range(rows), size):
            for picked_cols in combinations(range(cols), size):
                minor = [[entries[i][j] for j in picked_cols]
                         for i in picked_rows]
                if _minor_determinant(minor):
                    return size
    return 0


@pytest.mark.parametrize('modulus', range(1, 31))
def test_cyclotomic_polynomial__matches_sympy(modulus):
    x = Symbol('x')
    expected = cyclotomic_poly(modulus, x, polys=True).all_coeffs()
    assert list(cyclotomic_polynomial(modulus)) == [int(c) for c in reversed(expected)]


class CyclotomicFieldTests(TestCase):
    def test_root_of_unity__order(self):
        for modulus in (1, 2, 3, 4, 6, 12):
            field = cyclotomic_field(modulus)
            zeta = field.root_of_unity(1)
            power = field.one()
            for _ in range(modulus):
                power = power * zeta
            self.assertEqual(power, 1)
            self.assertEqual(field.root_of_unity(modulus + 1), zeta)

    def test_combine_powers__sum_of_roots_is_zero(self):
        for modulus in (2, 3, 5, 8, 9):
            field = cyclotomic_field(modulus)
            self.assertFalse(field.combine_powers([1] * modulus))

    def test_inverse__one_plus_zeta3(self):
        field = cyclotomic_field(3)
        value = field.one() + field.root_of_unity(1)
        self.assertEqual(value.inverse(), -field.root_of_unity(1))
        self.assertEqual(value * value.inverse(), 1)

    def test_inverse__general_element(self):
        field = cyclotomic_field(12)
        value = field.element([Fraction(1, 2), 3, 0, -1])
        self.assertEqual(value / value, 1)
        self.assertEqual((2 / value) * value, 2)

    def test_inverse__zero(self):
        with self.assertRaises(ZeroDivisionError):
            cyclotomic_field(5).zero().inverse()

    def test_arithmetic__modulus_mismatch(self):
        with self.assertRaises(InputError):
            _ = cyclotomic_field(3).one() + cyclotomic_field(4).root_of_unity(1)

    def test_str__polynomial_in_zeta(self):
        field = cyclotomic_field(6)
        self.assertEqual(str(2 - field.root_of_unity(1)), '2 - zeta6')
        self.assertEqual(str(field.zero()), '0')
        self.assertEqual(str(field.root_of_unity(2)), '-1 + zeta6')

    def test_to_json__fractions_as_strings(self):
        value = cyclotomic_field(4).element([Fraction(1, 3), 2])
        self.assertEqual(value.to_json(), [4, ['1/3', 2]])


class CyclotomicMatrixTests(TestCase):
    def test_rank__dependent_rows(self):
        field = cyclotomic_field(3)
        zeta = field.root_of_unity(1)
        matrix = CyclotomicMatrix(field, [[1, zeta], [zeta, zeta * zeta],
                                          [0, 1]])
        self.assertEqual(matrix.rank(), 2)
        self.assertEqual(CyclotomicMatrix(field, [[1, zeta], [zeta, zeta * zeta]])
                         .rank(), 1)

    def test_rank__no_columns(self):
        matrix = CyclotomicMatrix(cyclotomic_field(2), [[], []], cols=0)
        self.assertEqual(matrix.rank(), 0)
        self.assertTrue(matrix.is_zero())

    def test_rank__ragged(self):
        with self.assertRaises(InputError):
            CyclotomicMatrix(cyclotomic_field(2), [[1, 0], [1]])


class CyclotomicPropertyTests(TestCase):
    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED + 30)

    def test_inverse__random_elements(self):
        for modulus in range(1, 25):
            field = cyclotomic_field(modulus)
            for _ in range(4):
                value = _random_element(self.rng, field)
                if not value:
                    continue
                self.assertEqual(value * value.inverse(), 1)

    def test_rank__matches_minor_expansion(self):
        for _ in range(60):
            field = cyclotomic_field(self.rng.choice((1, 2, 3, 4, 5, 6, 8, 12)))
            rows, cols = self.rng.randint(1, 4), self.rng.randint(1, 4)
            entries = [[_random_element(self.rng, field, bound=1)
                        for _ in range(cols)] for _ in range(rows)]
            if rows > 2 and self.rng.random() < 0.5:
                scale = field.root_of_unity(self.rng.randrange(field.modulus))
                entries[-1] = [scale * a + b
                               for a, b in zip(entries[0], entries[1])]
            matrix = CyclotomicMatrix(field, entries)
            self.assertEqual(matrix.rank(), _rank_by_minors(entries, rows, cols))
