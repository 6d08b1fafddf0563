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
"""Unit tests for finite abelian covers and their Betti numbers."""
from itertools import product
import random
from unittest import TestCase, mock

import numpy as np
import pytest

from alexstrat.controllers.covers import (
    betti_table,
    betti_table_report,
)
from alexstrat.covers import (
    FiniteAbelianGroup,
    betti_cover_cross_check,
    betti_cover_formula,
    betti_cover_oracle,
    characters_of,
    cyclic_epimorphism,
    expanded_rank_by_characters,
    group_ring_expand,
    parse_group,
    parse_images,
    pullback_character,
    to_group_ring,
    validate_epimorphism,
)
from alexstrat.fox import abelianization_images
from alexstrat.laurent import LaurentPoly
from alexstrat.presentation import (
    Presentation,
    load_presentation,
    parse_presentation,
)
from alexstrat.strata import (
    TorsionCharacter,
    cached_alexander_matrix,
    torsion_characters,
)
from alexstrat.utils import (
    EpimorphismError,
    InputError,
)
from alexstrat.utils.linalg import integer_rank
from alexstrat.words import Word
from tests import settings


class GroupTests(TestCase):
    def test_finite_abelian_group__elements(self):
        group = FiniteAbelianGroup([2, 3])
        self.assertEqual(group.order, 6)
        self.assertEqual(group.exponent, 6)
        self.assertEqual(group.elements()[:3], [(0, 0), (0, 1), (0, 2)])
        self.assertEqual(group.add((1, 2), (1, 2)), (0, 1))
        self.assertEqual(group.index_of((3, -1)), 5)

    def test_finite_abelian_group__invariant_factors(self):
        self.assertEqual(FiniteAbelianGroup([2, 3]).invariant_factors(), (6,))
        self.assertEqual(FiniteAbelianGroup([2, 2]).invariant_factors(), (2, 2))
        self.assertEqual(FiniteAbelianGroup([1]).describe(), 'trivial')
        self.assertEqual(FiniteAbelianGroup([2, 2]).describe(), 'Z/2 x Z/2')

    def test_parse_group__orders(self):
        self.assertEqual(parse_group('2, 2'), FiniteAbelianGroup([2, 2]))
        self.assertEqual(parse_group('6').orders, (6,))
        with self.assertRaises(InputError):
            parse_group('two')
        with self.assertRaises(InputError):
            parse_group('0')

    def test_parse_images__generator_order(self):
        trefoil = parse_presentation(settings.TREFOIL)
        group = FiniteAbelianGroup([6])
        self.assertEqual(parse_images('y:2; x:2', trefoil, group), [[2], [2]])
        with self.assertRaises(InputError):
            parse_images('x:1', trefoil, group)
        with self.assertRaises(InputError):
            parse_images('x:1;z:1', trefoil, group)
        with self.assertRaises(InputError):
            parse_images('x:1,0;y:1', trefoil, group)


class EpimorphismTests(TestCase):
    def test_validate_epimorphism__not_a_homomorphism(self):
        trefoil = parse_presentation(settings.TREFOIL)
        with self.assertRaises(EpimorphismError) as context:
            validate_epimorphism(trefoil, FiniteAbelianGroup([2]), [[1], [0]])
        self.assertEqual(context.exception.reason,
                         EpimorphismError.NOT_HOMOMORPHISM)

    def test_validate_epimorphism__not_surjective(self):
        trefoil = parse_presentation(settings.TREFOIL)
        with self.assertRaises(EpimorphismError) as context:
            validate_epimorphism(trefoil, FiniteAbelianGroup([4]), [[2], [2]])
        self.assertEqual(context.exception.reason, EpimorphismError.NOT_SURJECTIVE)
        free = parse_presentation(settings.FREE_2)
        with self.assertRaises(EpimorphismError):
            validate_epimorphism(free, FiniteAbelianGroup([2, 2]), [[1, 0], [1, 0]])

    def test_validate_epimorphism__wrong_image_count(self):
        with self.assertRaises(InputError):
            validate_epimorphism(parse_presentation(settings.TREFOIL),
                                 FiniteAbelianGroup([2]), [[1]])

    def test_validate_epimorphism__reduces_images(self):
        alpha = validate_epimorphism(parse_presentation(settings.FREE_2),
                                     FiniteAbelianGroup([2, 3]), [[3, 0], [0, 4]])
        self.assertEqual(alpha.images, ((1, 0), (0, 1)))
        self.assertEqual(alpha.to_json(), {'group': [2, 3],
                                           'images': {'x': [1, 0], 'y': [0, 1]}})

    def test_cyclic_epimorphism__default_images(self):
        alpha = cyclic_epimorphism(parse_presentation(settings.TREFOIL), 6)
        self.assertEqual(alpha.images, ((1,), (1,)))
        with self.assertRaises(InputError):
            cyclic_epimorphism(parse_presentation(settings.TORUS), 2)

    def test_characters_of__trivial_first(self):
        characters = characters_of(FiniteAbelianGroup([2, 2]))
        self.assertEqual(len(characters), 4)
        self.assertTrue(characters[0].is_trivial())
        self.assertFalse(any(chi.is_trivial() for chi in characters[1:]))

    def test_pullback_character__mixed_orders(self):
        alpha = validate_epimorphism(parse_presentation(settings.FREE_2),
                                     FiniteAbelianGroup([2, 3]), [[1, 1], [0, 1]])
        character = characters_of(alpha.target)[-1]
        self.assertEqual(character.exponents, (1, 2))
        self.assertEqual(pullback_character(alpha, character),
                         TorsionCharacter(6, (1, 4)))


class GroupRingTests(TestCase):
    def test_group_ring_expand__trefoil_circulant(self):
        trefoil = parse_presentation(settings.TREFOIL)
        alpha = cyclic_epimorphism(trefoil, 6)
        d_x = cached_alexander_matrix(trefoil).entry(1, 1)
        block = group_ring_expand([[to_group_ring(d_x, alpha)]], alpha.target)
        self.assertEqual(block.shape, (6, 6))
        self.assertEqual(block[0].tolist(), [1, -1, 1, 0, 0, 0])
        self.assertEqual(block[1].tolist(), [0, 1, -1, 1, 0, 0])
        self.assertEqual(block[5].tolist(), [-1, 1, 0, 0, 0, 1])

    def test_group_ring_expand__multiplicative(self):
        group = FiniteAbelianGroup([2, 3])
        first = {(0, 0): 2, (1, 1): -1}
        second = {(0, 2): 1, (1, 0): 3}
        product_element = {}
        for (g, a), (h, b) in product(first.items(), second.items()):
            key = group.add(g, h)
            product_element[key] = product_element.get(key, 0) + a * b
        left = group_ring_expand([[first]], group)
        right = group_ring_expand([[second]], group)
        self.assertTrue(np.array_equal(left.dot(right),
                                       group_ring_expand([[product_element]], group)))

    def test_to_group_ring__collects_terms(self):
        free = parse_presentation(settings.FREE_2)
        alpha = validate_epimorphism(free, FiniteAbelianGroup([2]), [[1], [1]])
        poly = LaurentPoly(2, {(1, 0): 1, (0, 1): -1, (2, 0): 3})
        self.assertEqual(to_group_ring(poly, alpha), {(0,): 3})


class BettiTests(TestCase):
    def test_betti__trefoil_cyclic_covers(self):
        trefoil = parse_presentation(settings.TREFOIL)
        for order in range(1, 13):
            alpha = cyclic_epimorphism(trefoil, order)
            expected = 3 if order % 6 == 0 else 1
            self.assertEqual(betti_cover_formula(trefoil, alpha), expected)
            self.assertEqual(betti_cover_oracle(trefoil, alpha), expected)
            self.assertEqual(betti_cover_cross_check(trefoil, alpha), expected)

    def test_betti__free_group_klein_four(self):
        free = parse_presentation(settings.FREE_2)
        alpha = validate_epimorphism(free, FiniteAbelianGroup([2, 2]),
                                     [[1, 0], [0, 1]])
        self.assertEqual(betti_cover_formula(free, alpha), 5)
        self.assertEqual(betti_cover_oracle(free, alpha), 5)

    def test_betti__torus_klein_four(self):
        torus = parse_presentation(settings.TORUS)
        alpha = validate_epimorphism(torus, FiniteAbelianGroup([2, 2]),
                                     [[1, 0], [0, 1]])
        self.assertEqual(betti_cover_formula(torus, alpha), 2)
        self.assertEqual(betti_cover_oracle(torus, alpha), 2)

    def test_betti__other_presentation(self):
        alpha = cyclic_epimorphism(parse_presentation(settings.TREFOIL), 2)
        with self.assertRaises(InputError):
            betti_cover_formula(load_presentation('figure_eight'), alpha)

    def test_betti_table__trefoil(self):
        frame = betti_table(parse_presentation(settings.TREFOIL), 12)
        self.assertEqual(list(frame.columns),
                         ['order', 'formula', 'oracle', 'cross_check'])
        self.assertEqual(frame['formula'].tolist(),
                         [3 if n % 6 == 0 else 1 for n in range(1, 13)])
        self.assertTrue((frame['formula'] == frame['oracle']).all())
        self.assertTrue((frame['formula'] == frame['cross_check']).all())

    def test_betti_table_report__payload(self):
        payload, text, agree = betti_table_report(
            parse_presentation(settings.TREFOIL), 6)
        self.assertTrue(agree)
        self.assertEqual(payload['table'][-1], {'order': 6, 'formula': 3,
                                                'oracle': 3, 'cross_check': 3})
        self.assertIn('cross_check', text.splitlines()[0])

    def test_betti_table_report__cross_check_disagreement(self):
        with mock.patch('alexstrat.controllers.covers.betti_cover_cross_check',
                        return_value=0):
            payload, _, agree = betti_table_report(
                parse_presentation(settings.TREFOIL), 2)
        self.assertFalse(agree)
        self.assertEqual(payload['table'][0]['cross_check'], 0)


def _random_case(rng):
    rank = rng.randint(1, 3)
    relators = [Word([(rng.randint(1, rank), rng.choice((1, -1)))
                      for _ in range(rng.randint(1, 8))], rank)
                for _ in range(rng.randint(0, 3))]
    presentation = Presentation([f"x{i}" for i in range(1, rank + 1)], relators)
    orders = rng.choice([(2,), (3,), (4,), (5,), (6,), (12,), (2, 2), (2, 4),
                         (2, 6), (3, 3)])
    # Homomorphisms to G are tuples of characters, one per cyclic factor
    candidates = list(product(*[list(torsion_characters(presentation, order))
                                for order in orders]))
    rng.shuffle(candidates)
    for combo in candidates[:200]:
        images = [[chi.exponents[i] for chi in combo] for i in range(rank)]
        try:
            return presentation, validate_epimorphism(
                presentation, FiniteAbelianGroup(orders), images)
        except EpimorphismError:
            continue
    return presentation, None


def test_betti__random_presentations_agree():
    rng = random.Random(settings.RANDOM_SEED)
    checked = attempts = 0
    while checked < 200 and attempts < 2000:
        attempts += 1
        presentation, alpha = _random_case(rng)
        if alpha is None:
            continue
        formula = betti_cover_formula(presentation, alpha, threads=1)
        assert formula == betti_cover_oracle(presentation, alpha)
        assert formula == betti_cover_cross_check(presentation, alpha, threads=1)
        entries = [[to_group_ring(poly, alpha) for poly in row]
                   for row in cached_alexander_matrix(presentation).entries]
        expanded = group_ring_expand(entries, alpha.target,
                                     cols=presentation.relator_count)
        assert (integer_rank(expanded.tolist(),
                             cols=presentation.relator_count * alpha.target.order)
                == expanded_rank_by_characters(presentation, alpha, threads=1))
        checked += 1
    assert checked == 200


@pytest.mark.parametrize('name', settings.FIXTURE_NAMES)
def test_betti__fixture_double_covers(name):
    presentation = load_presentation(name)
    images = [[row[0] % 2] for row in abelianization_images(presentation)]
    alpha = validate_epimorphism(presentation, FiniteAbelianGroup([2]), images)
    assert (betti_cover_oracle(presentation, alpha)
            == betti_cover_formula(presentation, alpha))
