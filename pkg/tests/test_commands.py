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
"""Command line tests, run through click's CliRunner."""
from unittest import TestCase, mock

from click.testing import CliRunner
from flask import json

from alexstrat.commands import cli
from alexstrat.const import ExitCode
from alexstrat.fox import (
    AlexanderMatrix,
    alexander_matrix,
)
from alexstrat.presentation import parse_presentation
from tests import settings


class CommandTests(TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli, ['--threads', '1'] + list(args))

    # Algebra
    def test_command_matrix__trefoil_text(self):
        result = self.invoke('matrix', 'trefoil')
        self.assertEqual(result.exit_code, ExitCode.OK)
        self.assertEqual(result.output,
                         f'x: [{settings.TREFOIL_FOX_X}]\n'
                         f'y: [{settings.TREFOIL_FOX_Y}]\n')

    def test_command_matrix__json_round_trip(self):
        result = self.invoke('matrix', settings.TREFOIL, '--json')
        self.assertEqual(result.exit_code, ExitCode.OK)
        payload = json.loads(result.stdout)
        trefoil = parse_presentation(settings.TREFOIL)
        self.assertEqual(payload['variables'], ['t_x', 't_y'])
        self.assertEqual(AlexanderMatrix.from_json(trefoil, payload['matrix']),
                         alexander_matrix(trefoil))

    def test_command_matrix__quotient(self):
        result = self.invoke('matrix', 'trefoil', '--quotient')
        self.assertEqual(result.output, 'x: [1 - t + t^2]\ny: [-1 + t - t^2]\n')

    def test_command_derive__word(self):
        result = self.invoke('derive', 'trefoil', 'x y')
        self.assertEqual(result.exit_code, ExitCode.OK)
        self.assertEqual(result.output, 'w = x y\n  D_x(w) = 1\n  D_y(w) = t_x\n')

    def test_command_abelianization__global_json(self):
        result = self.runner.invoke(cli, ['--json', 'abelianization', 'z3'])
        self.assertEqual(json.loads(result.stdout),
                         {'abelianization': 'Z^3', 'betti': 3, 'rank': 0,
                          'torsion': []})

    def test_command_abelianization__text(self):
        result = self.invoke('abelianization', settings.CYCLIC_2)
        self.assertEqual(result.output.splitlines(),
                         ['ab = Z/2', 'b1 = 0', 'torsion: 2',
                          'rank at trivial character = 1'])

    # Strata
    def test_command_strata__membership(self):
        result = self.invoke('strata', 'trefoil', '--at', 'N=6,a=1,1',
                             '--stratum', '1')
        self.assertEqual(result.exit_code, ExitCode.OK)
        lines = result.output.splitlines()
        self.assertIn('rank: 0', lines)
        self.assertIn('depth: 1', lines)
        self.assertIn('in V_1: yes', lines)
        self.assertIn('in W_1: yes', lines)

    def test_command_strata__trivial_default(self):
        result = self.invoke('strata', 'trefoil', '--stratum', '1', '--json')
        payload = json.loads(result.stdout)
        self.assertEqual(payload['character'], {'modulus': 1, 'exponents': [0, 0]})
        self.assertFalse(payload['in_stratum'])
        self.assertTrue(payload['in_jumping_locus'])

    def test_command_strata__bad_character(self):
        result = self.invoke('strata', 'trefoil', '--at', 'N=6,a=1')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)
        self.assertIn('rank', result.output)

    def test_command_torsion_scan__trefoil(self):
        result = self.invoke('torsion-scan', 'trefoil', '--order', '6')
        self.assertEqual(result.output.splitlines(),
                         ['V_1, order dividing 6: 2 characters',
                          'N=6,a=1,1', 'N=6,a=5,5'])

    def test_command_torsion_scan__jumping(self):
        result = self.invoke('torsion-scan', 'trefoil', '--order', '5',
                             '--jumping', '--json')
        payload = json.loads(result.stdout)
        self.assertEqual(payload['characters'], [{'modulus': 1, 'exponents': [0, 0]}])
        self.assertTrue(payload['jumping'])

    # Covers
    def test_command_betti__trefoil_order_six(self):
        result = self.invoke('betti', 'trefoil', '--group', '6')
        self.assertEqual(result.exit_code, ExitCode.OK)
        self.assertEqual(result.output, 'b1 = 3 (formula) / 3 (oracle)\n')

    def test_command_betti__explicit_images_json(self):
        result = self.invoke('betti', settings.FREE_2, '--group', '2,2',
                             '--images', 'x:1,0;y:0,1', '--json')
        payload = json.loads(result.stdout)
        self.assertEqual((payload['formula'], payload['oracle'],
                          payload['cross_check']), (5, 5, 5))
        self.assertEqual(payload['images'], {'x': [1, 0], 'y': [0, 1]})

    def test_command_betti__not_a_homomorphism(self):
        result = self.invoke('betti', 'trefoil', '--group', '2',
                             '--images', 'x:1;y:0')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)
        self.assertIn('not a homomorphism', result.output)

    def test_command_betti__non_cyclic_needs_images(self):
        result = self.invoke('betti', 'trefoil', '--group', '2,2')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)
        self.assertIn('--images', result.output)

    def test_command_betti_table__json(self):
        result = self.invoke('betti-table', 'trefoil', '--max-order', '6', '--json')
        self.assertEqual(result.exit_code, ExitCode.OK)
        table = json.loads(result.stdout)['table']
        self.assertEqual([row['formula'] for row in table], [1, 1, 1, 1, 1, 3])
        self.assertEqual([row['order'] for row in table], list(range(1, 7)))

    def test_command_betti_table__cross_check_disagreement(self):
        with mock.patch('alexstrat.controllers.covers.betti_cover_cross_check',
                        return_value=0):
            result = self.invoke('betti-table', 'trefoil', '--max-order', '2')
        self.assertEqual(result.exit_code, ExitCode.DISAGREEMENT)
        self.assertIn('cross_check', result.stdout)

    # Kahler screen
    def test_command_kahler_check__obstructed(self):
        result = self.invoke('kahler-check', 'kahler_g3', '--max-degree', '2',
                             '--max-order', '12')
        self.assertEqual(result.exit_code, ExitCode.OBSTRUCTED)
        self.assertIn('status: OBSTRUCTED', result.output)
        self.assertIn('p_1 = t_x1 + t_x2 + t_x3', result.output)

    def test_command_kahler_check__consistent(self):
        result = self.invoke('kahler-check', 'surface2', '--json')
        self.assertEqual(result.exit_code, ExitCode.OK)
        self.assertEqual(json.loads(result.stdout)['status'], 'CONSISTENT')

    # Errors
    def test_command__parse_error(self):
        result = self.invoke('matrix', 'gens: x\nrels: x y')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)
        self.assertIn('line 2, column 9', result.output)

    def test_command__unknown_fixture(self):
        result = self.invoke('matrix', 'no_such_group')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)
        self.assertIn('no presentation file or fixture', result.output)

    def test_command__unknown_command(self):
        result = self.invoke('frobnicate', 'trefoil')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)

    def test_command__bad_word(self):
        result = self.invoke('derive', 'trefoil', 'x z')
        self.assertEqual(result.exit_code, ExitCode.INPUT_ERROR)
        self.assertIn('unknown generator', result.output)
