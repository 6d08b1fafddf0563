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
"""Unit tests for configuration and the shared helpers."""
import os
import tempfile
from unittest import TestCase, mock

from alexstrat.config import (
    CONFIG,
    configure,
)
from alexstrat.const import ConfKey
from alexstrat.utils import (
    InputError,
    fixture_path,
    gcd_all,
    lcm,
    list_presentation_fixtures,
    parallel_map,
    require,
)
from tests import settings


class ConfigTests(TestCase):
    def test_configure__default(self):
        config = configure('default')
        self.assertEqual(config[ConfKey.DEFAULT_MAX_DEGREE], 2)
        self.assertEqual(config[ConfKey.DEFAULT_MAX_ORDER], 12)
        self.assertEqual(config[ConfKey.KAHLER_POINT_THRESHOLD], 3)
        self.assertFalse(config[ConfKey.SHOW_PROGRESS])
        self.assertTrue(os.path.isdir(config[ConfKey.PRESENTATION_DIR]))

    def test_configure__dev(self):
        config = configure('dev')
        self.assertTrue(config[ConfKey.SHOW_PROGRESS])
        self.assertIn('asctime', config[ConfKey.LOG_FORMAT])

    def test_configure__unknown_name_falls_back(self):
        self.assertEqual(configure('nonsense')[ConfKey.LOG_FORMAT],
                         configure('default')[ConfKey.LOG_FORMAT])

    def test_configure__threads_from_env(self):
        with mock.patch.dict(os.environ, {'ALEXSTRAT_THREADS': '3'}):
            self.assertEqual(configure('default')[ConfKey.THREADS], 3)
        with mock.patch.dict(os.environ, {'ALEXSTRAT_THREADS': 'many'}):
            self.assertEqual(configure('default')[ConfKey.THREADS],
                             os.cpu_count() or 1)

    def test_configure__file_override(self):
        handle, path = tempfile.mkstemp(suffix='.cfg')
        try:
            with os.fdopen(handle, 'w', encoding='utf-8') as config_file:
                config_file.write('DEFAULT_MAX_ORDER = 30\n')
            with mock.patch.dict(os.environ, {'ALEXSTRAT_CONFIG_FILE': path}):
                self.assertEqual(configure('default')[ConfKey.DEFAULT_MAX_ORDER], 30)
        finally:
            os.remove(path)


class UtilsTests(TestCase):
    def test_utils_list_presentation_fixtures(self):
        names = [item['name'] for item in list_presentation_fixtures()]
        self.assertEqual(names, settings.FIXTURE_NAMES)
        labels = {item['name']: item['label'] for item in list_presentation_fixtures()}
        self.assertEqual(labels['figure_eight'], 'Figure Eight')

    def test_utils_fixture_path(self):
        self.assertTrue(fixture_path('trefoil').endswith('trefoil.fp'))
        self.assertIsNone(fixture_path('missing'))
        self.assertEqual(os.path.dirname(fixture_path('z3')),
                         CONFIG[ConfKey.PRESENTATION_DIR])

    def test_utils_lcm_gcd(self):
        self.assertEqual(lcm(4, 6), 12)
        self.assertEqual(lcm(), 1)
        self.assertEqual(gcd_all([6, -9, 15]), 3)
        self.assertEqual(gcd_all([]), 0)

    def test_utils_require(self):
        require(True, "never raised")
        with self.assertRaises(InputError) as context:
            require(False, "bad value %s", 7)
        self.assertEqual(str(context.exception), 'bad value 7')

    def test_utils_parallel_map__keeps_order(self):
        items = list(range(20))
        self.assertEqual(parallel_map(lambda x: x * x, items, threads=4),
                         [x * x for x in items])
        self.assertEqual(parallel_map(lambda x: x + 1, items, threads=1),
                         [x + 1 for x in items])
