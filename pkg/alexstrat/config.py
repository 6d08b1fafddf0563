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
"""Configuration for the alexstrat toolkit."""
import logging
import os
import tempfile

from flask import Config

from alexstrat.const import ConfKey


TEMP = tempfile.gettempdir()
PACKAGE_ROOT = os.path.dirname(os.path.abspath(__file__))


def _threads_from_env(default):
    value = os.getenv('ALEXSTRAT_THREADS')
    if not value:
        return default
    try:
        return max(1, int(value))
    except ValueError:
        logging.warning("Ignoring non-integer ALEXSTRAT_THREADS=%s", value)
        return default


# pylint: disable=R0903
class BaseConfig:
    """Base / default config, info logging and short log format."""

    DEFAULT_MAX_DEGREE = 2
    DEFAULT_MAX_ORDER = 12
    KAHLER_MAX_CANDIDATES = 200000
    KAHLER_POINT_THRESHOLD = 3
    LOG_FILE = os.path.join(TEMP, 'alexstrat.log')
    LOG_FORMAT = '[%(filename)-15s:%(lineno)-5d] %(message)s'
    LOG_LEVEL = logging.INFO
    PRESENTATION_DIR = os.path.join(PACKAGE_ROOT, 'presentations')
    SHOW_PROGRESS = False
    THREADS = os.cpu_count() or 1


# pylint: disable=R0903
class DevConfig(BaseConfig):
    """Developer level config, with debug logging and long log format."""

    LOG_FORMAT = '[%(asctime)s %(levelname)-8s %(filename)-15s:%(lineno)-5d ' +\
                 '%(funcName)-30s] %(message)s'
    LOG_LEVEL = logging.DEBUG
    SHOW_PROGRESS = True


CONFIGS = {
    "dev": 'alexstrat.config.DevConfig',
    "default": 'alexstrat.config.BaseConfig'
}


def configure(config_name=None):
    """
    Build the toolkit configuration.

    The class is picked by name, or from the ALEXSTRAT_CONFIG environment
    variable, falling back to the defaults. A file named by
    ALEXSTRAT_CONFIG_FILE overrides individual keys.

    Args:
        config_name (Optional[str]): key of CONFIGS

    Returns (flask.Config):

    """
    config_name = config_name or os.getenv('ALEXSTRAT_CONFIG', 'default')
    config = Config(PACKAGE_ROOT)
    config.from_object(CONFIGS.get(config_name, CONFIGS['default']))
    if os.getenv('ALEXSTRAT_CONFIG_FILE'):
        config.from_envvar('ALEXSTRAT_CONFIG_FILE')
    config[ConfKey.THREADS] = _threads_from_env(config[ConfKey.THREADS])
    return config


CONFIG = configure()
# Configure logging across all modules
logging.basicConfig(filename=CONFIG[ConfKey.LOG_FILE],
                    level=CONFIG[ConfKey.LOG_LEVEL],
                    format=CONFIG[ConfKey.LOG_FORMAT])
logging.debug("Configured logging.")
logging.debug("Logging in directory %s", CONFIG[ConfKey.LOG_FILE])
logging.debug("Toolkit configured with threads=%s",
              CONFIG[ConfKey.THREADS])
