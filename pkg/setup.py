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
"""Setup for the alexstrat toolkit."""
from setuptools import setup, find_packages

INSTALL_REQUIRES = [
    'setuptools',
    'flask>=2.0',
    'click>=8.0',
    'numpy>=1.19.0',
    'pandas>=1.0.5',
    'sympy>=1.7',
    'tqdm>=4.47.0',
]
PYTHON_REQUIRES = '>=3.8, <4'

TEST_DEPS = [
    'pre-commit',
    'pytest',
    'pylint',
    'pytest-coverage'
]
EXTRAS = {
    'testing': TEST_DEPS,
}

README = open('README.md', 'r')
README_TEXT = README.read()
README.close()

setup(
    name='alexstrat',
    version='0.1.0',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    package_data={'alexstrat': ['presentations/*.fp']},
    install_requires=INSTALL_REQUIRES,
    tests_require=TEST_DEPS,
    extras_require=EXTRAS,
    python_requires=PYTHON_REQUIRES,
    entry_points={
        'console_scripts': ['alexstrat = alexstrat.commands:cli'],
    },
    platforms=['POSIX'],
    description='Alexander stratifications of finitely presented groups',
    long_description=README_TEXT,
    long_description_content_type='text/markdown',
    classifiers=[
        'Environment :: Console',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ]
)
