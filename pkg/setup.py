#!/usr/bin/env python
# coding: utf-8

import sys
from setuptools import setup

if sys.version_info < (3, 6, 0):
    sys.stderr.write('ERROR: You need Python 3.6+ '
                     'to install the eqhomotopy package.\n')
    exit(1)

version = '0.1.0'
description = 'RO(G)-graded homotopy of HZ for small finite groups'
long_description = '''\
eqhomotopy -- equivariant homotopy of HZ by splitting

An exact-arithmetic engine for the RO(G)-graded homotopy groups of the
Eilenberg-MacLane spectrum of the constant Mackey functor Z for the
groups C_n, K_4, D_2p, A_4 and A_5.

A grading is split one prime at a time.  At each prime p dividing |G|
the answer is computed from a cellular model of a representation sphere
for a Sylow p-subgroup, cut down to the stable elements under fusion, and
the local answers are glued back together.  The Burnside ring
idempotents, families of subgroups and the resulting Mackey functors are
exposed as well, together with independent enumeration oracles used to
cross-check every computed value.

The package installs a command line front end::

    python -m eqhomotopy compute --group A5 --grading "3-V3-V4"
'''

classifiers = [
    'Development Status :: 3 - Alpha',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'Operating System :: OS Independent',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.6',
    'Programming Language :: Python :: 3.7',
    'Programming Language :: Python :: 3.8',
    'Topic :: Scientific/Engineering :: Mathematics',
]

setup(name='eqhomotopy',
      version=version,
      description=description,
      long_description=long_description,
      keywords='equivariant homotopy Mackey functor Burnside ring '
               'representation sphere cellular homology',
      package_dir={'': 'src'},
      packages=['eqhomotopy'],
      python_requires='>=3.6',
      install_requires=['sympy>=1.9'],
      entry_points={'console_scripts': ['eqhomotopy = eqhomotopy.cli:main']},
      classifiers=classifiers)
