"""Equivariant homotopy groups of HZ for small finite groups.

    >>> from eqhomotopy import make_group, parse_grading, compute_homotopy
    >>> G = make_group('A5')
    >>> str(compute_homotopy(G, parse_grading(G, '3 - V3 - V4')))
    'Z/30'
"""

from .abelian import FGAbelianGroup, IntMatrix, smith_normal_form
from .burnside import SRational, TableOfMarks, idempotents, marks
from .errors import *  # noqa: F401,F403
from .families import Family, all_families, family_not_containing, \
    required_inverted_primes, solve_cH
from .group_core import PermGroup, make_group, subgroup_lattice, sylow
from .mackey import MackeyFunctor, assemble, check_cohomological, lewis_diagram, \
    top_level_via_transfers
from .presentations import graded_piece_of_presentation
from .reps import VirtualRep, format_grading, parse_grading, restrict
from .splitter import compute_homotopy, glue, localized_homotopy

__all__ = [
    'FGAbelianGroup', 'IntMatrix', 'smith_normal_form',
    'SRational', 'TableOfMarks', 'idempotents', 'marks',
    'Family', 'all_families', 'family_not_containing', 'required_inverted_primes',
    'solve_cH',
    'PermGroup', 'make_group', 'subgroup_lattice', 'sylow',
    'MackeyFunctor', 'assemble', 'check_cohomological', 'lewis_diagram',
    'top_level_via_transfers',
    'graded_piece_of_presentation',
    'VirtualRep', 'format_grading', 'parse_grading', 'restrict',
    'compute_homotopy', 'glue', 'localized_homotopy',
]

__version__ = '0.1.0'
