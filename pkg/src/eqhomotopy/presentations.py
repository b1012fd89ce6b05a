"""Enumeration oracles: graded pieces of the known answer rings.

A presentation is a list of summand families.  Each family is a set of
monomials in generators with prescribed degree vectors and exponent
ranges, all carrying the same additive order (0 for Z, or a prime).  The
graded piece at V collects every monomial of degree V and assembles the
abelian group they span.

The two K4 cones are computed differently: the positive cone as a graded
piece of a subring of Z[x_i, y_i]/(2x_i, r), the negative cone as the
kernel of multiplication by r on a span of inverse monomials, both by
linear algebra over F_2.
"""

import collections
import itertools
import logging
import math
from fractions import Fraction

import sympy

from ._cache import cached
from .abelian import FGAbelianGroup, lattice_span_dimension
from .errors import GradingError
from .reps import VirtualRep

__all__ = [
    'PRESENTATIONS',
    'GradedPiece',
    'Generator',
    'SummandFamily',
    'Presentation',
    'exponent_bound',
    'presentation',
    'graded_piece_of_presentation',
    'k4_positive_piece',
    'k4_negative_piece',
]

logger = logging.getLogger(__name__)

PRESENTATIONS = ('c2', 'cp', 'dihedral', 'a5-3local', 'a5-5local',
                 'k4-positive', 'k4-negative')

GradedPiece = collections.namedtuple('GradedPiece', ['group', 'labels'])

Generator = collections.namedtuple('Generator', ['symbol', 'degree', 'annihilator'])


def exponent_bound(magnitude):
    """Exponent scan bound for gradings with coefficients bounded by ``magnitude``."""
    return 3 * magnitude + 3


_RANGES = {
    'N': lambda b: range(0, b + 1),
    'P': lambda b: range(1, b + 1),
    'M': lambda b: range(-b, 0),
    'Z': lambda b: range(-b, b + 1),
}


def _in_range(kind, e):
    return {'N': e >= 0, 'P': e > 0, 'M': e < 0, 'Z': True}[kind]


class SummandFamily:
    """Monomials prod g_i^{e_i}, e_i in the range of g_i, shifted by ``offset``.

    The order of a monomial is the gcd of ``order`` with the annihilators of
    the generators that occur with a positive exponent; order 1 means the
    monomial vanishes.
    """

    def __init__(self, generators, ranges, order=0, offset=None, prefix=''):
        self.generators = list(generators)
        self.ranges = list(ranges)
        self.order = order
        dim = len(self.generators[0].degree)
        self.offset = tuple(offset) if offset else (0,) * dim
        self.prefix = prefix
        matrix = sympy.Matrix([list(g.degree) for g in self.generators]).T
        _, pivots = matrix.rref()
        self.pivots = list(pivots)
        self.free = [i for i in range(len(self.generators)) if i not in pivots]
        sub = matrix.extract(list(range(dim)), self.pivots)
        left = (sub.T * sub).inv() * sub.T
        self._left = [[Fraction(int(x.p), int(x.q)) for x in left.row(i)]
                      for i in range(left.rows)]

    def solutions(self, target, bound):
        target = [t - o for t, o in zip(target, self.offset)]
        free_ranges = [_RANGES[self.ranges[i]](bound) for i in self.free]
        for values in itertools.product(*free_ranges):
            rhs = list(target)
            for i, v in zip(self.free, values):
                for r, x in enumerate(self.generators[i].degree):
                    rhs[r] -= v * x
            sol = [sum(c * x for c, x in zip(row, rhs)) for row in self._left]
            if any(q.denominator != 1 for q in sol):
                continue
            exps = [0] * len(self.generators)
            for i, q in zip(self.pivots, sol):
                exps[i] = int(q)
            for i, v in zip(self.free, values):
                exps[i] = v
            if not all(_in_range(k, e) for k, e in zip(self.ranges, exps)):
                continue
            check = [sum(e * g.degree[r] for e, g in zip(exps, self.generators))
                     for r in range(len(target))]
            if check == target:
                yield exps

    def monomial_order(self, exps):
        order = self.order
        for e, g in zip(exps, self.generators):
            if e > 0 and g.annihilator:
                order = math.gcd(order, g.annihilator)
        return order

    def label(self, exps):
        parts = [self.prefix] if self.prefix else []
        for e, g in zip(exps, self.generators):
            if e == 1:
                parts.append(g.symbol)
            elif e:
                parts.append('%s^%d' % (g.symbol, e))
        return ' '.join(parts) or '1'


class Presentation:
    """A named list of summand families over a fixed coordinate system."""

    def __init__(self, name, coordinates, families):
        self.name = name
        self.coordinates = tuple(coordinates)
        self.families = families

    def piece(self, target):
        target = tuple(target)
        if len(target) != len(self.coordinates):
            raise GradingError("Cannot evaluate %s at %r: expected coordinates %s"
                               % (self.name, target, ', '.join(self.coordinates)))
        bound = exponent_bound(max(abs(x) for x in target) if target else 0)
        labels = []
        for family in self.families:
            for exps in family.solutions(target, bound):
                order = family.monomial_order(exps)
                if order != 1:
                    labels.append((family.label(exps), order))
        labels.sort()
        rank = sum(1 for _, q in labels if q == 0)
        group = FGAbelianGroup(rank, [q for _, q in labels if q])
        return GradedPiece(group, labels)


def _prime_family(u, a, p):
    return [
        SummandFamily([u, a], 'NN'),
        SummandFamily([u], 'M'),
        SummandFamily([u, a], 'MM', order=p, offset=(-1, 0), prefix='S^-1'),
    ]


@cached
def presentation(name, p=None):
    """The presentation ``name`` (one of PRESENTATIONS); ``p`` selects the odd prime."""
    if name == 'c2':
        u = Generator('u_{2s}', (2, -2), 0)
        a = Generator('a_s', (0, -1), 2)
        return Presentation(name, ('1', 's'), _prime_family(u, a, 2))
    if name == 'cp':
        _need_prime(name, p)
        u = Generator('u_l', (2, -1), 0)
        a = Generator('a_l', (0, -1), p)
        return Presentation(name, ('1', 'l'), _prime_family(u, a, p))
    if name == 'dihedral':
        _need_prime(name, p)
        U = Generator('u_{g-s}', (1, 1, -1), 0)
        W = Generator('u_{2s}', (2, -2, 0), 0)
        a_s = Generator('a_s', (0, -1, 0), 2)
        a_g = Generator('a_g', (0, 0, -1), p)
        shift = (-1, 0, 0)
        return Presentation(name, ('1', 's', 'g'), [
            SummandFamily([U, W, a_s, a_g], 'NNNN'),
            SummandFamily([U, W], 'NM'),
            SummandFamily([W, U], 'NM'),
            SummandFamily([W, U], 'MM'),
            SummandFamily([U, a_g, W], 'NPM', order=p),
            SummandFamily([W, a_s, U], 'NPM', order=2),
            SummandFamily([U, W, a_s], 'ZMM', order=2, offset=shift, prefix='S^-1'),
            SummandFamily([W, U, a_g], 'ZMM', order=p, offset=shift, prefix='S^-1'),
        ])
    if name in ('a5-3local', 'a5-5local'):
        if name == 'a5-3local':
            q = 3
            X = Generator('u_{V4-V3}', (1, 1, -1, 0), 0)
            Y = Generator('u_{2V3-V5}', (1, -2, 0, 1), 0)
            a = Generator('a_{V5-1}', (1, 0, 0, -1), 3)
        else:
            q = 5
            X = Generator('u_{V5-V4}', (1, 0, 1, -1), 0)
            Y = Generator('u_{2V3-V4}', (2, -2, 1, 0), 0)
            a = Generator('a_{V4}', (0, 0, -1, 0), 5)
        u = Generator('u_{V3}', (3, -1, 0, 0), 0)
        return Presentation(name, ('1', 'V3', 'V4', 'V5'), [
            SummandFamily([X, Y, u, a], 'ZZNN'),
            SummandFamily([X, Y, u], 'ZZM'),
            SummandFamily([X, Y, u, a], 'ZZMM', order=q, offset=(-1, 0, 0, 0),
                          prefix='S^-1'),
        ])
    raise GradingError("Cannot build unknown presentation %r (known: %s)"
                       % (name, ', '.join(PRESENTATIONS)))


def _need_prime(name, p):
    if p is None or p == 2 or not sympy.isprime(p):
        raise GradingError("Cannot build presentation %r without an odd prime" % name)


# The K4 cones.  A monomial prod x_t^{i_t} y_t^{j_t} is stored as the
# exponent tuple (i1, j1, i2, j2, i3, j3); polynomials over F_2 as frozensets.

def _mono(i, j):
    return (i[0], j[0], i[1], j[1], i[2], j[2])


def _mul(m, n):
    return tuple(a + b for a, b in zip(m, n))


def _poly_mul(f, g):
    out = set()
    for m in f:
        for n in g:
            out ^= {_mul(m, n)}
    return frozenset(out)


def _y_degree(m):
    return m[1] + m[3] + m[5]


def _level_triples(n):
    return [(i, n - i) for i in range(n + 1)]


def _positive_generators(level):
    """Ring generators of the positive cone with i_t + j_t == level."""
    L = level
    gens = []
    for (i1, j1), (i2, j2), (i3, j3) in itertools.product(_level_triples(L), repeat=3):
        if j1 % 2 == j2 % 2 == j3 % 2 and j1 * j2 * i3 == 0:
            gens.append(frozenset([_mono((i1, i2, i3), (j1, j2, j3))]))
    for (i1, j1), (i2, j2) in itertools.product(_level_triples(L - 1), repeat=2):
        j3 = L
        if j1 % 2 == j2 % 2 == j3 % 2:
            gens.append(frozenset([_mono((i1 + 1, i2, 0), (j1, j2 + 1, j3)),
                                   _mono((i1, i2 + 1, 0), (j1 + 1, j2, j3))]))
    for (i1, j1), (i3, j3) in itertools.product(_level_triples(L - 1), repeat=2):
        i2 = L
        if j1 % 2 == 0 and j3 % 2 == 0:
            gens.append(frozenset([_mono((i1 + 1, i2, i3), (j1, 0, j3 + 1)),
                                   _mono((i1, i2, i3 + 1), (j1 + 1, 0, j3))]))
    for (i2, j2), (i3, j3) in itertools.product(_level_triples(L - 1), repeat=2):
        i1 = L
        if j2 % 2 == 0 and j3 % 2 == 0:
            gens.append(frozenset([_mono((i1, i2 + 1, i3), (0, j2, j3 + 1)),
                                   _mono((i1, i2, i3 + 1), (0, j2 + 1, j3))]))
    return gens


_RELATION = frozenset([_mono((1, 0, 0), (0, 1, 1)), _mono((0, 1, 0), (1, 0, 1)),
                       _mono((0, 0, 1), (1, 1, 0))])


def _f2_basis(polys, index):
    """Row-reduce F_2 polynomials over the monomial ``index``; keeps independent ones."""
    vectors = [[1 if m in f else 0 for m in index] for f in polys]
    kept = []
    for f, v in zip(polys, vectors):
        if lattice_span_dimension([kept_v for _, kept_v in kept] + [v], 2) > len(kept):
            kept.append((f, v))
    return [f for f, _ in kept]


@cached
def _positive_span(level):
    """F_2 spanning polynomials of the positive-cone subring in one level."""
    if level == 0:
        return (frozenset([(0,) * 6]),)
    polys = list(_positive_generators(level))
    for low in range(1, level):
        for g in _positive_generators(low):
            for s in _positive_span(level - low):
                polys.append(_poly_mul(g, s))
    polys = [f for f in set(polys) if f]
    index = sorted({m for f in polys for m in f})
    by_degree = collections.defaultdict(list)
    for f in polys:
        by_degree[_y_degree(next(iter(f)))].append(f)
    out = []
    for d in sorted(by_degree):
        out.extend(_f2_basis(sorted(by_degree[d], key=sorted), index))
    logger.debug('positive cone level %d: %d spanning polynomials', level, len(out))
    return tuple(out)


def _monomials(level, ydeg, with_x=True):
    out = []
    triples = _level_triples(level)
    for (i1, j1), (i2, j2), (i3, j3) in itertools.product(triples, repeat=3):
        if j1 + j2 + j3 == ydeg and (not with_x or i1 + i2 + i3):
            out.append(_mono((i1, i2, i3), (j1, j2, j3)))
    return out


def k4_positive_piece(a, n):
    """pi_{a - nV} for n >= 0 from the positive-cone subring."""
    if n < 0:
        raise GradingError("Cannot use the positive cone at a - %dV" % n)
    if a == 3 * n:
        return GradedPiece(FGAbelianGroup(1), [('(y1y2y3)^%d' % n if n else '1', 0)])
    index = _monomials(n, a)
    if not index:
        return GradedPiece(FGAbelianGroup(), [])
    position = {m: k for k, m in enumerate(index)}
    relations = []
    for m in _monomials(n - 1, a - 2, with_x=False) if n else ():
        f = _poly_mul(_RELATION, frozenset([m]))
        relations.append([1 if x in f else 0 for x in index])
    span = []
    for f in _positive_span(n):
        if _y_degree(next(iter(f))) == a and all(m in position for m in f):
            span.append([1 if x in f else 0 for x in index])
    dim = (lattice_span_dimension(relations + span, 2)
           - lattice_span_dimension(relations, 2))
    return GradedPiece(FGAbelianGroup(0, [2] * dim),
                       [('F_2 class %d' % k, 2) for k in range(dim)])


def _negative_monomials(n, ydeg):
    """Inverse monomials x^-i y^-j with i_t + j_t == n, j_t > 0 and some i_t > 0."""
    out = []
    for (i1, j1), (i2, j2), (i3, j3) in itertools.product(_level_triples(n), repeat=3):
        if min(j1, j2, j3) > 0 and i1 + i2 + i3 and j1 + j2 + j3 == ydeg:
            out.append(_mono((i1, i2, i3), (j1, j2, j3)))
    return out


def _times_relation(m):
    """r * x^-i y^-j, dropping terms that leave the inverse-monomial module."""
    i1, j1, i2, j2, i3, j3 = m
    out = set()
    for t in range(3):
        i = [i1, i2, i3]
        j = [j1, j2, j3]
        i[t] -= 1
        for s in range(3):
            if s != t:
                j[s] -= 1
        if min(i) >= 0 and min(j) > 0:
            out ^= {_mono(i, j)}
    return out


def _t_generators(n, ydeg):
    """Spanning elements of T in degree ydeg, terms outside U dropped."""
    out = []
    allowed = set(_negative_monomials(n, ydeg))
    triples = _level_triples(n - 1)
    for (i1, j1), (i2, j2), (i3, j3) in itertools.product(triples, repeat=3):
        if not j1 % 2 == j2 % 2 == j3 % 2:
            continue
        terms = [_mono((i1, i2 + 1, i3 + 1), (j1 + 1, j2, j3)),
                 _mono((i1 + 1, i2, i3 + 1), (j1, j2 + 1, j3)),
                 _mono((i1 + 1, i2 + 1, i3), (j1, j2, j3 + 1))]
        kept = frozenset(m for m in terms if m in allowed)
        if kept:
            out.append(kept)
    return out


def k4_negative_piece(a, n):
    """pi_{a + nV} for n > 0: Z at a == -3n plus ker(r) on T."""
    if n <= 0:
        raise GradingError("Cannot use the negative cone at a + %dV" % n)
    labels = []
    rank = 0
    if a == -3 * n:
        rank = 1
        labels.append(('(y1y2y3)^-%d' % n, 0))
    ydeg = -a
    index = _negative_monomials(n, ydeg)
    if index:
        gens = _t_generators(n, ydeg)
        vectors = [[1 if m in f else 0 for m in index] for f in gens]
        images = []
        target = sorted({x for f in gens for m in f for x in _times_relation(m)})
        for f in gens:
            img = set()
            for m in f:
                img ^= _times_relation(m)
            images.append([1 if x in img else 0 for x in target])
        dim = lattice_span_dimension(vectors, 2) - (
            lattice_span_dimension(images, 2) if target else 0)
        labels.extend(('F_2 class %d' % k, 2) for k in range(dim))
    torsion = [q for _, q in labels if q]
    return GradedPiece(FGAbelianGroup(rank, torsion), labels)


def _coordinates(V, names):
    return tuple(V[n] for n in names)


def graded_piece_of_presentation(name, V, p=None):
    """Graded piece of presentation ``name`` at the grading V.

    V is a VirtualRep of the presentation's group (C2, Cp, D2p, A5 or K4)
    or a plain coordinate tuple.
    """
    if name in ('k4-positive', 'k4-negative'):
        if isinstance(V, VirtualRep):
            c = [V['V1'], V['V2'], V['V3']]
            if len(set(c)) != 1:
                raise GradingError("Cannot evaluate %s at %s: V_i coefficients differ"
                                   % (name, V))
            a, b = V.trivial, c[0]
        else:
            a, b = V
        if b <= 0:
            return k4_positive_piece(a, -b)
        return k4_negative_piece(a, b)
    if isinstance(V, VirtualRep):
        if p is None and name in ('cp', 'dihedral'):
            p = V.group.order if name == 'cp' else V.group.order // 2
        pres = presentation(name, p)
        return pres.piece(_coordinates(V, pres.coordinates))
    return presentation(name, p).piece(V)
