"""Real representation catalogs and virtual representations.

Each catalog irrep is modeled as a rational combination of permutation
representations Q[G/H] of subgroups of the group it lives on; fixed
dimensions are then orbit counts.  Restrictions follow hard-coded tables
between neighbouring catalog groups and compose along subgroup chains.

Irrep symbols per group kind:

    e          (only the trivial representation)
    C2         s (sign)
    Cp         l (the rotation representations, all identified)
    K4         V1 V2 V3 (sign representations, V_i trivial on H_i); V = V1+V2+V3
    D2p        s (sign), g (the 2-dimensional representations, identified)
    A4         V2 V3
    A5         V3 V4 V5

Grading grammar: terms ``[int ['*']] name`` or ``int`` joined by ``+`` and
``-``; whitespace is ignored, e.g. ``"1 + s - 2*g"`` or ``"3-V3-V4"``.
"""

import collections
import logging
import re
from fractions import Fraction

from sympy import isprime

from ._cache import cached
from .errors import GradingError, RestrictionError, SubgroupError
from .group_core import (PermGroup, compose, double_coset_orbits, structure_name,
                         subgroup_lattice)

__all__ = [
    'IrrepCatalog',
    'VirtualRep',
    'catalog',
    'group_kind',
    'virtual_rep',
    'restrict',
    'fixed_dim',
    'orientation_sign',
    'parse_grading',
    'format_grading',
    'Transport',
    'd2p_grade_transport',
]

logger = logging.getLogger(__name__)


def group_kind(H):
    """Catalog kind of a group: 'e', 'C2', 'Cp', 'K4', 'D', 'A4' or 'A5'."""
    name = structure_name(H)
    if name in ('e', 'C2', 'K4', 'A4', 'A5'):
        return name
    n = H.order
    if name.startswith('C') and isprime(n):
        return 'Cp'
    if name.startswith('D'):
        return 'D'
    raise RestrictionError("No representation catalog for %s" % name)


_SYMBOLS = {
    'e': [],
    'C2': ['s'],
    'Cp': ['l'],
    'K4': ['V1', 'V2', 'V3'],
    'D': ['s', 'g'],
    'A4': ['V2', 'V3'],
    'A5': ['V3', 'V4', 'V5'],
}

_ALIASES = {
    'sigma': 's', 'σ': 's',
    'gamma': 'g', 'γ': 'g',
    'lambda': 'l', 'λ': 'l',
}


class IrrepCatalog:
    """Irreducible real representations of one concrete group.

    ``models[name]`` is a list of (coefficient, subgroup) pairs: the irrep
    is sum coefficient * Q[G/subgroup] in the representation ring tensored
    with Q.
    """

    __slots__ = ('group', 'kind', 'names', 'models', 'dims')

    def __init__(self, group, kind, models):
        self.group = group
        self.kind = kind
        self.names = ['1'] + _SYMBOLS[kind]
        self.models = models
        self.dims = {name: _model_dim(group, models[name]) for name in self.names}

    def __repr__(self):
        return '<IrrepCatalog %s of %r: %s>' % (self.kind, self.group,
                                                ', '.join(self.names))


def _model_dim(G, model):
    return _integral(sum(Fraction(c) * (G.order // H.order) for c, H in model))


def _model_fixed(G, model, K):
    return _integral(sum(Fraction(c) * len(double_coset_orbits(G, K, H))
                         for c, H in model))


def _integral(q):
    q = Fraction(q)
    assert q.denominator == 1, q
    return q.numerator


@cached
def catalog(G):
    """The irrep catalog of a catalog group or of a subgroup of one."""
    kind = group_kind(G)
    lattice = subgroup_lattice(G)
    whole = lattice.classes[-1].representative

    def perm(name):
        return (1, lattice[name].representative)

    triv = [(1, whole)]
    minus_one = (-1, whole)
    models = {'1': triv}
    if kind == 'C2':
        models['s'] = [perm('e'), minus_one]
    elif kind == 'Cp':
        half = Fraction(2, G.order - 1)
        models['l'] = [(half, lattice['e'].representative), (-half, whole)]
    elif kind == 'K4':
        for i in (1, 2, 3):
            models['V%d' % i] = [perm('H%d' % i), minus_one]
    elif kind == 'D':
        p = G.order // 2
        half = Fraction(2, p - 1)
        models['s'] = [perm('C%d' % p), minus_one]
        models['g'] = [(half, lattice['C2'].representative), (-half, whole)]
    elif kind == 'A4':
        models['V2'] = [perm('K4'), minus_one]
        models['V3'] = [perm('C3'), minus_one]
    elif kind == 'A5':
        models['V3'] = [(Fraction(1, 2), lattice['C5'].representative),
                        (Fraction(-1, 2), lattice['D10'].representative)]
        models['V4'] = [perm('A4'), minus_one]
        models['V5'] = [perm('D10'), minus_one]
    return IrrepCatalog(G, kind, models)


class VirtualRep:
    """An integer combination of the catalog irreps of a group.

    Usage::

        V = parse_grading(make_group('A5'), '3 - V3 - V4')
        W = restrict(V, H)
        fixed_dim(W, K)
    """

    __slots__ = ('group', 'coefficients')

    def __init__(self, group, coefficients):
        assert isinstance(group, PermGroup), repr(group)
        cat = catalog(group)
        if isinstance(coefficients, dict):
            unknown = set(coefficients) - set(cat.names)
            if unknown:
                raise GradingError("Cannot use %s in a grading of %r"
                                   % (', '.join(sorted(unknown)), group))
            coefficients = [coefficients.get(n, 0) for n in cat.names]
        coefficients = tuple(int(c) for c in coefficients)
        if len(coefficients) != len(cat.names):
            raise GradingError("Cannot use %d coefficients for %r"
                               % (len(coefficients), group))
        self.group = group
        self.coefficients = coefficients

    @property
    def catalog(self):
        return catalog(self.group)

    def __getitem__(self, name):
        return self.coefficients[self.catalog.names.index(name)]

    def items(self):
        return zip(self.catalog.names, self.coefficients)

    @property
    def dim(self):
        dims = self.catalog.dims
        return sum(c * dims[n] for n, c in self.items())

    @property
    def trivial(self):
        return self.coefficients[0]

    def _check(self, other):
        if not isinstance(other, VirtualRep) or other.group != self.group:
            raise GradingError("Cannot combine gradings of different groups")

    def __add__(self, other):
        if isinstance(other, int):
            other = virtual_rep(self.group, {'1': other})
        self._check(other)
        return VirtualRep(self.group, [a + b for a, b in zip(self.coefficients,
                                                             other.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return VirtualRep(self.group, [-a for a in self.coefficients])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return VirtualRep(self.group, [n * a for a in self.coefficients])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        return self.group == other.group and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.group, self.coefficients))

    def __repr__(self):
        return 'VirtualRep(%r, %r)' % (self.group, format_grading(self))

    def __str__(self):
        return format_grading(self)


def virtual_rep(G, coefficients):
    return VirtualRep(G, coefficients)


def fixed_dim(V, K):
    """dim V^K for a subgroup K of the group V lives on."""
    if hasattr(K, 'representative'):
        K = K.representative
    if not K <= V.group:
        raise SubgroupError("%r is not a subgroup of %r" % (K, V.group))
    models = V.catalog.models
    return sum(c * _model_fixed(V.group, models[n], K) for n, c in V.items() if c)


def orientation_sign(V, g):
    """Determinant of g acting on V, from fixed dimensions of <g> and <g^2>."""
    G = V.group
    H1 = G.subgroup([g])
    H2 = G.subgroup([compose(g, g)])
    return -1 if (fixed_dim(V, H2) - fixed_dim(V, H1)) % 2 else 1


# Restriction tables between neighbouring catalog kinds.  Each entry maps
# an irrep of the larger group to a dict over the smaller group's symbols.
_TABLES = {
    ('A5', 'A4'): {'V3': {'V3': 1}, 'V4': {'1': 1, 'V3': 1}, 'V5': {'V2': 1, 'V3': 1}},
    ('A4', 'K4'): {'V2': {'1': 2}, 'V3': {'V1': 1, 'V2': 1, 'V3': 1}},
    ('A4', 'Cp'): {'V2': {'l': 1}, 'V3': {'1': 1, 'l': 1}},
    ('A4', 'C2'): {'V2': {'1': 2}, 'V3': {'1': 1, 's': 2}},
    ('D', 'C2'): {'s': {'s': 1}, 'g': {'1': 1, 's': 1}},
    ('D', 'Cp'): {'s': {'1': 1}, 'g': {'l': 1}},
}

_A5_DIHEDRAL = {
    6: {'V3': {'s': 1, 'g': 1}, 'V4': {'1': 1, 's': 1, 'g': 1}, 'V5': {'1': 1, 'g': 2}},
    10: {'V3': {'s': 1, 'g': 1}, 'V4': {'g': 2}, 'V5': {'1': 1, 'g': 2}},
}


def _step_table(G, H):
    gk, hk = group_kind(G), group_kind(H)
    if gk == 'A5' and hk == 'D':
        return _A5_DIHEDRAL[H.order]
    if gk == 'K4' and hk == 'C2':
        i = int(subgroup_lattice(G).class_of(H).name[1])
        return {'V%d' % j: {'1': 1} if j == i else {'s': 1} for j in (1, 2, 3)}
    table = _TABLES.get((gk, hk))
    if table is None:
        return None
    return table


def _restrict_step(V, H, table):
    out = collections.Counter({'1': V.trivial})
    for name, c in V.items():
        if name == '1' or not c:
            continue
        for target, k in table[name].items():
            out[target] += c * k
    return VirtualRep(H, dict(out))


def restrict(V, H):
    """Restriction of V to a subgroup H of its group.

    Direct table entries are used when available; otherwise the restriction
    composes through an intermediate catalog subgroup.
    """
    if hasattr(H, 'representative'):
        H = H.representative
    G = V.group
    if not H <= G:
        raise SubgroupError("%r is not a subgroup of %r" % (H, G))
    if H == G:
        return V
    if H.order == 1:
        return VirtualRep(H, {'1': V.dim})
    table = _step_table(G, H)
    if table is not None:
        return _restrict_step(V, H, table)
    for M in sorted(subgroup_lattice(G).subgroups(), key=lambda S: (-S.order, S.key)):
        if M == G or M == H or not H <= M:
            continue
        try:
            table = _step_table(G, M)
        except RestrictionError:
            continue
        if table is not None:
            return restrict(_restrict_step(V, M, table), H)
    raise RestrictionError("No restriction table from %s to %s"
                           % (group_kind(G), group_kind(H)))


_TERM = re.compile(r'([+-])?\s*(\d+)?\s*(\*)?\s*([A-Za-zγσλ][A-Za-z0-9]*)?')


def parse_grading(G, text):
    """Parse a grading expression into a VirtualRep of G."""
    cat = catalog(G)
    symbols = set(cat.names) - {'1'}
    source = re.sub(r'\s+', '', str(text))
    if not source:
        raise GradingError("Cannot parse an empty grading")
    out = collections.Counter()
    pos = 0
    first = True
    while pos < len(source):
        m = _TERM.match(source, pos)
        sign, number, star, name = m.groups()
        if m.end() == pos or (sign is None and not first) \
                or (number is None and name is None) \
                or (star and (number is None or name is None)):
            raise GradingError("Cannot parse grading %r at position %d" % (text, pos))
        k = int(number) if number is not None else 1
        if sign == '-':
            k = -k
        if name is None:
            out['1'] += k
        else:
            name = _ALIASES.get(name.lower(), name)
            if cat.kind == 'K4' and name.upper() == 'V':
                for s in ('V1', 'V2', 'V3'):
                    out[s] += k
            elif name.lower() in symbols:
                out[name.lower()] += k
            elif name in symbols:
                out[name] += k
            elif name.upper() in symbols:
                out[name.upper()] += k
            else:
                raise GradingError("Cannot use %r in a grading of %s (symbols: %s)"
                                   % (name, G.name or cat.kind,
                                      ', '.join(sorted(symbols))))
        pos = m.end()
        first = False
    return VirtualRep(G, dict(out))


def format_grading(V):
    """Render a VirtualRep in the grammar accepted by parse_grading."""
    terms = []
    items = list(V.items())
    if V.catalog.kind == 'K4':
        c = [V[s] for s in ('V1', 'V2', 'V3')]
        if c[0] and c[0] == c[1] == c[2]:
            items = [('1', V.trivial), ('V', c[0])]
    for name, c in items:
        if not c:
            continue
        mag = abs(c)
        if name == '1':
            body = str(mag)
        else:
            body = name if mag == 1 else '%d*%s' % (mag, name)
        if not terms:
            terms.append(body if c > 0 else '-' + body)
        else:
            terms.append(('+ ' if c > 0 else '- ') + body)
    return ' '.join(terms) if terms else '0'


Transport = collections.namedtuple('Transport', ['trivial', 'coefficient', 'nonzero'])


def d2p_grade_transport(k, m, n, side):
    """Gradings seen by the two sides of k + m*s + n*g for D_2p.

    The C2 side is (k+n) + (m+n)s; the Cp side is (k+m) + n*l, and it
    contributes nothing when floor(|k+m|/2) + m is odd.
    """
    if side == 'C2':
        return Transport(k + n, m + n, True)
    if side == 'Cp':
        return Transport(k + m, n, (abs(k + m) // 2 + m) % 2 == 0)
    raise GradingError("Cannot transport to side %r" % (side,))

