"""Finite groups as permutation groups.

Permutations are tuples of images: ``g[i]`` is the image of point i, and
``compose(g, h)`` applies h first.  A PermGroup stores its full element
set; subgroups are PermGroups on the same points.  The subgroup lattice is
enumerated by join closure over cyclic subgroups and split into conjugacy
classes ordered by (order, canonical key), where the canonical key of a
subgroup is its sorted element tuple.
"""

import logging
import re

from sympy import isprime
from sympy.combinatorics.named_groups import AlternatingGroup

from ._cache import cached
from .errors import GroupTooLargeError, SubgroupError, UnknownGroupError

__all__ = [
    'MAX_GROUP_ORDER',
    'compose',
    'inverse',
    'identity',
    'conjugate',
    'element_order',
    'PermGroup',
    'SubgroupClass',
    'SubgroupLattice',
    'make_group',
    'parse_group_id',
    'subgroup_lattice',
    'normalizer',
    'sylow',
    'omega_p',
    'double_coset_orbits',
    'embedding_witness',
    'group_to_json',
    'lattice_to_json',
]

logger = logging.getLogger(__name__)

MAX_GROUP_ORDER = 10_000


def compose(g, h):
    """The permutation x -> g(h(x))."""
    return tuple(g[i] for i in h)


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def identity(degree):
    return tuple(range(degree))


def conjugate(g, x):
    """g x g^-1"""
    return compose(compose(g, x), inverse(g))


def element_order(g):
    n = 1
    x = g
    e = identity(len(g))
    while x != e:
        x = compose(g, x)
        n += 1
    return n


def _closure(degree, generators, seed=()):
    elements = set(seed) | {identity(degree)}
    gens = [tuple(g) for g in generators]
    frontier = list(elements)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elements)


class PermGroup:
    """A finite group of permutations of range(degree).

    Usage::

        G = make_group('A5')
        H = G.subgroup([g])          # closure of g inside G
        H <= G, len(G), g in G
    """

    __slots__ = ('degree', 'generators', 'elements', 'name', '_key', '__weakref__')

    def __init__(self, degree, generators, name=None, elements=None):
        if degree < 1:
            raise ValueError("Cannot act on %r points" % (degree,))
        self.degree = degree
        self.generators = tuple(tuple(g) for g in generators)
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError("Cannot use %r as a permutation of %d points"
                                 % (g, degree))
        if elements is None:
            elements = _closure(degree, self.generators)
        self.elements = frozenset(elements)
        self.name = name
        self._key = tuple(sorted(self.elements))

    @property
    def order(self):
        return len(self.elements)

    @property
    def key(self):
        """Canonical key: the sorted element tuple."""
        return self._key

    @property
    def identity(self):
        return identity(self.degree)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self._key)

    def __contains__(self, g):
        return g in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __lt__(self, other):
        return self.elements < other.elements

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        if self.name:
            return '<PermGroup %s>' % self.name
        return '<PermGroup of order %d on %d points>' % (self.order, self.degree)

    def subgroup(self, generators, name=None):
        gens = [tuple(g) for g in generators]
        for g in gens:
            if g not in self.elements:
                raise SubgroupError("Cannot generate a subgroup of %r from %r"
                                    % (self, g))
        return PermGroup(self.degree, gens or [self.identity], name=name,
                         elements=_closure(self.degree, gens))

    def conjugate(self, g):
        """The subgroup g H g^-1."""
        gi = inverse(g)
        elements = frozenset(compose(compose(g, x), gi) for x in self.elements)
        gens = [compose(compose(g, x), gi) for x in self.generators]
        return PermGroup(self.degree, gens, elements=elements)

    def intersection(self, other):
        elements = self.elements & other.elements
        return PermGroup(self.degree, _generators_of(elements, self.degree),
                         elements=elements)

    def is_normal_in(self, other):
        return all(self.conjugate(g) == self for g in other.generators)

    def is_abelian(self):
        return all(compose(a, b) == compose(b, a)
                   for a in self.generators for b in self.generators)

    def exponent(self):
        out = 1
        for g in self.elements:
            n = element_order(g)
            out = out * n // _gcd(out, n)
        return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _generators_of(elements, degree):
    """A small generating set of a closed element set."""
    gens = []
    span = frozenset([identity(degree)])
    for g in sorted(elements, key=lambda x: (-element_order(x), x)):
        if g not in span:
            gens.append(g)
            span = _closure(degree, gens)
            if len(span) == len(elements):
                break
    return gens or [identity(degree)]


_GROUP_ID = re.compile(r'^\s*([CDKA])_?(\d+)\s*$', re.IGNORECASE)


def parse_group_id(catalog_id):
    """Split 'D_10' or 'd10' into ('D', 10)."""
    m = _GROUP_ID.match(str(catalog_id))
    if not m:
        raise UnknownGroupError("Cannot parse group id %r" % (catalog_id,))
    return m.group(1).upper(), int(m.group(2))


def _cyclic(n):
    if n == 1:
        return [identity(1)], 1
    return [tuple((i + 1) % n for i in range(n))], n


def _dihedral(p):
    rotation = tuple((i + 1) % p for i in range(p))
    reflection = tuple((-i) % p for i in range(p))
    return [rotation, reflection], p


def _alternating(n):
    gens = [tuple(g.array_form) for g in AlternatingGroup(n).generators]
    return gens, n


_KLEIN = [(1, 0, 3, 2), (2, 3, 0, 1)]


@cached
def make_group(catalog_id):
    """Permutation realization of a catalog group.

    Accepted ids: C<n> for n >= 1, K4, D<2p> for an odd prime p, A4, A5.
    """
    kind, n = parse_group_id(catalog_id)
    if kind == 'C' and n >= 1:
        gens, degree = _cyclic(n)
        expected = n
    elif kind == 'K' and n == 4:
        gens, degree = _KLEIN, 4
        expected = 4
    elif kind == 'D':
        if n % 2 or not isprime(n // 2) or n // 2 == 2:
            raise UnknownGroupError("Cannot build D%d: %d is not an odd prime"
                                    % (n, n // 2))
        gens, degree = _dihedral(n // 2)
        expected = n
    elif kind == 'A' and n in (4, 5):
        gens, degree = _alternating(n)
        expected = {4: 12, 5: 60}[n]
    else:
        raise UnknownGroupError("Cannot build unknown group %r" % (catalog_id,))
    name = '%s%d' % (kind, n)
    G = PermGroup(degree, gens, name=name)
    if G.order != expected:
        raise UnknownGroupError("Built %s with order %d instead of %d"
                                % (name, G.order, expected))
    return G


def structure_name(H):
    """Catalog-style name of a subgroup from its isomorphism type."""
    n = H.order
    if n == 1:
        return 'e'
    if any(element_order(g) == n for g in H.elements):
        return 'C%d' % n
    if n == 4:
        return 'K4'
    if n % 2 == 0 and isprime(n // 2) and n > 4:
        return 'D%d' % n
    if n == 12:
        return 'A4'
    if n == 60:
        return 'A5'
    return 'G%d' % n


class SubgroupClass:
    """A conjugacy class of subgroups with its Weyl group data.

    ``witnesses`` maps every member M to an element g with
    g * representative * g^-1 == M.
    """

    __slots__ = ('index', 'name', 'representative', 'members', 'witnesses',
                 'normalizer', 'weyl_order')

    def __init__(self, index, name, representative, members, witnesses, normalizer):
        self.index = index
        self.name = name
        self.representative = representative
        self.members = members
        self.witnesses = witnesses
        self.normalizer = normalizer
        self.weyl_order = normalizer.order // representative.order

    @property
    def order(self):
        return self.representative.order

    def __repr__(self):
        return '<SubgroupClass %s (order %d, %d members)>' % (
            self.name, self.order, len(self.members))


class SubgroupLattice:
    """Conjugacy classes of subgroups, ordered by size, with subconjugacy."""

    def __init__(self, group, classes, subconjugacy):
        self.group = group
        self.classes = classes
        self.subconjugacy = subconjugacy
        self._by_members = {}
        for c in classes:
            for m in c.members:
                self._by_members[m] = c
        self._by_name = {c.name: c for c in classes}

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, name):
        """Class lookup by name ('C2', 'H1') or by index."""
        if isinstance(name, int):
            return self.classes[name]
        try:
            return self._by_name[name]
        except KeyError:
            raise SubgroupError("Cannot find subgroup class %r in %r"
                                % (name, self.group)) from None

    def names(self):
        return [c.name for c in self.classes]

    def class_of(self, H):
        try:
            return self._by_members[H]
        except KeyError:
            raise SubgroupError("%r is not a subgroup of %r" % (H, self.group)) from None

    def witness(self, H):
        """(class, g) with g * class.representative * g^-1 == H."""
        c = self.class_of(H)
        return c, c.witnesses[H]

    def le(self, K, H):
        """Subconjugacy [K] <= [H] for classes or class indices."""
        k = K if isinstance(K, int) else K.index
        h = H if isinstance(H, int) else H.index
        return self.subconjugacy[k][h]

    def subgroups(self):
        """All subgroups, class by class."""
        return [m for c in self.classes for m in c.members]

    def __repr__(self):
        return '<SubgroupLattice of %r: %s>' % (self.group, ', '.join(self.names()))


def normalizer(G, H):
    elements = frozenset(g for g in G.elements if H.conjugate(g) == H)
    return PermGroup(G.degree, _generators_of(elements, G.degree), elements=elements)


def _all_subgroups(G):
    cyclic = {}
    for g in sorted(G.elements):
        C = G.subgroup([g])
        cyclic.setdefault(C, g)
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        nxt = []
        for A in frontier:
            for C, g in cyclic.items():
                if g in A.elements:
                    continue
                J = PermGroup(G.degree, A.generators + (g,),
                              elements=_closure(G.degree, [g] + list(A.generators),
                                                A.elements))
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return found


@cached
def subgroup_lattice(G):
    """Complete lattice of subgroup classes of G.

    Classes come in ascending (order, canonical key) order, so the trivial
    class is first and G itself is last.
    """
    if G.order > MAX_GROUP_ORDER:
        raise GroupTooLargeError("Cannot enumerate subgroups of a group of order %d "
                                 "(limit %d)" % (G.order, MAX_GROUP_ORDER))
    subgroups = _all_subgroups(G)
    elements = sorted(G.elements)
    seen = set()
    raw = []
    for H in sorted(subgroups, key=lambda S: (S.order, S.key)):
        if H in seen:
            continue
        conj = {}
        for g in elements:
            M = H.conjugate(g)
            if M not in conj:
                conj[M] = g
        seen.update(conj)
        raw.append((H, conj))
    raw.sort(key=lambda item: (item[0].order, item[0].key))
    names = _class_names([H for H, _ in raw])
    classes = []
    for index, ((H, conj), name) in enumerate(zip(raw, names)):
        members = tuple(sorted(conj, key=lambda M: M.key))
        H.name = name
        classes.append(SubgroupClass(index, name, H, members, conj, normalizer(G, H)))
    subconj = [[False] * len(classes) for _ in classes]
    for K in classes:
        for H in classes:
            if H.order % K.order:
                continue
            subconj[K.index][H.index] = any(M <= H.representative for M in K.members)
    logger.debug('subgroup lattice of %r: %d subgroups in %d classes',
                 G, len(subgroups), len(classes))
    return SubgroupLattice(G, classes, subconj)


def _class_names(reps):
    names = [structure_name(H) for H in reps]
    counts = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    seen = {}
    out = []
    for n in names:
        if counts[n] == 1:
            out.append(n)
            continue
        seen[n] = seen.get(n, 0) + 1
        # Several classes of order-2 subgroups only occur in K4.
        out.append('H%d' % seen[n] if n == 'C2' else '%s_%d' % (n, seen[n]))
    return out


def sylow(G, p):
    """The class of Sylow p-subgroups (the trivial class when p does not divide |G|)."""
    order = 1
    n = G.order
    while n % p == 0:
        n //= p
        order *= p
    lattice = subgroup_lattice(G)
    for c in lattice:
        if c.order == order:
            return c
    raise AssertionError("No subgroup of order %d in %r" % (order, G))


def omega_p(G, p):
    """Subgroup generated by the elements of order prime to p."""
    gens = [g for g in sorted(G.elements) if element_order(g) % p]
    H = G.subgroup(gens)
    assert H.is_normal_in(G), (G, p)
    index = G.order // H.order
    while index % p == 0:
        index //= p
    assert index == 1, (G, p)
    return H


def double_coset_orbits(G, P, H):
    """Decompose G/H into P-orbits.

    Returns a list of (Q, g) with Q = P n gHg^-1 the stabilizer of gH, one
    pair per orbit; the orbit of gH has size |P|/|Q|.
    """
    if not (P <= G and H <= G):
        raise SubgroupError("Cannot split %r/%r under %r" % (G, H, P))
    seen = set()
    out = []
    for g in sorted(G.elements):
        coset = frozenset(compose(g, h) for h in H.elements)
        if coset in seen:
            continue
        for x in P.elements:
            seen.add(frozenset(compose(x, y) for y in coset))
        out.append((P.intersection(H.conjugate(g)), g))
    return out


@cached
def embedding_witness(G, K, H):
    """An element w of G with w K w^-1 <= H, or None."""
    for w in sorted(G.elements):
        if K.conjugate(w) <= H:
            return w
    return None


def group_to_json(G):
    return {
        'name': G.name,
        'degree': G.degree,
        'order': G.order,
        'generators': [list(g) for g in G.generators],
    }


def lattice_to_json(lattice):
    return {
        'group': group_to_json(lattice.group),
        'classes': [{
            'name': c.name,
            'order': c.order,
            'members': len(c.members),
            'weyl_order': c.weyl_order,
            'representative': [list(g) for g in c.representative.generators],
        } for c in lattice],
        'subconjugacy': [[int(x) for x in row] for row in lattice.subconjugacy],
    }
