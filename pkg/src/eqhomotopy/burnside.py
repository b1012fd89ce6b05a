"""Burnside rings, tables of marks and their Mackey structure maps.

A BurnsideElt lives at a level L, an actual subgroup of some ambient
group, and has one S-rational coefficient per conjugacy class of
subgroups of L (the basis {L/K}).  Products go through the mark
embedding: multiply mark vectors pointwise, then back-substitute through
the triangular table of marks.
"""

import logging
from fractions import Fraction

from sympy import factorint

from ._cache import cached
from .errors import DenominatorError, SubgroupError
from .group_core import compose, double_coset_orbits, inverse, subgroup_lattice

__all__ = [
    'SRational',
    'TableOfMarks',
    'BurnsideElt',
    'marks',
    'mark',
    'mark_hom',
    'burnside_mul',
    'idempotents',
    'basis_element',
    'unit',
    'from_marks',
    'res',
    'tr',
    'conj',
    'product_by_orbits',
    'gset_marks',
    'double_coset_mark',
]

logger = logging.getLogger(__name__)


def _denominator_primes(q):
    return set(factorint(q.denominator)) if q.denominator > 1 else set()


class SRational:
    """A rational number whose denominator is supported on the primes S.

    Every arithmetic result is validated; a denominator that needs a prime
    outside S raises DenominatorError naming that prime.
    """

    __slots__ = ('value', 'primes')

    def __init__(self, value=0, primes=()):
        if isinstance(value, SRational):
            primes = frozenset(primes) | value.primes
            value = value.value
        self.value = Fraction(value)
        self.primes = frozenset(primes)
        bad = _denominator_primes(self.value) - self.primes
        if bad:
            p = min(bad)
            raise DenominatorError("Cannot represent %s with only %s inverted (needs %d)"
                                   % (self.value, sorted(self.primes), p), prime=p)

    def _lift(self, other):
        if isinstance(other, SRational):
            return other.value, self.primes | other.primes
        if isinstance(other, (int, Fraction)):
            return Fraction(other), self.primes
        return None, None

    def __add__(self, other):
        v, s = self._lift(other)
        if v is None:
            return NotImplemented
        return SRational(self.value + v, s)

    __radd__ = __add__

    def __sub__(self, other):
        v, s = self._lift(other)
        if v is None:
            return NotImplemented
        return SRational(self.value - v, s)

    def __rsub__(self, other):
        v, s = self._lift(other)
        if v is None:
            return NotImplemented
        return SRational(v - self.value, s)

    def __mul__(self, other):
        v, s = self._lift(other)
        if v is None:
            return NotImplemented
        return SRational(self.value * v, s)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v, s = self._lift(other)
        if v is None:
            return NotImplemented
        return SRational(self.value / v, s)

    def __neg__(self):
        return SRational(-self.value, self.primes)

    def __eq__(self, other):
        if isinstance(other, SRational):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return bool(self.value)

    @property
    def numerator(self):
        return self.value.numerator

    @property
    def denominator(self):
        return self.value.denominator

    def is_integral(self):
        return self.value.denominator == 1

    def __repr__(self):
        return 'SRational(%s, S=%s)' % (self.value, sorted(self.primes))

    def __str__(self):
        return str(self.value)


def mark(L, K, H):
    """|(L/H)^K| for subgroups K, H of L."""
    count = sum(1 for g in L.elements if K.conjugate(inverse(g)) <= H)
    return count // H.order


class TableOfMarks:
    """Marks s[K][H] = |(L/H)^K| over the subgroup classes of L."""

    __slots__ = ('group', 'lattice', 'matrix')

    def __init__(self, group, lattice, matrix):
        self.group = group
        self.lattice = lattice
        self.matrix = matrix

    def __getitem__(self, pair):
        K, H = pair
        return self.matrix[_index(self.lattice, K)][_index(self.lattice, H)]

    def format(self):
        names = self.lattice.names()
        width = max(max(len(n) for n in names),
                    max(len(str(x)) for row in self.matrix for x in row))
        lines = [' ' * width + ' ' + ' '.join(n.rjust(width) for n in names)]
        for name, row in zip(names, self.matrix):
            cells = ' '.join(str(x).rjust(width) for x in row)
            lines.append(name.rjust(width) + ' ' + cells)
        return '\n'.join(lines)

    def to_json(self):
        return {'group': self.group.name, 'classes': self.lattice.names(),
                'marks': [list(r) for r in self.matrix]}


def _index(lattice, K):
    if isinstance(K, int):
        return K
    if isinstance(K, str):
        return lattice[K].index
    if hasattr(K, 'index') and hasattr(K, 'members'):
        return K.index
    return lattice.class_of(K).index


@cached
def marks(L):
    """Table of marks of L, computed by counting fixed cosets."""
    lattice = subgroup_lattice(L)
    reps = [c.representative for c in lattice]
    matrix = [[mark(L, K, H) if lattice.le(k, h) else 0 for h, H in enumerate(reps)]
              for k, K in enumerate(reps)]
    return TableOfMarks(L, lattice, matrix)


class BurnsideElt:
    """An element of A(L) localized at the primes S.

    Usage::

        x = basis_element(L, K)           # {L/K}
        y = burnside_mul(x, x)
        mark_hom(y)
    """

    __slots__ = ('level', 'coefficients', 'primes')

    def __init__(self, level, coefficients, primes=()):
        lattice = subgroup_lattice(level)
        if len(coefficients) != len(lattice):
            raise TypeError("Cannot use %d coefficients at a level with %d classes"
                            % (len(coefficients), len(lattice)))
        self.level = level
        self.primes = frozenset(primes)
        self.coefficients = tuple(SRational(c, self.primes) for c in coefficients)

    @property
    def lattice(self):
        return subgroup_lattice(self.level)

    def coefficient(self, K):
        return self.coefficients[_index(self.lattice, K)]

    def _check(self, other):
        if not isinstance(other, BurnsideElt) or other.level != self.level:
            raise SubgroupError("Cannot combine Burnside elements at %r and %r"
                                % (self.level, getattr(other, 'level', other)))

    def __add__(self, other):
        self._check(other)
        return BurnsideElt(self.level, [a + b for a, b in zip(self.coefficients,
                                                              other.coefficients)],
                           self.primes | other.primes)

    def __sub__(self, other):
        self._check(other)
        return BurnsideElt(self.level, [a - b for a, b in zip(self.coefficients,
                                                              other.coefficients)],
                           self.primes | other.primes)

    def __neg__(self):
        return BurnsideElt(self.level, [-a for a in self.coefficients], self.primes)

    def scale(self, q):
        return BurnsideElt(self.level, [a * q for a in self.coefficients],
                           self.primes | getattr(q, 'primes', frozenset()))

    def __mul__(self, other):
        if isinstance(other, BurnsideElt):
            return burnside_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, BurnsideElt):
            return NotImplemented
        return self.level == other.level and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.level, self.coefficients))

    def is_integral(self):
        return all(c.is_integral() for c in self.coefficients)

    def support(self):
        return [c for c, x in zip(self.lattice, self.coefficients) if x]

    def __repr__(self):
        terms = ['%s{%s}' % ('' if x == 1 else '%s*' % x, c.name)
                 for c, x in zip(self.lattice, self.coefficients) if x]
        return '<BurnsideElt %s>' % (' + '.join(terms) or '0')


def basis_element(L, K, primes=()):
    """The class {L/K} of the L-set L/K."""
    lattice = subgroup_lattice(L)
    k = _index(lattice, K)
    return BurnsideElt(L, [int(i == k) for i in range(len(lattice))], primes)


def unit(L, primes=()):
    return basis_element(L, len(subgroup_lattice(L)) - 1, primes)


def mark_hom(x):
    """Mark vector chi(x)_K = sum_H x_H s(K, H)."""
    table = marks(x.level).matrix
    n = len(table)
    return [sum((x.coefficients[h] * table[k][h] for h in range(n) if table[k][h]),
                SRational(0, x.primes))
            for k in range(n)]


def from_marks(L, values, primes=()):
    """The element of A(L)[S^-1] with the given mark vector."""
    table = marks(L).matrix
    n = len(table)
    coeffs = [None] * n
    for k in reversed(range(n)):
        acc = SRational(values[k], primes)
        for h in range(k + 1, n):
            if table[k][h]:
                acc = acc - coeffs[h] * table[k][h]
        coeffs[k] = acc / table[k][k]
    return BurnsideElt(L, coeffs, primes)


def burnside_mul(a, b):
    """Product in A(L): pointwise marks, then triangular back-substitution."""
    a._check(b)
    primes = a.primes | b.primes
    values = [x * y for x, y in zip(mark_hom(a), mark_hom(b))]
    return from_marks(a.level, values, primes)


def idempotents(L, primes):
    """Primitive idempotents e_H of A(L)[S^-1], keyed by class name."""
    primes = frozenset(primes)
    missing = set(factorint(L.order)) - primes
    if missing:
        p = min(missing)
        raise DenominatorError("Cannot split A(%r) without inverting %d" % (L, p),
                               prime=p)
    lattice = subgroup_lattice(L)
    n = len(lattice)
    return {c.name: from_marks(L, [int(i == c.index) for i in range(n)], primes)
            for c in lattice}


def tr(H, x):
    """Transfer A(L) -> A(H): {L/K} goes to {H/K}."""
    L = x.level
    if not L <= H:
        raise SubgroupError("Cannot transfer from %r to %r" % (L, H))
    target = subgroup_lattice(H)
    coeffs = [SRational(0, x.primes)] * len(target)
    for c, v in zip(x.lattice, x.coefficients):
        if v:
            i = target.class_of(c.representative).index
            coeffs[i] = coeffs[i] + v
    return BurnsideElt(H, coeffs, x.primes)


def res(L, x):
    """Restriction A(H) -> A(L): decompose H/K into L-orbits."""
    H = x.level
    if not L <= H:
        raise SubgroupError("Cannot restrict from %r to %r" % (H, L))
    target = subgroup_lattice(L)
    coeffs = [SRational(0, x.primes)] * len(target)
    for c, v in zip(x.lattice, x.coefficients):
        if not v:
            continue
        for Q, _ in double_coset_orbits(H, L, c.representative):
            i = target.class_of(Q).index
            coeffs[i] = coeffs[i] + v
    return BurnsideElt(L, coeffs, x.primes)


def conj(g, x):
    """Conjugation A(L) -> A(gLg^-1)."""
    L = x.level
    gL = L.conjugate(g)
    target = subgroup_lattice(gL)
    coeffs = [SRational(0, x.primes)] * len(target)
    for c, v in zip(x.lattice, x.coefficients):
        if v:
            i = target.class_of(c.representative.conjugate(g)).index
            coeffs[i] = coeffs[i] + v
    return BurnsideElt(gL, coeffs, x.primes)


def _cosets(L, K):
    seen = {}
    for g in sorted(L.elements):
        coset = frozenset(compose(g, k) for k in K.elements)
        seen.setdefault(coset, g)
    return list(seen.items())


def product_by_orbits(a, b):
    """Product of two integral elements by decomposing L/A x L/B into orbits.

    Independent of the table of marks; used to check burnside_mul.
    """
    a._check(b)
    if not (a.is_integral() and b.is_integral()):
        raise ValueError("Cannot multiply non-integral elements as L-sets")
    L = a.level
    lattice = subgroup_lattice(L)
    coeffs = [0] * len(lattice)
    for ca, va in zip(lattice, a.coefficients):
        if not va:
            continue
        for cb, vb in zip(lattice, b.coefficients):
            if not vb:
                continue
            left = _cosets(L, ca.representative)
            right = _cosets(L, cb.representative)
            seen = set()
            for (x, gx) in left:
                for (y, gy) in right:
                    if (x, y) in seen:
                        continue
                    for g in L.elements:
                        seen.add((frozenset(compose(g, u) for u in x),
                                  frozenset(compose(g, u) for u in y)))
                    stab = ca.representative.conjugate(gx).intersection(
                        cb.representative.conjugate(gy))
                    coeffs[lattice.class_of(stab).index] += int(va.value * vb.value)
    return BurnsideElt(L, coeffs, a.primes | b.primes)


def gset_marks(L, points, act):
    """Fixed-point counts |X^K| over the classes of L for an explicit L-set.

    ``act(g, x)`` gives the image of the point x under g.
    """
    lattice = subgroup_lattice(L)
    return [sum(1 for x in points
                if all(act(g, x) == x for g in c.representative.generators))
            for c in lattice]


def double_coset_mark(H, L, J, K):
    """|(H/J)^K| computed as a sum over the K-fixed cosets hL of H/L.

    J <= L <= H and K <= H; each fixed coset hL contributes the mark of
    h^-1 K h on L/J.
    """
    total = 0
    for coset, h in _cosets(H, L):
        Kh = K.conjugate(inverse(h))
        if Kh <= L:
            total += mark(L, Kh, J)
    return total
