"""Families of subgroups, the splitting criterion and the functors M_F, N_F.

A Family is a set of subgroup classes of G closed under subconjugacy.
The primes that must be inverted to split along F are found by scanning
normal pairs H < J with H in F and J outside F; the coefficients c_H of
the splitting idempotent are solved top-down through the table of marks.
"""

import itertools
import logging
from fractions import Fraction

from sympy import factorint

from .burnside import (SRational, basis_element, conj, from_marks, idempotents,
                       mark_hom, marks, res, tr)
from .errors import DenominatorError, FamilyError, Report
from .group_core import subgroup_lattice

__all__ = [
    'MAX_FAMILY_CLASSES',
    'Family',
    'family_not_containing',
    'all_families',
    'required_inverted_primes',
    'solve_cH',
    'coefficient_primes',
    'MFunctor0',
    'mf_functor',
    'complement',
    'lemma_witness',
]

logger = logging.getLogger(__name__)

MAX_FAMILY_CLASSES = 12


class Family:
    """A subconjugacy-closed set of subgroup classes of G."""

    __slots__ = ('group', 'members')

    def __init__(self, group, members):
        lattice = subgroup_lattice(group)
        idx = set()
        for m in members:
            idx.add(m if isinstance(m, int) else lattice[m].index)
        for h in idx:
            for k in range(len(lattice)):
                if lattice.le(k, h) and k not in idx:
                    raise FamilyError("Cannot form a family containing %s but not %s"
                                      % (lattice[h].name, lattice[k].name))
        self.group = group
        self.members = frozenset(idx)

    @property
    def lattice(self):
        return subgroup_lattice(self.group)

    def __contains__(self, item):
        if isinstance(item, int):
            return item in self.members
        if isinstance(item, str):
            return self.lattice[item].index in self.members
        if hasattr(item, 'members'):
            return item.index in self.members
        return self.lattice.class_of(item).index in self.members

    def classes(self):
        return [c for c in self.lattice if c.index in self.members]

    def names(self):
        return [c.name for c in self.classes()]

    def __len__(self):
        return len(self.members)

    def __or__(self, other):
        self._check(other)
        return Family(self.group, self.members | other.members)

    def __and__(self, other):
        self._check(other)
        return Family(self.group, self.members & other.members)

    def _check(self, other):
        if not isinstance(other, Family) or other.group != self.group:
            raise FamilyError("Cannot combine families of different groups")

    def __eq__(self, other):
        if not isinstance(other, Family):
            return NotImplemented
        return self.group == other.group and self.members == other.members

    def __hash__(self):
        return hash((self.group, self.members))

    def __repr__(self):
        return '<Family {%s} of %r>' % (', '.join(self.names()), self.group)


def is_family(group, members):
    try:
        Family(group, members)
    except FamilyError:
        return False
    return True


def family_not_containing(G, K):
    """Classes [H] of G with no member containing a conjugate of K."""
    lattice = subgroup_lattice(G)
    k = lattice.class_of(K).index if not isinstance(K, (int, str)) else lattice[K].index
    return Family(G, [c.index for c in lattice if not lattice.le(k, c.index)])


def all_families(G):
    lattice = subgroup_lattice(G)
    n = len(lattice)
    if n > MAX_FAMILY_CLASSES:
        raise FamilyError("Cannot enumerate families over %d classes (limit %d)"
                          % (n, MAX_FAMILY_CLASSES))
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        members = [i for i in range(n) if bits[i]]
        if is_family(G, members):
            out.append(Family(G, members))
    out.sort(key=lambda F: (len(F), sorted(F.members)))
    return out


def complement(F):
    """Classes outside F: the index set of N_F."""
    return [c for c in F.lattice if c.index not in F.members]


def _prime_power_base(n):
    f = factorint(n)
    if len(f) == 1:
        return next(iter(f))
    return None


def required_inverted_primes(F):
    """Primes p with H normal in J, H in F, J not in F and |J/H| a power of p."""
    lattice = F.lattice
    primes = set()
    for c in lattice:
        if c.index in F.members:
            continue
        J = c.representative
        for H in subgroup_lattice(J).subgroups():
            if H.order == J.order or lattice.class_of(H).index not in F.members:
                continue
            p = _prime_power_base(J.order // H.order)
            if p is not None and p not in primes and H.is_normal_in(J):
                primes.add(p)
    return primes


def solve_cH(F, primes=()):
    """Coefficients c_H, H in F, with sum_H c_H s(K, H) = 1 for all K in F.

    Solved from the largest class down.  Raises DenominatorError naming the
    first prime outside S that a coefficient needs.
    """
    table = marks(F.group).matrix
    idx = sorted(F.members)
    values = {}
    for k in reversed(idx):
        acc = Fraction(1)
        for h in idx:
            if h > k and table[k][h]:
                acc -= values[h] * table[k][h]
        values[k] = acc / table[k][k]
    lattice = F.lattice
    out = {}
    for k in idx:
        try:
            out[lattice[k].name] = SRational(values[k], primes)
        except DenominatorError as exc:
            raise DenominatorError("Cannot solve c_%s = %s over S=%s"
                                   % (lattice[k].name, values[k], sorted(primes)),
                                   prime=exc.prime) from None
    logger.debug('c_H for %r: %s', F, {k: str(v) for k, v in out.items()})
    return out


def coefficient_primes(coefficients):
    """Primes occurring in the denominators of a c_H solution."""
    out = set()
    for q in coefficients.values():
        if q.denominator > 1:
            out |= set(factorint(q.denominator))
    return out


def lemma_witness(F, H, p):
    """A class L in F whose mark chi_H(G/L) is prime to p, or None."""
    table = marks(F.group)
    h = table.lattice[H].index if isinstance(H, str) else H
    for L in F.classes():
        if table.matrix[h][L.index] % p:
            return L
    return None


class MFunctor0:
    """The sub-Mackey functor M_F of the Burnside functor and its complement N_F.

    M_F(L) is spanned by {L/K} with K in F; after inverting S it has the
    complement N_F(L) spanned by the idempotents e_K of A(L), K not in F.
    """

    def __init__(self, family, primes=()):
        self.family = family
        self.primes = frozenset(primes)

    @property
    def group(self):
        return self.family.group

    def levels(self):
        return [c.representative for c in self.family.lattice]

    def _in_family(self, K):
        return self.family.lattice.class_of(K).index in self.family.members

    def generators(self, L):
        return [basis_element(L, c.index, self.primes) for c in subgroup_lattice(L)
                if self._in_family(c.representative)]

    def complement_generators(self, L):
        missing = set(factorint(L.order)) - self.primes
        if missing:
            p = min(missing)
            raise DenominatorError("Cannot build N_F at %r without inverting %d" % (L, p),
                                   prime=p)
        e = idempotents(L, self.primes)
        return [e[c.name] for c in subgroup_lattice(L)
                if not self._in_family(c.representative)]

    def in_m(self, x):
        return all(not v or self._in_family(c.representative)
                   for c, v in zip(x.lattice, x.coefficients))

    def in_n(self, x):
        return all(not v or not self._in_family(c.representative)
                   for c, v in zip(x.lattice, mark_hom(x)))

    def decompose(self, x):
        """(m, n) with x = m + n, m in M_F and n in N_F."""
        chi = mark_hom(x)
        kept = [v if self._in_family(c.representative) else 0
                for c, v in zip(x.lattice, chi)]
        m = from_marks(x.level, kept, self.primes | x.primes)
        return m, x - m

    def check_closure(self):
        """Res, tr and conj of generators stay inside M_F and N_F."""
        report = Report('closure of M_F for %r' % (self.family,))
        G = self.group
        subgroups = subgroup_lattice(G).subgroups()
        full = set(factorint(G.order)) <= self.primes
        for L in subgroups:
            gens = [(x, self.in_m) for x in self.generators(L)]
            if full:
                gens += [(x, self.in_n) for x in self.complement_generators(L)]
            for x, inside in gens:
                for K in subgroup_lattice(L).subgroups():
                    if K != L:
                        report.check(inside(res(K, x)), 'res to %r of %r', K, x)
                for H in subgroups:
                    if L < H:
                        report.check(inside(tr(H, x)), 'tr to %r of %r', H, x)
                for g in G.generators:
                    report.check(inside(conj(g, x)), 'conj by %r of %r', g, x)
        return report

    def __repr__(self):
        return '<MFunctor0 %r S=%s>' % (self.family, sorted(self.primes))


def mf_functor(F, primes=()):
    return MFunctor0(F, primes)
