"""Mackey functors with explicit presentations at every level.

A MackeyFunctor lives on the conjugacy classes of subgroups of G.  Each
level is a presented group (a list of cyclic orders, 0 for Z), and
restriction, transfer and Weyl conjugation are integer matrices in those
coordinates.  Maps between classes are defined through the lattice
representatives: for [K] <= [H] with a fixed witness a (a K a^-1 <= H),

    res^H_K = c_{a^-1} o res^H_{aKa^-1}        tr^H_K = tr^H_{aKa^-1} o c_a

For pi_V(HZ) every level is assembled one prime at a time from stable
elements in a Sylow model, then glued: torsion by primary components,
the free part (rank at most one) by its index under restriction to the
trivial subgroup.
"""

import collections
import itertools
import logging
from fractions import Fraction

from sympy import factorint, mod_inverse

from .abelian import FGAbelianGroup, IntMatrix, map_cokernel, map_kernel
from .burnside import basis_element, conj as burnside_conj, res as burnside_res, \
    tr as burnside_tr
from .errors import GlueError, OracleMismatchError, Report, SubgroupError
from .group_core import (compose, embedding_witness, group_to_json, inverse, make_group,
                         double_coset_orbits, subgroup_lattice, sylow)
from .reps import VirtualRep, format_grading, parse_grading
from .splitter import sylow_model

__all__ = [
    'MackeyFunctor',
    'LocalMackey',
    'ConstantFunctor',
    'BurnsideFunctor',
    'assemble',
    'from_subgroup_functor',
    'constant_functor',
    'dual_constant_functor',
    'burnside_functor',
    'zero_functor',
    'check_cohomological',
    'check_functoriality',
    'check_naturality',
    'check_weyl',
    'check_double_coset',
    'check_sylow_isomorphism',
    'check_transfer_oracle',
    'check_all',
    'top_level_via_transfers',
    'equivalent_up_to_signs',
    'lewis_diagram',
]

logger = logging.getLogger(__name__)


def _reduce(matrix, orders):
    return IntMatrix([[x % d if d else x for x in row]
                      for row, d in zip(matrix.rows, orders)], matrix.ncols)


def _matrix(columns, nrows):
    if not columns:
        return IntMatrix.zeros(nrows, 0)
    return IntMatrix.from_columns(columns, nrows)


def _group(orders):
    return FGAbelianGroup(list(orders).count(0), [d for d in orders if d])


class MackeyFunctor:
    """A Mackey functor for G given on subgroup class representatives.

    ``levels`` maps class names to tuples of cyclic orders; ``res`` is keyed
    by (H, K) and ``tr`` by (K, H) for [K] < [H]; ``conj`` by (H, g) for
    generators g of the normalizer of the representative of H.
    """

    def __init__(self, group, levels, res, tr, conj, name=None, local=None):
        self.group = group
        self.lattice = subgroup_lattice(group)
        self.levels = {k: tuple(v) for k, v in levels.items()}
        self._res = dict(res)
        self._tr = dict(tr)
        self._conj = dict(conj)
        self.name = name
        self._local = local

    def names(self):
        return self.lattice.names()

    @property
    def top(self):
        return self.lattice.classes[-1].name

    def orders(self, H):
        return self.levels[H]

    def value(self, H):
        return _group(self.levels[H])

    def index(self, K, H):
        return self.lattice[H].order // self.lattice[K].order

    def pairs(self):
        """Comparable pairs (K, H) with [K] < [H], in lattice order."""
        out = []
        for c in self.lattice:
            for d in self.lattice:
                if c.index != d.index and self.lattice.le(c, d):
                    out.append((c.name, d.name))
        return out

    def res(self, H, K):
        if H == K:
            return IntMatrix.identity(len(self.levels[H]))
        try:
            return self._res[(H, K)]
        except KeyError:
            raise SubgroupError("Cannot restrict from %s to %s" % (H, K)) from None

    def tr(self, K, H):
        if H == K:
            return IntMatrix.identity(len(self.levels[H]))
        try:
            return self._tr[(K, H)]
        except KeyError:
            raise SubgroupError("Cannot transfer from %s to %s" % (K, H)) from None

    def conj(self, H, g):
        return self._conj[(H, g)]

    def weyl_generators(self, H):
        return sorted(g for name, g in self._conj if name == H)

    def local(self, p):
        """The p-local data on subgroups of a Sylow p-subgroup."""
        if self._local is None:
            raise SubgroupError("No subgroup-level data for %r" % (self,))
        return self._local(p)

    def to_json(self):
        return {
            'name': self.name,
            'group': group_to_json(self.group),
            'levels': [{'name': n, 'orders': list(self.levels[n]),
                        'group': self.value(n).to_json()} for n in self.names()],
            'res': [{'from': H, 'to': K, 'matrix': self.res(H, K).tolist()}
                    for K, H in self.pairs()],
            'tr': [{'from': K, 'to': H, 'matrix': self.tr(K, H).tolist()}
                   for K, H in self.pairs()],
            'conj': [{'level': H, 'element': list(g),
                      'matrix': self._conj[(H, g)].tolist()}
                     for H in self.names() for g in self.weyl_generators(H)],
        }

    def __repr__(self):
        return '<MackeyFunctor %s on %r>' % (self.name or '?', self.group)


# Templates on actual subgroups.

class ConstantFunctor:
    """Z at every subgroup; index transfers, or index restrictions when ``dual``."""

    def __init__(self, group, dual=False):
        self.group = group
        self.dual = dual

    def orders(self, Q):
        return [0]

    def res(self, Q, K):
        return IntMatrix([[Q.order // K.order if self.dual else 1]], 1)

    def tr(self, K, Q):
        return IntMatrix([[1 if self.dual else Q.order // K.order]], 1)

    def conj(self, g, Q):
        return IntMatrix.identity(1)


class BurnsideFunctor:
    """The Burnside ring functor Q -> A(Q) on the basis {Q/K}."""

    def __init__(self, group):
        self.group = group

    def orders(self, Q):
        return [0] * len(subgroup_lattice(Q))

    @staticmethod
    def _columns(elements):
        return [[int(c.numerator) for c in x.coefficients] for x in elements]

    def res(self, Q, K):
        cols = self._columns(burnside_res(K, basis_element(Q, i))
                             for i in range(len(subgroup_lattice(Q))))
        return _matrix(cols, len(subgroup_lattice(K)))

    def tr(self, K, Q):
        cols = self._columns(burnside_tr(Q, basis_element(K, i))
                             for i in range(len(subgroup_lattice(K))))
        return _matrix(cols, len(subgroup_lattice(Q)))

    def conj(self, g, Q):
        cols = self._columns(burnside_conj(g, basis_element(Q, i))
                             for i in range(len(subgroup_lattice(Q))))
        return _matrix(cols, len(subgroup_lattice(Q.conjugate(g))))


class _AtSylow:
    """A subgroup functor seen from a Sylow p-subgroup."""

    def __init__(self, functor, p):
        self.functor = functor
        self.group = functor.group
        self.prime = p
        self.sylow = sylow(functor.group, p).representative

    def orders(self, Q):
        return self.functor.orders(Q)

    def res(self, Q, K):
        return self.functor.res(Q, K)

    def tr(self, K, Q):
        return self.functor.tr(K, Q)

    def conj(self, g, Q):
        return self.functor.conj(g, Q)


def from_subgroup_functor(F, name=None):
    """Restrict a functor on actual subgroups to the class representatives."""
    G = F.group
    lattice = subgroup_lattice(G)
    levels = {c.name: F.orders(c.representative) for c in lattice}
    res, tr, conj = {}, {}, {}
    for c in lattice:
        for d in lattice:
            if c.index == d.index or not lattice.le(c, d):
                continue
            K, H = c.representative, d.representative
            a = embedding_witness(G, K, H)
            Ka = K.conjugate(a)
            res[(d.name, c.name)] = F.conj(inverse(a), Ka) * F.res(H, Ka)
            tr[(c.name, d.name)] = F.tr(Ka, H) * F.conj(a, K)
    for c in lattice:
        for g in c.normalizer.generators:
            conj[(c.name, g)] = F.conj(g, c.representative)
    return MackeyFunctor(G, levels, res, tr, conj, name=name,
                         local=lambda p: _AtSylow(F, p))


def constant_functor(G):
    return from_subgroup_functor(ConstantFunctor(G), name='Z')


def dual_constant_functor(G):
    return from_subgroup_functor(ConstantFunctor(G, dual=True), name='Z^')


def burnside_functor(G):
    return from_subgroup_functor(BurnsideFunctor(G), name='A')


def zero_functor(G):
    lattice = subgroup_lattice(G)
    levels = {c.name: () for c in lattice}
    res = {}
    tr = {}
    for c in lattice:
        for d in lattice:
            if c.index != d.index and lattice.le(c, d):
                res[(d.name, c.name)] = IntMatrix.zeros(0, 0)
                tr[(c.name, d.name)] = IntMatrix.zeros(0, 0)
    conj = {(c.name, g): IntMatrix.zeros(0, 0) for c in lattice
            for g in c.normalizer.generators}
    return MackeyFunctor(G, levels, res, tr, conj, name='0')


# The p-local pieces of pi_V(HZ).

def _p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


class LocalMackey:
    """p-local levels and maps of pi_V(HZ) over the class representatives.

    Each class is computed at a conjugate H* of its representative whose
    intersection with the Sylow subgroup P is a Sylow subgroup of H*;
    the transport element w_H (H* = w_H H w_H^-1) is folded into every map.
    """

    def __init__(self, model):
        self.model = model
        self.group = model.group
        self.prime = model.prime
        self.lattice = subgroup_lattice(model.group)
        self._levels = {}
        self._placed = {}

    def placed(self, name):
        """(H*, w_H) for a class name."""
        try:
            return self._placed[name]
        except KeyError:
            pass
        c = self.lattice[name]
        P = self.model.sylow
        for M in c.members:
            if M.intersection(P).order == _p_part(M.order, self.prime):
                out = self._placed[name] = (M, c.witnesses[M])
                return out
        raise SubgroupError("No member of %s meets %r in a Sylow subgroup" % (name, P))

    def level(self, name):
        try:
            return self._levels[name]
        except KeyError:
            pass
        H, _ = self.placed(name)
        lev = self._levels[name] = self.model.stable_elements(H)
        return lev

    def orders(self, name):
        return list(self.level(name).orders)

    def _refine(self, big, small):
        """(H*, K*, g) with g K* g^-1 <= H* and g Q_K g^-1 <= Q_H."""
        G = self.group
        H, wH = self.placed(big)
        K, wK = self.placed(small)
        base = embedding_witness(G, self.lattice[small].representative,
                                 self.lattice[big].representative)
        a = compose(compose(wH, base), inverse(wK))
        QH = self.level(big).sylow
        QK = self.level(small).sylow.conjugate(a)
        for h in sorted(H.elements):
            if QK.conjugate(h) <= QH:
                return H, K, compose(h, a)
        raise SubgroupError("Cannot place a Sylow subgroup of %s inside %s"
                            % (small, big))

    def res(self, big, small):
        model = self.model
        _, _, g = self._refine(big, small)
        source = self.level(big)
        target = self.level(small)
        Q1 = target.sylow.conjugate(g)
        down = model.conj(inverse(g), Q1) * model.res(source.sylow, Q1)
        cols = [target.coordinates(down.apply(w)) for w in source.witnesses]
        return _matrix(cols, len(target.orders))

    def tr(self, small, big):
        model = self.model
        H, K, g = self._refine(big, small)
        source = self.level(small)
        target = self.level(big)
        P2 = target.sylow
        L = K.conjugate(g)
        P1 = source.sylow.conjugate(g)
        up = model.conj(g, source.sylow)
        terms = []
        for Q, x in double_coset_orbits(H, P2, L):
            for l in sorted(L.elements):
                y = compose(x, l)
                Ki = Q.conjugate(inverse(y))
                if Ki <= P1:
                    break
            else:
                raise SubgroupError("Cannot conjugate %r into %r inside %r" % (Q, P1, L))
            terms.append(model.tr(Q, P2) * model.conj(y, Ki) * model.res(P1, Ki))
        n = len(model.value(P2).generators)
        total = IntMatrix.zeros(n, len(model.value(P1).generators))
        for t in terms:
            total = total + t
        total = total * up
        cols = [target.coordinates(total.apply(w)) for w in source.witnesses]
        return _matrix(cols, len(target.orders))

    def conj(self, name, n):
        H, wH = self.placed(name)
        lev = self.level(name)
        Q = lev.sylow
        m = compose(compose(wH, n), inverse(wH))
        for h in sorted(H.elements):
            g = compose(h, m)
            if Q.conjugate(g) == Q:
                break
        else:
            raise SubgroupError("Cannot normalize %r inside %r" % (Q, H))
        c = self.model.conj(g, Q)
        cols = [lev.coordinates(c.apply(w)) for w in lev.witnesses]
        return _matrix(cols, len(lev.orders))

    def __repr__(self):
        return '<LocalMackey %r at p=%d>' % (self.group, self.prime)


class _Layout:
    """Glued coordinates of one level: torsion slots prime by prime, then Z."""

    def __init__(self, name, locals_):
        self.name = name
        self.torsion = []
        self.free = {}
        ranks = set()
        for p, loc in locals_.items():
            orders = loc.orders(name)
            for i, d in enumerate(orders):
                if d:
                    self.torsion.append((p, i, d))
            zeros = [i for i, d in enumerate(orders) if d == 0]
            ranks.add(len(zeros))
            if zeros:
                self.free[p] = zeros[0]
        if len(ranks) > 1:
            raise GlueError("Cannot glue level %s: p-local ranks %s"
                            % (name, sorted(ranks)))
        self.rank = ranks.pop() if ranks else 0
        if self.rank > 1:
            raise GlueError("Cannot glue level %s of free rank %d" % (name, self.rank))
        self.units = {}

    @property
    def orders(self):
        return tuple(d for _, _, d in self.torsion) + (0,) * self.rank

    def __len__(self):
        return len(self.torsion) + self.rank


def _valuation(n, p):
    n = abs(n)
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _mod(q, d):
    q = Fraction(q)
    return q.numerator * mod_inverse(q.denominator, d) % d


def _glue_matrix(source, target, local_matrices):
    """Glue p-local matrices of a map source -> target (both _Layouts)."""
    rows = [[0] * len(source) for _ in range(len(target))]
    src_free = len(source.torsion) if source.rank else None
    tgt_free = len(target.torsion) if target.rank else None
    for i, (p, a, d) in enumerate(target.torsion):
        F = local_matrices[p]
        for j, (q, b, _) in enumerate(source.torsion):
            if q == p:
                rows[i][j] = F.rows[a][b] % d
        if src_free is not None:
            rows[i][src_free] = _mod(source.units[p] * F.rows[a][source.free[p]], d)
    if tgt_free is not None:
        for j, (q, b, _) in enumerate(source.torsion):
            if local_matrices[q].rows[target.free[q]][b]:
                raise GlueError("Cannot glue: torsion of %s maps to the free part of %s"
                                % (source.name, target.name))
        if src_free is not None:
            values = set()
            for p, F in local_matrices.items():
                x = F.rows[target.free[p]][source.free[p]]
                values.add(source.units[p] * x / target.units[p])
            if len(values) != 1:
                raise GlueError("Cannot glue the free part of %s -> %s: %s"
                                % (source.name, target.name, sorted(values)))
            v = values.pop()
            if v.denominator != 1:
                raise GlueError("Cannot glue the free part of %s -> %s: %s"
                                % (source.name, target.name, v))
            rows[tgt_free][src_free] = int(v)
    return IntMatrix(rows, len(source))


def assemble(G, V, check=True):
    """The Mackey functor pi_V(HZ) for G, glued from its p-local pieces."""
    if isinstance(G, str):
        G = make_group(G)
    if isinstance(V, str):
        V = parse_grading(G, V)
    assert isinstance(V, VirtualRep), repr(V)
    lattice = subgroup_lattice(G)
    name = 'pi_{%s}' % format_grading(V)
    primes = sorted(factorint(G.order))
    if not primes:
        return MackeyFunctor(G, {lattice[0].name: (0,) if V.dim == 0 else ()}, {}, {}, {},
                             name=name)
    locals_ = {p: LocalMackey(sylow_model(G, V, p)) for p in primes}
    layouts = {c.name: _Layout(c.name, locals_) for c in lattice}
    bottom = lattice[0].name
    for c in lattice:
        lay = layouts[c.name]
        if not lay.rank:
            continue
        factors = {}
        for p, loc in locals_.items():
            if c.name == bottom:
                factors[p] = 1
            else:
                F = loc.res(c.name, bottom)
                factors[p] = F.rows[layouts[bottom].free[p]][lay.free[p]]
        m = 1
        for p, x in factors.items():
            m *= p ** _valuation(x, p)
        lay.units = {p: Fraction(m, x) for p, x in factors.items()}
        logger.debug('%s: free level %s has index %d over the trivial subgroup',
                     name, c.name, m)
    res, tr, conj = {}, {}, {}
    for c in lattice:
        for d in lattice:
            if c.index == d.index or not lattice.le(c, d):
                continue
            res[(d.name, c.name)] = _glue_matrix(
                layouts[d.name], layouts[c.name],
                {p: loc.res(d.name, c.name) for p, loc in locals_.items()})
            tr[(c.name, d.name)] = _glue_matrix(
                layouts[c.name], layouts[d.name],
                {p: loc.tr(c.name, d.name) for p, loc in locals_.items()})
    for c in lattice:
        for g in c.normalizer.generators:
            conj[(c.name, g)] = _glue_matrix(
                layouts[c.name], layouts[c.name],
                {p: loc.conj(c.name, g) for p, loc in locals_.items()})
    levels = {n: lay.orders for n, lay in layouts.items()}
    M = MackeyFunctor(G, levels, res, tr, conj, name=name,
                      local=lambda p: sylow_model(G, V, p))
    logger.info('assembled %s on %s: %s', name, G.name or G.order,
                ', '.join('%s=%s' % (n, M.value(n)) for n in M.names()))
    if check:
        report = check_cohomological(M)
        if not report.ok:
            raise OracleMismatchError("Assembled %s is not cohomological: %s"
                                      % (name, '; '.join(report.issues)))
    return M


# Checks.

def check_cohomological(M):
    """tr^H_K o res^H_K is multiplication by [H:K] for every comparable pair."""
    report = Report('cohomological law for %r' % (M,))
    for K, H in M.pairs():
        orders = M.orders(H)
        lhs = _reduce(M.tr(K, H) * M.res(H, K), orders)
        rhs = _reduce(IntMatrix.identity(len(orders)) * M.index(K, H), orders)
        report.check(lhs == rhs, 'tr o res at (%s <= %s) is %s, expected x%d',
                     K, H, lhs.tolist(), M.index(K, H))
    return report


def _weyl_set(M, H):
    """All matrices of the Weyl action on level H, as reduced row tuples."""
    orders = M.orders(H)
    n = len(orders)
    start = _reduce(IntMatrix.identity(n), orders)
    gens = [_reduce(M.conj(H, g), orders) for g in M.weyl_generators(H)]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _reduce(g * x, orders)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def check_weyl(M):
    """Elements of the representative act trivially; the action factors through W."""
    report = Report('Weyl actions of %r' % (M,))
    for c in M.lattice:
        orders = M.orders(c.name)
        ident = _reduce(IntMatrix.identity(len(orders)), orders)
        for g in M.weyl_generators(c.name):
            if g in c.representative:
                report.check(_reduce(M.conj(c.name, g), orders) == ident,
                             'c_g for %r in %s is not the identity', g, c.name)
        size = len(_weyl_set(M, c.name))
        report.check(c.weyl_order % size == 0, 'Weyl action on %s has %d elements, '
                     'not dividing %d', c.name, size, c.weyl_order)
    return report


def check_functoriality(M):
    """res and tr compose along chains K < H < L, up to the Weyl action at K."""
    report = Report('functoriality of %r' % (M,))
    pairs = set(M.pairs())
    for K, H in M.pairs():
        for L in M.names():
            if (H, L) not in pairs:
                continue
            orders = M.orders(K)
            weyl = _weyl_set(M, K)
            comp = _reduce(M.res(H, K) * M.res(L, H), orders)
            direct = M.res(L, K)
            report.check(any(_reduce(w * direct, orders) == comp for w in weyl),
                         'res %s -> %s -> %s differs from res %s -> %s', L, H, K, L, K)
            top = M.orders(L)
            comp = _reduce(M.tr(H, L) * M.tr(K, H), top)
            direct = M.tr(K, L)
            report.check(any(_reduce(direct * w, top) == comp for w in weyl),
                         'tr %s -> %s -> %s differs from tr %s -> %s', K, H, L, K, L)
    return report


def check_naturality(M):
    """res and tr intertwine the Weyl generators, up to the Weyl action at K."""
    report = Report('naturality of %r' % (M,))
    for K, H in M.pairs():
        weyl = _weyl_set(M, K)
        low = M.orders(K)
        high = M.orders(H)
        for g in M.weyl_generators(H):
            c = M.conj(H, g)
            lhs = _reduce(M.res(H, K) * c, low)
            report.check(any(_reduce(w * M.res(H, K), low) == lhs for w in weyl),
                         'res %s -> %s does not intertwine c_%r', H, K, g)
            lhs = _reduce(c * M.tr(K, H), high)
            report.check(any(_reduce(M.tr(K, H) * w, high) == lhs for w in weyl),
                         'tr %s -> %s does not intertwine c_%r', K, H, g)
    return report


def check_double_coset(M, p):
    """res^H_K o tr^H_J == sum over K\\H/J of tr o c_g o res, on subgroups of P."""
    L = M.local(p)
    P = L.sylow
    subgroups = subgroup_lattice(P).subgroups()
    report = Report('double coset law of %r at p=%d' % (M, p))
    for H in subgroups:
        below = [S for S in subgroups if S <= H]
        for J, K in itertools.product(below, below):
            orders = L.orders(K)
            lhs = _reduce(L.res(H, K) * L.tr(J, H), orders)
            total = IntMatrix.zeros(len(orders), len(L.orders(J)))
            for Q, g in double_coset_orbits(H, K, J):
                A = Q.conjugate(inverse(g))
                total = total + L.tr(Q, K) * L.conj(g, A) * L.res(J, A)
            report.check(lhs == _reduce(total, orders),
                         'res^%r_%r o tr from %r fails the double coset law', H, K, J)
    return report


def top_level_via_transfers(M, p):
    """M(P) modulo tr^P_H(y) ~ tr^P_{g^-1Hg}(c_{g^-1} y), localized at p."""
    L = M.local(p)
    P = L.sylow
    G = M.group
    target = L.orders(P)
    cols = []
    seen = set()
    for H in subgroup_lattice(P).subgroups():
        for g in sorted(G.elements):
            K = H.conjugate(inverse(g))
            if not K <= P:
                continue
            rel = L.tr(H, P) - L.tr(K, P) * L.conj(inverse(g), H)
            for col in rel.columns():
                key = tuple(x % d if d else x for x, d in zip(col, target))
                if any(key) and key not in seen:
                    seen.add(key)
                    cols.append(list(key))
    quotient = map_cokernel(_matrix(cols, len(target)), None, target)
    out = quotient.group.localize(p)
    logger.debug('%r at p=%d via transfers: %s (%d relations)', M, p, out, len(cols))
    return out


def check_transfer_oracle(M):
    """The transfer-side top level agrees with the assembled top level at each prime."""
    report = Report('transfer oracle for %r' % (M,))
    for p in sorted(factorint(M.group.order)):
        expected = M.value(M.top).localize(p)
        got = top_level_via_transfers(M, p)
        report.check(got == expected, 'p=%d: transfers give %s, top level is %s',
                     p, got, expected)
    return report


def check_sylow_isomorphism(M):
    """res^G_P is injective p-locally and tr^G_P o res^G_P is a p-local unit."""
    report = Report('Sylow restriction of %r' % (M,))
    top = M.top
    for p in sorted(factorint(M.group.order)):
        P = sylow(M.group, p).name
        if P == top:
            continue
        kernel = map_kernel(M.res(top, P), M.orders(top), M.orders(P))
        report.check(kernel.group.localize(p).is_trivial(),
                     'res to %s has p-local kernel %s', P, kernel.group.localize(p))
        index = M.index(P, top)
        orders = M.orders(top)
        comp = _reduce(M.tr(P, top) * M.res(top, P), orders)
        report.check(index % p != 0 and
                     comp == _reduce(IntMatrix.identity(len(orders)) * index, orders),
                     'tr o res through %s is not a p-local unit', P)
    return report


def check_all(M):
    """Every structural check that applies to M."""
    report = Report('checks of %r' % (M,))
    for sub in (check_cohomological(M), check_weyl(M), check_functoriality(M),
                check_naturality(M), check_sylow_isomorphism(M)):
        report.extend(sub)
    if M._local is not None:
        report.extend(check_transfer_oracle(M))
        for p in sorted(factorint(M.group.order)):
            report.extend(check_double_coset(M, p))
    return report


def equivalent_up_to_signs(M, N):
    """Whether M and N agree after changing the sign of Z-levels."""
    if M.group != N.group or M.levels != N.levels:
        return False
    flexible = [n for n in M.names() if M.levels[n] == (0,)]
    for signs in itertools.product((1, -1), repeat=len(flexible)):
        eps = dict(zip(flexible, signs))

        def twist(matrix, src, tgt):
            return matrix * (eps.get(src, 1) * eps.get(tgt, 1))

        ok = True
        for K, H in M.pairs():
            if _reduce(twist(M.res(H, K), H, K), M.orders(K)) != \
                    _reduce(N.res(H, K), N.orders(K)):
                ok = False
                break
            if _reduce(twist(M.tr(K, H), K, H), M.orders(H)) != \
                    _reduce(N.tr(K, H), N.orders(H)):
                ok = False
                break
        if ok:
            return True
    return False


def _format_matrix(m):
    return '[' + '; '.join(' '.join(str(x) for x in row) for row in m.rows) + ']'


def lewis_diagram(M):
    """Aligned text rendering: levels, then restrictions, transfers and Weyl actions."""
    names = M.names()
    width = max(len(n) for n in names)
    lines = ['%s on %s' % (M.name or 'Mackey functor', M.group.name or M.group.order)]
    for n in reversed(names):
        lines.append('  %-*s  %s' % (width, n, M.value(n)))
    maps = collections.OrderedDict()
    for K, H in M.pairs():
        maps.setdefault('res', []).append(('%s -> %s' % (H, K), M.res(H, K)))
        maps.setdefault('tr', []).append(('%s -> %s' % (K, H), M.tr(K, H)))
    for kind, entries in maps.items():
        lines.append(kind)
        w = max(len(label) for label, _ in entries)
        for label, m in entries:
            lines.append('  %-*s  %s' % (w, label, _format_matrix(m)))
    weyl = [(n, g) for n in names for g in M.weyl_generators(n)]
    if weyl:
        lines.append('conj')
        for n, g in weyl:
            lines.append('  %-*s  %s  %s' % (width, n, ''.join(map(str, g)),
                                             _format_matrix(M.conj(n, g))))
    return '\n'.join(lines)
