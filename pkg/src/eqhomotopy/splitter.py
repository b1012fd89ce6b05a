"""Localized homotopy of HZ through stable elements, and gluing over primes.

For a prime p dividing |G| the p-local value of pi^G_V(HZ) is the subgroup
of pi^P_{V|P} (P a Sylow p-subgroup) cut out by the constraints

    res^P_H(x) == c_g(res^P_{g^-1 H g}(x))      H <= P, g in G, g^-1 H g <= P

with all other primes inverted.  The P-level and everything below it are
read off a cell model of the sphere S^{|c| W} (see cellhom), where V|P is
a + c W.  The normalizer N_G(P) is embedded in the model's ambient group,
and its elements act on the model; the part of V|N not seen by the model
is a sign character of N/P, the fusion twist.
"""

import collections
import itertools
import logging

from sympy import factorint, mod_inverse

from ._cache import cached
from .abelian import FGAbelianGroup, IntMatrix, map_kernel
from .cellhom import level_conj, level_res, level_tr, model_sylow, sphere_model
from .errors import (GlueError, GradingError, SubgroupError, UnknownGroupError,
                     UnsupportedFusionError, Report)
from .group_core import (PermGroup, compose, inverse, make_group, normalizer, sylow,
                         subgroup_lattice)
from .presentations import graded_piece_of_presentation
from .reps import VirtualRep, group_kind, orientation_sign, restrict

__all__ = [
    'SylowModel',
    'StableLevel',
    'LocalizedResult',
    'sylow_model',
    'localized_homotopy',
    'glue',
    'compute_homotopy',
    'localization_coherence',
    'd2p_by_reduction',
    'a5_two_local_transport',
    'prime_sphere_homotopy',
    'graded_piece_of_presentation',
]

logger = logging.getLogger(__name__)


def _p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _model_rep(N):
    """The N-representation realized by the sphere model's generating sphere."""
    kind = group_kind(N)
    if kind == 'C2':
        return VirtualRep(N, {'s': 1})
    if kind == 'Cp':
        return VirtualRep(N, {'l': 1})
    if kind == 'K4':
        return VirtualRep(N, {'V1': 1, 'V2': 1, 'V3': 1})
    if kind == 'D':
        return VirtualRep(N, {'g': 1})
    if kind == 'A4':
        return VirtualRep(N, {'V3': 1})
    raise UnsupportedFusionError("No sphere model for a normalizer of kind %s" % kind)


def _embedding(N, ambient, P, target):
    """An injective homomorphism N -> ambient sending P onto target."""
    gens = list(N.generators)
    e = N.identity
    for images in itertools.product(sorted(ambient.elements), repeat=len(gens)):
        mapping = {e: ambient.identity}
        frontier = [e]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, im in zip(gens, images):
                    y = compose(g, x)
                    yim = compose(im, mapping[x])
                    if y in mapping:
                        if mapping[y] != yim:
                            ok = False
                            break
                        continue
                    mapping[y] = yim
                    nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(set(mapping.values())) != len(mapping):
            continue
        if frozenset(mapping[x] for x in P.elements) == target.elements:
            return mapping
    raise UnsupportedFusionError("Cannot embed %r in %r over its Sylow subgroup"
                                 % (N, ambient))


class SylowModel:
    """A Sylow p-subgroup of G with the cell model of its sphere.

    ``degree`` and ``cohomological`` say where V lives in the model:
    homology in degree a of S^{nW} when V|P = a - nW, cohomology in
    degree -a when V|P = a + nW with n > 0.
    """

    def __init__(self, G, V, p):
        if G.order % p:
            raise UnknownGroupError("Cannot localize at %d: it does not divide |G| = %d"
                                    % (p, G.order))
        self.group = G
        self.rep = V
        self.prime = p
        self.sylow = sylow(G, p).representative
        self.normalizer = normalizer(G, self.sylow)
        P = self.sylow
        VP = restrict(V, P)
        kind = group_kind(P)
        if kind == 'C2':
            a, c, name = VP.trivial, VP['s'], 'C2'
        elif kind == 'Cp':
            a, c, name = VP.trivial, VP['l'], 'C%d' % p
        elif kind == 'K4':
            coeffs = {VP['V1'], VP['V2'], VP['V3']}
            if len(coeffs) != 1:
                raise GradingError("Cannot compute at %s: the K4 coefficients differ"
                                   % (VP,))
            a, c, name = VP.trivial, coeffs.pop(), 'K4'
        else:
            raise GradingError("No sphere model for a Sylow subgroup of kind %s" % kind)
        self.trivial_coefficient = a
        self.coefficient = c
        self.cohomological = c > 0
        self.degree = -a if c > 0 else a
        self.complex = sphere_model(name, abs(c))
        self.embedding = _embedding(self.normalizer, self.complex.ambient, P,
                                    model_sylow(self.complex))
        self.twist = restrict(V, self.normalizer) - c * _model_rep(self.normalizer)
        self._images = {}
        logger.debug('Sylow model for %r at p=%d: %s in degree %d (%s)', G, p,
                     self.complex.name, self.degree,
                     'cohomology' if self.cohomological else 'homology')

    def image(self, Q):
        """The image of a subgroup Q of N_G(P) in the model's ambient group."""
        try:
            return self._images[Q]
        except KeyError:
            pass
        phi = self.embedding
        ambient = self.complex.ambient
        out = PermGroup(ambient.degree, [phi[x] for x in Q.generators],
                        elements=frozenset(phi[x] for x in Q.elements))
        self._images[Q] = out
        return out

    def _check(self, Q):
        if not Q <= self.sylow:
            raise SubgroupError("%r is not a subgroup of the Sylow subgroup %r"
                                % (Q, self.sylow))

    def value(self, Q):
        """pi^Q_V for Q <= P as a presented group (LatticeQuotient)."""
        self._check(Q)
        lev = self.complex.level(self.image(Q))
        return lev.group_at(self.degree, self.cohomological)

    def orders(self, Q):
        return list(self.value(Q).orders)

    def res(self, Q, K):
        self._check(Q)
        if not K <= Q:
            raise SubgroupError("Cannot restrict from %r to %r" % (Q, K))
        return level_res(self.complex, self.image(Q), self.image(K), self.degree,
                         self.cohomological)

    def tr(self, K, Q):
        self._check(Q)
        if not K <= Q:
            raise SubgroupError("Cannot transfer from %r to %r" % (K, Q))
        return level_tr(self.complex, self.image(K), self.image(Q), self.degree,
                        self.cohomological)

    def fusion_sign(self, g):
        return orientation_sign(self.twist, g)

    def conj(self, g, Q):
        """c_g: pi^Q -> pi^{gQg^-1} for Q and gQg^-1 inside P."""
        self._check(Q)
        target = Q.conjugate(g)
        self._check(target)
        if g in self.normalizer:
            m = level_conj(self.complex, self.embedding[g], self.image(Q), self.degree,
                           self.cohomological)
            return m * self.fusion_sign(g)
        if Q.order == 1:
            n = len(self.value(Q).generators)
            return IntMatrix.identity(n) * orientation_sign(self.rep, g)
        raise UnsupportedFusionError("Cannot realize conjugation by %r on %r "
                                     "outside N_G(P)" % (g, Q))

    def constraints(self, H):
        """The stable-element constraints for a subgroup H with H n P Sylow in H.

        Yields (K, matrix) with matrix: pi^Q -> pi^K, Q = H n P; the stable
        elements are the common kernel.
        """
        Q = H.intersection(self.sylow)
        if Q.order != _p_part(H.order, self.prime):
            raise SubgroupError("%r does not meet %r in a Sylow subgroup"
                                % (H, self.sylow))
        seen = set()
        for K in subgroup_lattice(Q).subgroups():
            for h in sorted(H.elements):
                if h in Q.elements:
                    continue
                K2 = K.conjugate(inverse(h))
                if not K2 <= Q:
                    continue
                m = self.res(Q, K) - self.conj(h, K2) * self.res(Q, K2)
                key = (K, m)
                if key in seen or m.is_zero():
                    continue
                seen.add(key)
                yield K, m

    def stable_elements(self, H=None):
        """The stable subgroup of pi^Q, Q = H n P, as a StableLevel."""
        H = self.group if H is None else H
        Q = H.intersection(self.sylow)
        source = self.value(Q)
        rows = []
        target_orders = []
        count = 0
        for K, m in self.constraints(H):
            rows.extend(m.rows)
            target_orders.extend(self.value(K).orders)
            count += 1
        s = len(source.generators)
        matrix = IntMatrix(rows, s)
        logger.debug('stable elements of %r at p=%d: %d constraints on %s',
                     H, self.prime, count, source.group)
        kernel = map_kernel(matrix, source.orders, target_orders)
        return StableLevel(self, H, Q, kernel)

    def __repr__(self):
        return '<SylowModel %r p=%d %s>' % (self.group, self.prime, self.complex.name)


@cached
def sylow_model(G, V, p):
    return SylowModel(G, V, p)


class StableLevel:
    """The p-localization of a stable subgroup, with generator witnesses.

    ``witnesses`` are vectors in the coordinates of pi^Q; ``orders`` are
    their p-local orders (p-powers, then 0 for free generators).
    """

    def __init__(self, model, H, Q, kernel):
        self.model = model
        self.subgroup = H
        self.sylow = Q
        self.kernel = kernel
        p = model.prime
        self.witnesses = []
        self.orders = []
        self._slots = []
        torsion = []
        free = []
        for i, (g, d) in enumerate(zip(kernel.generators, kernel.orders)):
            if d == 0:
                free.append((i, g, 0, 1))
                continue
            q = _p_part(d, p)
            if q > 1:
                m = d // q
                torsion.append((i, [m * x for x in g], q, m))
        for i, w, q, m in torsion + free:
            self._slots.append((i, q, m))
            self.witnesses.append(w)
            self.orders.append(q)

    @property
    def prime(self):
        return self.model.prime

    @property
    def group(self):
        return FGAbelianGroup(self.orders.count(0), [q for q in self.orders if q])

    @property
    def rank(self):
        return self.orders.count(0)

    def coordinates(self, vector):
        """p-local coordinates of a stable element given in pi^Q coordinates."""
        c = self.kernel.coordinates(vector)
        out = []
        for i, q, m in self._slots:
            out.append(c[i] if q == 0 else c[i] * mod_inverse(m, q) % q)
        return out

    def verify(self):
        """Re-evaluate every constraint on every witness."""
        model = self.model
        report = Report('stable witnesses of %r at p=%d' % (self.subgroup, self.prime))
        for K, m in model.constraints(self.subgroup):
            orders = model.value(K).orders
            for w in self.witnesses:
                image = m.apply(w)
                report.check(all((x % d if d else x) == 0 for x, d in zip(image, orders)),
                             'witness %r violates the constraint at %r', w, K)
        return report

    def __repr__(self):
        return '<StableLevel %r at p=%d: %s>' % (self.subgroup, self.prime, self.group)


LocalizedResult = collections.namedtuple('LocalizedResult',
                                         ['prime', 'group', 'witnesses', 'level'])


def localized_homotopy(G, V, p):
    """pi^G_V(HZ) with all primes other than p inverted."""
    if isinstance(G, str):
        G = make_group(G)
    if G.order % p:
        rank = int(V.dim == 0 and all(orientation_sign(V, g) == 1 for g in G.generators))
        return LocalizedResult(p, FGAbelianGroup(rank), [], None)
    level = sylow_model(G, V, p).stable_elements()
    result = LocalizedResult(p, level.group, level.witnesses, level)
    logger.debug('%r at %s, p=%d: %s', G, V, p, result.group)
    return result


def glue(results):
    """Combine p-local results, one per prime, into a finitely generated group."""
    results = list(results)
    if not results:
        raise GlueError("Cannot glue an empty set of localizations")
    ranks = {r.group.rank for r in results}
    if len(ranks) != 1:
        detail = ', '.join('%d at p=%d' % (r.group.rank, r.prime) for r in results)
        raise GlueError("Cannot glue localizations of different ranks: %s" % detail)
    torsion = []
    for r in results:
        for d in r.group.invariant_factors:
            if set(factorint(d)) != {r.prime}:
                raise GlueError("Cannot glue: torsion Z/%d in the localization at %d"
                                % (d, r.prime))
            torsion.append(d)
    return FGAbelianGroup(ranks.pop(), torsion)


def compute_homotopy(G, V):
    """pi^G_V(HZ) as a finitely generated abelian group."""
    if isinstance(G, str):
        G = make_group(G)
    if G.order == 1:
        return FGAbelianGroup(1 if V.dim == 0 else 0)
    results = [localized_homotopy(G, V, p) for p in sorted(factorint(G.order))]
    out = glue(results)
    logger.info('pi^%s_{%s} = %s', G.name or G.order, V, out)
    return out


def localization_coherence(G, V):
    """Report that all localizations of pi^G_V agree rationally."""
    if isinstance(G, str):
        G = make_group(G)
    report = Report('localization coherence of %r at %s' % (G, V))
    results = [localized_homotopy(G, V, p) for p in sorted(factorint(G.order))]
    for a, b in itertools.combinations(results, 2):
        report.check(a.group.rank == b.group.rank, 'rank %d at p=%d but %d at p=%d',
                     a.group.rank, a.prime, b.group.rank, b.prime)
    for r in results:
        if r.level is not None:
            report.extend(r.level.verify())
    return report


def prime_sphere_homotopy(catalog, a, c):
    """pi^P_{a + cW} for the group P modeled by a sphere catalog ('C2', 'C<p>', 'K4')."""
    X = sphere_model(catalog, abs(c))
    lev = X.level(model_sylow(X))
    if c > 0:
        return lev.group_at(-a, True).group
    return lev.group_at(a, False).group


def d2p_by_reduction(p, k, m, n):
    """pi^{D_2p}_{k + m s + n g} from the C2 side and the Cp side separately."""
    two = prime_sphere_homotopy('C2', k + n, m + n).localize(2)
    if (abs(k + m) // 2 + m) % 2:
        odd = FGAbelianGroup(0)
    else:
        odd = prime_sphere_homotopy('C%d' % p, k + m, n).localize(p)
    return glue([LocalizedResult(2, two, [], None), LocalizedResult(p, odd, [], None)])


def a5_two_local_transport(n1, n3, n4, n5):
    """The 2-local value of pi^{A5} at n1 + n3 V3 + n4 V4 + n5 V5, read on A4."""
    A4 = make_group('A4')
    V = VirtualRep(A4, {'1': n1 + n4 + 2 * n5, 'V3': n3 + n4 + n5})
    return localized_homotopy(A4, V, 2).group
