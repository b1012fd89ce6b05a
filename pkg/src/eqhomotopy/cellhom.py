"""Cellular chain complexes of representation spheres.

Three sphere families are modeled as equivariant cell complexes, with the
basepoint cell omitted so that homology is reduced:

    C2   S^{n s}   cells e0, e_j, e'_j (1 <= j <= n); ambient group C2
    Cp   S^{n l}   cells d, e_{k,i} (1 <= k <= 2n, i in Z/p); ambient D2p
    K4   S^{n V}   smash cells of three copies of S^{n s}; ambient A4

Homology with constant Z coefficients at a subgroup H is computed from
H-invariant chains (orbit sums); cohomology from H-invariant cochains
(orbit indicators, i.e. cochains on the orbit space).  Both are presented
as LatticeQuotients, so restriction, transfer and conjugation between
levels are integer matrices.
"""

import itertools
import logging

from sympy import isprime

from ._cache import cached
from .abelian import (FGAbelianGroup, IntMatrix, homology_quotient, induced_matrix,
                      rank_mod, smith_normal_form)
from .errors import ComplexError, GradingError, Report
from .group_core import compose, identity, make_group, normalizer, subgroup_lattice

__all__ = [
    'ChainComplex',
    'EquivariantComplex',
    'Level',
    'sphere_model',
    'model_sylow',
    'sphere_complex',
    'orbit_complex',
    'homology',
    'cohomology',
    'level_res',
    'level_tr',
    'level_conj',
    'conj_chain_map',
    'fixed_orbit_complex',
    'burnside_coefficient_homology',
    'bockstein_consistency',
    'k4_dimension_sequences',
    'k4_f2_cycle_check',
    'k4_homology_generators',
    'k4_generator_check',
    'k4_cocycle_check',
    'tau_sign',
    'tau_action_check',
]

logger = logging.getLogger(__name__)


class ChainComplex:
    """Free chain complex with integer boundary matrices.

    ``boundaries[d]`` maps degree d to degree d-1.  ``coefficients`` is
    'Z' or a prime p; over F_p the same integer matrices are read mod p.

    Usage::

        C = sphere_complex('K4', 2)
        C.homology()          # {0: Z/2, 1: Z/2 x Z/2, ...}
        C.reduce(2).homology()  # {0: 1, 1: 3, ...} (dimensions)
    """

    __slots__ = ('labels', 'boundaries', 'coefficients')

    def __init__(self, labels, boundaries, coefficients='Z'):
        self.labels = {d: list(v) for d, v in labels.items()}
        self.boundaries = dict(boundaries)
        self.coefficients = coefficients
        for d, mat in self.boundaries.items():
            if mat.shape != (self.rank(d - 1), self.rank(d)):
                raise ComplexError("Boundary in degree %d has shape %r, expected %r"
                                   % (d, mat.shape, (self.rank(d - 1), self.rank(d))))
        for d in self.boundaries:
            if d - 1 in self.boundaries and self.rank(d - 1):
                if not (self.boundaries[d - 1] * self.boundaries[d]).is_zero():
                    raise ComplexError("Boundary squares to a nonzero map in degree %d"
                                       % d)

    def degrees(self):
        return sorted(self.labels)

    def rank(self, d):
        return len(self.labels.get(d, ()))

    def boundary(self, d):
        mat = self.boundaries.get(d)
        if mat is None:
            return IntMatrix.zeros(self.rank(d - 1), self.rank(d))
        return mat

    def coboundary(self, d):
        """Matrix of the coboundary from degree d to degree d+1."""
        return self.boundary(d + 1).transpose()

    def reduce(self, p):
        return ChainComplex(self.labels, self.boundaries, coefficients=p)

    def homology_at(self, d):
        return homology_quotient(self.boundary(d), self.boundary(d + 1), self.rank(d))

    def cohomology_at(self, d):
        return homology_quotient(self.coboundary(d), self.coboundary(d - 1), self.rank(d))

    def _dims(self):
        p = self.coefficients
        return {d: self.rank(d) - rank_mod(self.boundary(d), p)
                - rank_mod(self.boundary(d + 1), p)
                for d in self.degrees()}

    def homology(self):
        """Per-degree groups over Z, or per-degree dimensions over F_p."""
        if self.coefficients != 'Z':
            return self._dims()
        return {d: self.homology_at(d).group for d in self.degrees()}

    def cohomology(self):
        if self.coefficients != 'Z':
            return self._dims()
        return {d: self.cohomology_at(d).group for d in self.degrees()}

    def to_json(self):
        return {
            'coefficients': str(self.coefficients),
            'degrees': {str(d): {'cells': [_label_str(x) for x in self.labels[d]],
                                 'boundary': self.boundary(d).tolist()}
                        for d in self.degrees()},
        }

    def __repr__(self):
        return '<ChainComplex over %s, ranks %s>' % (
            self.coefficients, [self.rank(d) for d in self.degrees()])


def _label_str(label):
    return str(label).replace(' ', '')


def _sparse_add(acc, terms, scale=1):
    for k, c in terms:
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


class EquivariantComplex:
    """A based cell complex with a cellular action by signed permutations.

    ``cells[d]`` lists the cell labels of degree d, ``boundary(label)``
    returns {label: coefficient}, and ``act(g, label)`` returns
    (label, sign) for each generator g of the ambient group.  The action of
    every element is generated from the generators; construction verifies
    that it is a group action by chain maps and that the boundary squares
    to zero.
    """

    def __init__(self, name, ambient, cells, boundary, generators, act):
        self.name = name
        self.ambient = ambient
        self.cells = {d: list(v) for d, v in cells.items()}
        self.index = {d: {c: i for i, c in enumerate(v)} for d, v in self.cells.items()}
        self.dmat = {}
        for d, labels in self.cells.items():
            rows = []
            for c in labels:
                terms = boundary(c)
                rows.append(sorted((self.index[d - 1][x], k)
                                   for x, k in terms.items() if k))
            self.dmat[d] = rows
        self._check_square()
        self.action = self._generate(generators, act)
        self._check_chain_maps(generators)
        self._levels = {}
        logger.debug('%s: cells per degree %s', name,
                     [len(self.cells[d]) for d in self.degrees()])

    def degrees(self):
        return sorted(self.cells)

    def size(self, d):
        return len(self.cells.get(d, ()))

    @property
    def top(self):
        return max(self.cells)

    def boundary_of(self, d, i):
        return self.dmat[d][i] if d in self.dmat else []

    def _check_square(self):
        for d in self.degrees():
            if d - 1 not in self.dmat:
                continue
            for i in range(self.size(d)):
                acc = {}
                for j, c in self.dmat[d][i]:
                    _sparse_add(acc, self.dmat[d - 1][j], c)
                if acc:
                    raise ComplexError("%s: boundary squares to %r on %r"
                                       % (self.name, acc, self.cells[d][i]))

    def _generate(self, generators, act):
        base = {}
        for g in generators:
            base[g] = {d: [(self.index[d][y], s)
                           for y, s in (act(g, c) for c in self.cells[d])]
                       for d in self.degrees()}
        e = identity(self.ambient.degree)
        action = {e: {d: [(i, 1) for i in range(self.size(d))] for d in self.degrees()}}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = compose(g, x)
                    comp = {d: [(base[g][d][j][0], s * base[g][d][j][1])
                                for j, s in action[x][d]] for d in self.degrees()}
                    if y in action:
                        if action[y] != comp:
                            raise ComplexError("%s: generator actions do not define a "
                                               "group action at %r" % (self.name, y))
                        continue
                    action[y] = comp
                    nxt.append(y)
            frontier = nxt
        if set(action) != set(self.ambient.elements):
            raise ComplexError("%s: generators reach %d of %d elements"
                               % (self.name, len(action), self.ambient.order))
        return action

    def _check_chain_maps(self, generators):
        for g in generators:
            act = self.action[g]
            for d in self.degrees():
                if d - 1 not in self.cells:
                    continue
                for i in range(self.size(d)):
                    j, s = act[d][i]
                    lhs = {}
                    _sparse_add(lhs, self.dmat[d][j], s)
                    rhs = {}
                    for k, c in self.dmat[d][i]:
                        t, u = act[d - 1][k]
                        _sparse_add(rhs, [(t, u * c)])
                    if lhs != rhs:
                        raise ComplexError("%s: %r does not commute with the boundary"
                                           % (self.name, g))

    def act(self, g, d, vector):
        """Image of a chain (or cochain) vector under g."""
        out = [0] * self.size(d)
        for i, x in enumerate(vector):
            if x:
                j, s = self.action[g][d][i]
                out[j] += s * x
        return out

    def level(self, H):
        """The invariant (co)chain data at a subgroup H of the ambient group."""
        if hasattr(H, 'representative'):
            H = H.representative
        try:
            return self._levels[H]
        except KeyError:
            pass
        if not H <= self.ambient:
            raise ComplexError("%r is not a subgroup of the ambient group of %s"
                               % (H, self.name))
        lev = self._levels[H] = Level(self, H)
        return lev

    def __repr__(self):
        return '<EquivariantComplex %s>' % self.name


class Level:
    """Orbit data of an equivariant complex at a subgroup H.

    Orbits whose stabilizer reverses orientation carry no invariant chains
    and are dropped.  The orbit vector of an orbit has coefficient +1 at
    its representative and +-1 at the other members; it serves both as the
    orbit sum (chains) and as the orbit indicator (cochains).
    """

    def __init__(self, X, H):
        self.complex = X
        self.group = H
        self.orbits = {}
        self.lookup = {}
        self.dropped = {}
        elements = sorted(H.elements)
        for d in X.degrees():
            orbits = []
            lookup = {}
            seen = set()
            dropped = 0
            for i in range(X.size(d)):
                if i in seen:
                    continue
                members = {}
                reversed_ = False
                for h in elements:
                    j, s = X.action[h][d][i]
                    if j in members and members[j] != s:
                        reversed_ = True
                    members.setdefault(j, s)
                seen.update(members)
                if reversed_:
                    dropped += 1
                    continue
                for j, s in members.items():
                    lookup[j] = (len(orbits), s)
                orbits.append((i, members))
            self.orbits[d] = orbits
            self.lookup[d] = lookup
            self.dropped[d] = dropped
        self._chains = {}
        self._cochains = {}
        self._homology = {}
        self._cohomology = {}

    def size(self, d):
        return len(self.orbits.get(d, ()))

    def labels(self, d):
        return [self.complex.cells[d][rep] for rep, _ in self.orbits.get(d, ())]

    def to_ambient(self, d, coords):
        out = [0] * self.complex.size(d)
        for (rep, members), c in zip(self.orbits.get(d, ()), coords):
            if c:
                for j, s in members.items():
                    out[j] += s * c
        return out

    def from_ambient(self, d, vector, check=True):
        coords = [vector[rep] for rep, _ in self.orbits.get(d, ())]
        if check and self.to_ambient(d, coords) != list(vector):
            raise ComplexError("Vector is not invariant under %r" % (self.group,))
        return coords

    def orbit_vector(self, d, cell):
        """Orbit coordinates of the orbit through ``cell``, normalized to +1 there."""
        i = self.complex.index[d][cell]
        o, s = self.lookup[d][i]
        coords = [0] * self.size(d)
        coords[o] = s
        return coords

    def chain_boundary(self, d):
        """Boundary on invariant chains: degree d orbits to degree d-1 orbits."""
        if d not in self._chains:
            X = self.complex
            cols = []
            for rep, members in self.orbits.get(d, ()):
                acc = {}
                for j, s in members.items():
                    _sparse_add(acc, X.boundary_of(d, j), s)
                vec = [0] * X.size(d - 1)
                for k, c in acc.items():
                    vec[k] = c
                cols.append(self.from_ambient(d - 1, vec) if d - 1 in X.cells else [])
            self._chains[d] = IntMatrix.from_columns(cols, self.size(d - 1)) if cols \
                else IntMatrix.zeros(self.size(d - 1), 0)
        return self._chains[d]

    def cochain_coboundary(self, d):
        """Coboundary on invariant cochains: degree d orbits to degree d+1 orbits."""
        if d not in self._cochains:
            X = self.complex
            rows = []
            for rep, _ in self.orbits.get(d + 1, ()):
                row = [0] * self.size(d)
                for k, c in X.boundary_of(d + 1, rep):
                    hit = self.lookup[d].get(k)
                    if hit is not None:
                        row[hit[0]] += c * hit[1]
                rows.append(row)
            self._cochains[d] = IntMatrix(rows, self.size(d))
        return self._cochains[d]

    def homology(self, d):
        if d not in self._homology:
            self._homology[d] = homology_quotient(
                self.chain_boundary(d), self.chain_boundary(d + 1), self.size(d))
        return self._homology[d]

    def cohomology(self, d):
        if d not in self._cohomology:
            self._cohomology[d] = homology_quotient(
                self.cochain_coboundary(d), self.cochain_coboundary(d - 1), self.size(d))
        return self._cohomology[d]

    def group_at(self, d, cohomological=False):
        return self.cohomology(d) if cohomological else self.homology(d)

    def chain_complex(self):
        X = self.complex
        return ChainComplex({d: self.labels(d) for d in X.degrees()},
                            {d: self.chain_boundary(d)
                             for d in X.degrees() if d - 1 in X.cells})

    def orbit_complex(self):
        """Cellular chains of the orbit space X/H (the dual of the cochain complex)."""
        X = self.complex
        return ChainComplex({d: self.labels(d) for d in X.degrees()},
                            {d: self.cochain_coboundary(d - 1).transpose()
                             for d in X.degrees() if d - 1 in X.cells})

    def __repr__(self):
        return '<Level %r of %s>' % (self.group, self.complex.name)


# Sphere models.

def _c2_cells(n):
    cells = {0: [(0, 0)]}
    for j in range(1, n + 1):
        cells[j] = [(j, 0), (j, 1)]
    return cells


def _c2_boundary(cell):
    j, e = cell
    if j == 0:
        return {}
    if j == 1:
        return {(0, 0): 1}
    return {(j - 1, e): 1, (j - 1, 1 - e): (-1) ** (j - 1)}


def _c2_flip(cell):
    j, e = cell
    return (j, 1 - e) if j else cell


def _c2_sphere(n):
    G = make_group('C2')

    def act(g, cell):
        return (cell if g == (0, 1) else _c2_flip(cell)), 1

    return EquivariantComplex('S^{%ds}' % n, G, _c2_cells(n), _c2_boundary,
                              list(G.generators), act)


def _cp_sphere(p, n):
    G = make_group('D%d' % (2 * p))
    cells = {0: [(0, 0)]}
    for k in range(1, 2 * n + 1):
        cells[k] = [(k, i) for i in range(p)]

    def boundary(cell):
        k, i = cell
        if k == 0:
            return {}
        if k == 1:
            return {(0, 0): 1}
        if k % 2 == 0:
            return {(k - 1, i): 1, (k - 1, (i + 1) % p): -1}
        return {(k - 1, l): 1 for l in range(p)}

    def act(g, cell):
        k, i = cell
        if k == 0:
            return cell, 1
        a = g[0]
        if (g[1] - g[0]) % p == 1:
            return (k, (i + a) % p), 1
        shift = 0 if k % 2 else -1
        return (k, (a - i + shift) % p), (-1) ** (k // 2)

    return EquivariantComplex('S^{%dl} (p=%d)' % (n, p), G, cells, boundary,
                              list(G.generators), act)


_K4_INVOLUTIONS = [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
_K4_ROTATION = (0, 2, 3, 1)


def _k4_sphere(n):
    G = make_group('A4')
    factor = _c2_cells(n)
    cells = {}
    for a, b, c in itertools.product(range(n + 1), repeat=3):
        for x, y, z in itertools.product(factor[a], factor[b], factor[c]):
            cells.setdefault(a + b + c, []).append((x, y, z))
    for d in cells:
        cells[d].sort()

    def boundary(cell):
        out = {}
        sign = 1
        for pos in range(3):
            for face, k in _c2_boundary(cell[pos]).items():
                key = cell[:pos] + (face,) + cell[pos + 1:]
                out[key] = out.get(key, 0) + sign * k
            sign *= (-1) ** cell[pos][0]
        return out

    def act(g, cell):
        if g == _K4_ROTATION:
            x, y, z = cell
            return (z, x, y), (-1) ** (z[0] * (x[0] + y[0]))
        if g in _K4_INVOLUTIONS or g == identity(4):
            flips = [g != identity(4) and g != t for t in _K4_INVOLUTIONS]
            return tuple(_c2_flip(c) if f else c for c, f in zip(cell, flips)), 1
        raise ComplexError("No action of %r on S^{nV}" % (g,))

    return EquivariantComplex('S^{%dV}' % n, G, cells, boundary,
                              _K4_INVOLUTIONS[:2] + [_K4_ROTATION], act)


def _parse_catalog(catalog):
    name = str(catalog).replace('_', '').upper()
    if name == 'K4':
        return 'K4', 2
    if name.startswith('C') and name[1:].isdigit():
        p = int(name[1:])
        if p == 2:
            return 'C2', 2
        if isprime(p):
            return 'Cp', p
    raise GradingError("Cannot build a sphere model for %r (use C2, C<p> or K4)"
                       % (catalog,))


@cached
def sphere_model(catalog, n):
    """The equivariant cell model of S^{nW} for catalog 'C2', 'C<p>' or 'K4'."""
    if n < 0:
        raise GradingError("Cannot build a sphere of negative dimension %d" % n)
    kind, p = _parse_catalog(catalog)
    if kind == 'C2':
        return _c2_sphere(n)
    if kind == 'Cp':
        return _cp_sphere(p, n)
    return _k4_sphere(n)


def model_sylow(X):
    """The p-subgroup whose spheres X models (C2, Cp or K4 inside the ambient group)."""
    G = X.ambient
    lattice = subgroup_lattice(G)
    if G.order == 2:
        return G
    if G.order == 12:
        return lattice['K4'].representative
    return lattice['C%d' % (G.order // 2)].representative


def sphere_complex(catalog, n, coeff='Z'):
    """Invariant chain complex of the sphere at its p-group level."""
    X = sphere_model(catalog, n)
    C = X.level(model_sylow(X)).chain_complex()
    return C if coeff in ('Z', None) else C.reduce(int(str(coeff).lstrip('F_')))


def orbit_complex(catalog, n, coeff='Z'):
    """Cellular chains of the orbit space; its cohomology is the Z-cohomology."""
    X = sphere_model(catalog, n)
    C = X.level(model_sylow(X)).orbit_complex()
    return C if coeff in ('Z', None) else C.reduce(int(str(coeff).lstrip('F_')))


def homology(C):
    return C.homology()


def cohomology(C):
    return C.cohomology()


# Maps between levels.

def _coset_reps(H, K):
    reps = []
    seen = set()
    for h in sorted(H.elements):
        coset = frozenset(compose(h, k) for k in K.elements)
        if coset not in seen:
            seen.add(coset)
            reps.append(h)
    return reps


def level_map(X, source, target, d, func, cohomological=False):
    """Matrix of the map induced by ``func`` on ambient vectors."""
    A = source.group_at(d, cohomological)
    B = target.group_at(d, cohomological)

    def f(coords):
        return target.from_ambient(d, func(source.to_ambient(d, coords)))

    return induced_matrix(A, B, f)


def level_res(X, H, K, d, cohomological=False):
    """Restriction from level H to a subgroup K."""
    if not K <= H:
        raise ComplexError("Cannot restrict from %r to %r" % (H, K))
    return level_map(X, X.level(H), X.level(K), d, lambda v: v, cohomological)


def level_tr(X, K, H, d, cohomological=False):
    """Transfer from level K to a supergroup H: sum over H/K of translates."""
    if not K <= H:
        raise ComplexError("Cannot transfer from %r to %r" % (K, H))
    reps = _coset_reps(H, K)

    def func(v):
        out = [0] * len(v)
        for h in reps:
            for i, x in enumerate(X.act(h, d, v)):
                out[i] += x
        return out

    return level_map(X, X.level(K), X.level(H), d, func, cohomological)


def level_conj(X, g, H, d, cohomological=False):
    """Conjugation c_g from level H to level gHg^-1."""
    return level_map(X, X.level(H), X.level(H.conjugate(g)), d,
                     lambda v: X.act(g, d, v), cohomological)


def conj_chain_map(catalog, n, g):
    """The chain map of g (normalizing the model's p-group) on sphere_complex.

    Returns {degree: IntMatrix} in the invariant orbit coordinates.
    """
    X = sphere_model(catalog, n)
    P = model_sylow(X)
    if g not in X.ambient or P.conjugate(g) != P:
        raise ComplexError("Cannot conjugate by %r: it does not normalize %r" % (g, P))
    lev = X.level(P)
    out = {}
    for d in X.degrees():
        cols = [lev.from_ambient(d, X.act(g, d, lev.to_ambient(d, e)))
                for e in IntMatrix.identity(lev.size(d)).rows]
        out[d] = IntMatrix.from_columns(cols, lev.size(d)) if cols \
            else IntMatrix.zeros(0, 0)
    return out


def tau_sign(t):
    """Sign of the reflection on degree t (co)homology of S^{n l}."""
    return -1 if (t // 2) % 2 else 1


def tau_action_check(p, n):
    """Compare the reflection acting on H_t(S^{n l}) with tau_sign(t) in every degree."""
    X = sphere_model('C%d' % p, n)
    P = model_sylow(X)
    tau = subgroup_lattice(X.ambient)['C2'].representative.generators[0]
    level = X.level(P)
    report = Report('tau on S^{%dl} (p=%d)' % (n, p))
    for t in X.degrees():
        orders = level.homology(t).orders
        if not orders:
            continue
        M = level_conj(X, tau, P, t)
        sign = tau_sign(t)
        for i, e in enumerate(orders):
            for j in range(len(orders)):
                x = M.rows[i][j] - (sign if i == j else 0)
                report.check(x % e == 0 if e else x == 0,
                             'degree %d: entry (%d, %d) is %d, sign should be %d',
                             t, i, j, M.rows[i][j], sign)
    return report


# Fixed points and Burnside coefficients.

def fixed_orbit_complex(X, K, L):
    """Cellular chains of X^K / L for K normal in L.

    Cells fixed by K with a sign are dropped, as are L-orbits whose
    stabilizer reverses orientation.
    """
    if hasattr(K, 'representative'):
        K = K.representative
    if hasattr(L, 'representative'):
        L = L.representative
    if not (K <= L and K.is_normal_in(L)):
        raise ComplexError("Cannot form X^K/L: %r is not normal in %r" % (K, L))
    fixed = {}
    for d in X.degrees():
        fixed[d] = [i for i in range(X.size(d))
                    if all(X.action[k][d][i] == (i, 1) for k in K.generators)]
    elements = sorted(L.elements)
    orbits = {}
    lookup = {}
    for d, cells in fixed.items():
        keep = set(cells)
        orbits[d] = []
        lookup[d] = {}
        seen = set()
        for i in cells:
            if i in seen:
                continue
            members = {}
            bad = False
            for h in elements:
                j, s = X.action[h][d][i]
                if j in members and members[j] != s:
                    bad = True
                members.setdefault(j, s)
            seen.update(members)
            assert set(members) <= keep
            if bad:
                continue
            for j, s in members.items():
                lookup[d][j] = (len(orbits[d]), s)
            orbits[d].append(i)
    labels = {d: [X.cells[d][i] for i in orbits[d]] for d in X.degrees()}
    boundaries = {}
    for d in X.degrees():
        if d - 1 not in X.cells:
            continue
        cols = []
        for i in orbits[d]:
            col = [0] * len(orbits[d - 1])
            for k, c in X.boundary_of(d, i):
                hit = lookup[d - 1].get(k)
                if hit is not None:
                    col[hit[0]] += c * hit[1]
            cols.append(col)
        boundaries[d] = IntMatrix.from_columns(cols, len(orbits[d - 1])) if cols \
            else IntMatrix.zeros(len(orbits[d - 1]), 0)
    return ChainComplex(labels, boundaries)


def burnside_coefficient_homology(X, G=None):
    """Rational ranks of the sum over [H] of H_*(X^H / W_G H).

    G defaults to the ambient group of X.
    """
    G = G or X.ambient
    ranks = {d: 0 for d in X.degrees()}
    for c in subgroup_lattice(G):
        H = c.representative
        C = fixed_orbit_complex(X, H, normalizer(G, H))
        for d, group in C.homology().items():
            ranks[d] += group.rank
    return ranks


# Checks on the K4 spheres.

def _k4_level(n):
    X = sphere_model('K4', n)
    return X, X.level(model_sylow(X))


def _z_homology(n):
    X, lev = _k4_level(n)
    return {d: lev.homology(d).group for d in X.degrees()}


def _f2_dims(n):
    return sphere_complex('K4', n).reduce(2).homology()


def k4_dimension_sequences(n):
    """Expected F_2 dimensions and Z/2-counts of H_*(S^{nV}) by degree.

    The Z/2-count list stops at degree 3n-1; degree 3n carries Z.
    """
    f2 = [2 * t + 1 if t <= n else 3 * n + 1 - t for t in range(3 * n + 1)]
    z = []
    for t in range(3 * n):
        if t <= n:
            z.append(t + 1)
        else:
            r = t - n
            z.append(n + 1 - r // 2 if r % 2 == 0 else n - (r + 1) // 2)
    return f2, z


def bockstein_consistency(n):
    """Compare F_2 and Z homology of S^{nV} degree by degree."""
    report = Report('Bockstein S^{%dV}' % n)
    f2 = _f2_dims(n)
    z = _z_homology(n)
    top = 3 * n
    report.check(z[top] == FGAbelianGroup(1), 'H_%d is %s, not Z', top, z[top])
    report.check(f2[top] == 1, 'F_2 dimension %d in degree %d', f2[top], top)
    twos = {}
    for d, group in z.items():
        report.check(all(q == 2 for q in group.invariant_factors),
                     'torsion of exponent > 2 in degree %d: %s', d, group)
        twos[d] = sum(1 for q in group.invariant_factors if q % 2 == 0)
    for i in range(0, top):
        expected = z[i].rank + twos[i] + twos.get(i - 1, 0)
        report.check(f2[i] == expected, 'degree %d: F_2 dimension %d, Z side gives %d',
                     i, f2[i], expected)
    return report


def _cell(k, l, m, primed=False):
    return ((k, int(primed and k > 0)), (l, 0), (m, 0))


def _is_free_triple(k, l, m):
    return k > 0 and l > 0 and m > 0


def k4_f2_cycle_check(n):
    """Over F_2 the cycles are spanned by klm = 0 cells and (1 + l)(k, l, m)."""
    report = Report('F_2 cycles of S^{%dV}' % n)
    X, lev = _k4_level(n)
    for d in X.degrees():
        gens = []
        for k, l, m in _triples(n, d):
            v = lev.orbit_vector(d, _cell(k, l, m))
            if _is_free_triple(k, l, m):
                w = lev.orbit_vector(d, _cell(k, l, m, True))
                v = [a + b for a, b in zip(v, w)]
            gens.append(v)
        boundary = lev.chain_boundary(d)
        for v in gens:
            report.check(not any(x % 2 for x in boundary.apply(v)),
                         'degree %d: listed chain is not an F_2 cycle', d)
        kernel = lev.size(d) - rank_mod(boundary, 2)
        span = rank_mod(IntMatrix(gens, lev.size(d)), 2) if gens else 0
        report.check(kernel == span, 'degree %d: kernel %d, listed span %d',
                     d, kernel, span)
    return report


def _triples(n, t):
    return [(k, l, t - k - l) for k in range(n + 1) for l in range(n + 1)
            if 0 <= t - k - l <= n]


def k4_homology_generators(n):
    """Cycles representing the cyclic summands of H_*(S^{nV}; Z).

    Returns {degree: [orbit coordinate vectors]}.
    """
    X, lev = _k4_level(n)
    out = {}
    keyed = {}

    def add(d, key, vector):
        if key in keyed:
            return
        keyed[key] = True
        out.setdefault(d, []).append(vector)

    def vec(k, l, m, lam=0):
        """(1 + lam*lambda)(k, l, m); lambda fixes cells with klm = 0."""
        d = k + l + m
        v = lev.orbit_vector(d, _cell(k, l, m))
        if lam and _is_free_triple(k, l, m):
            w = lev.orbit_vector(d, _cell(k, l, m, True))
            v = [a + lam * b for a, b in zip(v, w)]
        return v

    def combo(terms):
        d = sum(terms[0][1:4])
        total = [0] * lev.size(d)
        for coeff, k, l, m, lam in terms:
            total = [a + coeff * b for a, b in zip(total, vec(k, l, m, lam))]
        return d, total

    half = (n - 1) // 2 if n % 2 else n // 2
    sign = -1 if n % 2 else 1
    lo = (n - 1) // 2 if n % 2 else (n - 2) // 2
    if n % 2:
        for i in range(half + 1):
            for j in range(half + 1):
                d, v = combo([(1, 2 * i + 1, 2 * j + 1, n, -1)])
                add(d, ('a', i, j), v)
        for i in range(1, half + 1):
            for j in range(1, half + 1):
                d, v = combo([(1, 2 * i - 1, 2 * j, n, -1), (1, 2 * i, 2 * j - 1, n, -1)])
                add(d, ('b', i, j), v)
    else:
        for i in range(half + 1):
            for j in range(half + 1):
                k, l = 2 * i, 2 * j
                key = ('cell', k, l, n) if k * l == 0 else ('a', i, j)
                d, v = combo([(1, k, l, n, sign)])
                add(d, key, v)
        for i in range(lo + 1):
            for j in range(lo + 1):
                d, v = combo([(1, 2 * i + 1, 2 * j, n, 1), (-1, 2 * i, 2 * j + 1, n, 1)])
                add(d, ('b', i, j), v)
    for i in range(half + 1):
        for j in range(half + 1):
            for k, l, m in ((2 * i, 0, 2 * j), (0, 2 * i, 2 * j)):
                d, v = combo([(1, k, l, m, 0)])
                add(d, ('cell', k, l, m), v)
    for i in range(lo + 1):
        for j in range(lo + 1):
            d, v = combo([(1, 2 * i + 1, 0, 2 * j, 0), (-1, 2 * i, 0, 2 * j + 1, 0)])
            add(d, ('c', 1, i, j), v)
            d, v = combo([(1, 0, 2 * i + 1, 2 * j, 0), (-1, 0, 2 * i, 2 * j + 1, 0)])
            add(d, ('c', 2, i, j), v)
    return out


def k4_generator_check(n):
    """Listed generators are Z-cycles, independent mod 2 modulo boundaries,
    and as many as the cyclic summands of the homology in each degree."""
    report = Report('homology generators of S^{%dV}' % n)
    X, lev = _k4_level(n)
    gens = k4_homology_generators(n)
    for d in X.degrees():
        vs = gens.get(d, [])
        boundary = lev.chain_boundary(d)
        for v in vs:
            report.check(not any(boundary.apply(v)),
                         'degree %d: generator is not a cycle', d)
        incoming = lev.chain_boundary(d + 1)
        if vs:
            stacked = incoming.hstack(IntMatrix.from_columns(vs, lev.size(d)))
            gained = rank_mod(stacked, 2) - rank_mod(incoming, 2)
            report.check(gained == len(vs), 'degree %d: %d of %d generators independent',
                         d, gained, len(vs))
        summands = len(lev.homology(d).generators)
        report.check(summands == len(vs), 'degree %d: %d generators for %d summands',
                     d, len(vs), summands)
    return report


def _bracket_terms(sign, k, l, m):
    if sign > 0:
        return [(1, 2 * k + 1, 2 * l, 2 * m), (1, 2 * k, 2 * l + 1, 2 * m),
                (1, 2 * k, 2 * l, 2 * m + 1)]
    return [(1, 2 * k, 2 * l - 1, 2 * m - 1), (-1, 2 * k - 1, 2 * l, 2 * m - 1),
            (1, 2 * k - 1, 2 * l - 1, 2 * m)]


def k4_cocycle_check(n):
    """Reductions mod (2, 1 + lambda) of Z-cocycles are exactly the F_2-cocycles
    in the span of the bracket cochains, below the top degree."""
    report = Report('cocycle reductions of S^{%dV}' % n)
    X, lev = _k4_level(n)
    for t in range(3 * n):
        triples = _triples(n, t)
        if not triples:
            continue
        position = {x: i for i, x in enumerate(triples)}

        def reduce(vector):
            out = []
            for k, l, m in triples:
                x = vector[X.index[t][_cell(k, l, m)]]
                if _is_free_triple(k, l, m):
                    x += vector[X.index[t][_cell(k, l, m, True)]]
                out.append(x % 2)
            return out

        def lift(reduced):
            coords = [0] * lev.size(t)
            for (k, l, m), x in zip(triples, reduced):
                if x % 2:
                    orbit = lev.orbit_vector(t, _cell(k, l, m))
                    coords = [a + b for a, b in zip(coords, orbit)]
            return coords

        brackets = []
        for sign in (1, -1):
            for k, l, m in itertools.product(range(n + 1), repeat=3):
                col = [0] * len(triples)
                for c, a, b, e in _bracket_terms(sign, k, l, m):
                    if (a, b, e) in position:
                        col[position[(a, b, e)]] += c
                if any(x % 2 for x in col):
                    brackets.append([x % 2 for x in col])
        coboundary = lev.cochain_coboundary(t)
        snf = smith_normal_form(coboundary)
        cocycles = [reduce(lev.to_ambient(t, v)) for v in snf.kernel_basis()]
        cocycles = [v for v in cocycles if any(v)]
        span = rank_mod(IntMatrix(brackets, len(triples)), 2) if brackets else 0
        for v in cocycles:
            inside = rank_mod(IntMatrix(brackets + [v], len(triples)), 2) == span
            report.check(inside,
                         'degree %d: cocycle reduction outside the bracket span', t)
            report.check(not any(x % 2 for x in coboundary.apply(lift(v))),
                         'degree %d: lifted reduction is not an F_2 cocycle', t)
        images = rank_mod(IntMatrix(cocycles, len(triples)), 2) if cocycles else 0
        if brackets:
            lifted = IntMatrix.from_columns([coboundary.apply(lift(b)) for b in brackets],
                                            coboundary.nrows)
            liftable = span - rank_mod(lifted, 2)
        else:
            liftable = 0
        report.check(images == liftable, 'degree %d: %d reductions, %d liftable classes',
                     t, images, liftable)
    return report
