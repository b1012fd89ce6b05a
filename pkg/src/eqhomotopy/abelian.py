"""Exact integer linear algebra and finitely generated abelian groups.

Everything here works over Python integers: dense integer matrices, the
Smith normal form with both unimodular transforms and their inverses, and
presented subquotients L/D of a lattice Z^m.  Homology groups, stable
element subgroups and Mackey functor levels are all built as such
subquotients, so that maps between them become integer matrices.
"""

import functools
import itertools
import logging
import operator

from sympy import factorint

from .errors import EqHomotopyError

__all__ = [
    # Matrices.
    'IntMatrix',
    'SmithForm',
    'smith_normal_form',
    'rank_mod',
    # Groups.
    'FGAbelianGroup',
    'LatticeQuotient',
    'homology_quotient',
    'induced_matrix',
    'map_kernel',
    'map_cokernel',
    'is_well_defined',
]

logger = logging.getLogger(__name__)


class IntMatrix:
    """Dense integer matrix stored as a list of rows.

    The shape is kept explicitly so that matrices with no rows or no
    columns compose correctly.

    Usage::

        A = IntMatrix([[1, 2], [3, 4]])
        B = A * A.transpose()
        v = A.apply([1, -1])
    """

    __slots__ = ('rows', 'nrows', 'ncols')

    def __init__(self, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise TypeError("Cannot infer the width of an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise TypeError("Ragged matrix row %r" % (r,))
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [list(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return IntMatrix.from_columns(self.rows, self.ncols)

    def apply(self, vector):
        if len(vector) != self.ncols:
            raise TypeError("Cannot apply a %dx%d matrix to a vector of length %d"
                            % (self.nrows, self.ncols, len(vector)))
        return [sum(a * b for a, b in zip(r, vector) if a and b) for r in self.rows]

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[other * a for a in r] for r in self.rows], self.ncols)
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise TypeError("Cannot multiply %r by %r" % (self.shape, other.shape))
        cols = other.columns()
        return IntMatrix([[sum(a * b for a, b in zip(r, c) if a and b) for c in cols]
                          for r in self.rows], other.ncols)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise TypeError("Cannot add %r to %r" % (self.shape, other.shape))
        return IntMatrix([[a + b for a, b in zip(r, s)]
                          for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise TypeError("Cannot stack %r over %r" % (self.shape, other.shape))
        return IntMatrix(self.rows + other.rows, self.ncols)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise TypeError("Cannot place %r beside %r" % (self.shape, other.shape))
        return IntMatrix([r + s for r, s in zip(self.rows, other.rows)],
                         self.ncols + other.ncols)

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def reduce(self, modulus):
        return IntMatrix([[a % modulus for a in r] for r in self.rows], self.ncols)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(map(tuple, self.rows))))

    def __repr__(self):
        return 'IntMatrix(%r, ncols=%d)' % (self.rows, self.ncols)


class SmithForm:
    """Result of smith_normal_form: left * A * right = diag(diagonal).

    ``diagonal`` lists the nonzero invariant factors d_1 | d_2 | ... ;
    ``rank`` is their number.  The transforms and their inverses are None
    when the decomposition was computed without transforms.
    """

    __slots__ = ('shape', 'diagonal', 'left', 'left_inv', 'right', 'right_inv')

    def __init__(self, shape, diagonal, left=None, left_inv=None, right=None,
                 right_inv=None):
        self.shape = shape
        self.diagonal = diagonal
        self.left = left
        self.left_inv = left_inv
        self.right = right
        self.right_inv = right_inv

    @property
    def rank(self):
        return len(self.diagonal)

    def kernel_basis(self):
        """Columns of ``right`` spanning the integral kernel."""
        n = self.shape[1]
        return [[self.right.rows[i][j] for i in range(n)] for j in range(self.rank, n)]

    def __repr__(self):
        return 'SmithForm(shape=%r, diagonal=%r)' % (self.shape, self.diagonal)


class _Reducer:
    """Elimination state for the Smith normal form."""

    def __init__(self, matrix, transforms):
        m, n = matrix.shape
        self.m, self.n = m, n
        self.a = [list(r) for r in matrix.rows]
        self.transforms = transforms
        if transforms:
            self.u = [[int(i == j) for j in range(m)] for i in range(m)]
            self.ui = [[int(i == j) for j in range(m)] for i in range(m)]
            self.v = [[int(i == j) for j in range(n)] for i in range(n)]
            self.vi = [[int(i == j) for j in range(n)] for i in range(n)]

    # Row operations act on u (rows) and ui (columns, inversely).
    def add_row(self, i, j, q):
        """row_i += q * row_j"""
        a = self.a
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        if self.transforms:
            u = self.u
            u[i] = [x + q * y for x, y in zip(u[i], u[j])]
            for r in self.ui:
                r[j] -= q * r[i]

    def swap_rows(self, i, j):
        if i == j:
            return
        a = self.a
        a[i], a[j] = a[j], a[i]
        if self.transforms:
            self.u[i], self.u[j] = self.u[j], self.u[i]
            for r in self.ui:
                r[i], r[j] = r[j], r[i]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        if self.transforms:
            self.u[i] = [-x for x in self.u[i]]
            for r in self.ui:
                r[i] = -r[i]

    # Column operations act on v (columns) and vi (rows, inversely).
    def add_column(self, j, i, q):
        """col_j += q * col_i"""
        for r in self.a:
            if r[i]:
                r[j] += q * r[i]
        if self.transforms:
            for r in self.v:
                if r[i]:
                    r[j] += q * r[i]
            vi = self.vi
            vi[i] = [x - q * y for x, y in zip(vi[i], vi[j])]

    def swap_columns(self, i, j):
        if i == j:
            return
        for r in self.a:
            r[i], r[j] = r[j], r[i]
        if self.transforms:
            for r in self.v:
                r[i], r[j] = r[j], r[i]
            self.vi[i], self.vi[j] = self.vi[j], self.vi[i]

    def smallest_entry(self, t):
        best = None
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def run(self):
        a = self.a
        t = 0
        while t < min(self.m, self.n):
            best = self.smallest_entry(t)
            if best is None:
                break
            _, i, j = best
            self.swap_rows(t, i)
            self.swap_columns(t, j)
            while True:
                p = a[t][t]
                clean = True
                for i in range(t + 1, self.m):
                    if a[i][t]:
                        self.add_row(i, t, -(a[i][t] // p))
                        clean = clean and not a[i][t]
                for j in range(t + 1, self.n):
                    if a[t][j]:
                        self.add_column(j, t, -(a[t][j] // p))
                        clean = clean and not a[t][j]
                if not clean:
                    # A remainder is smaller than the pivot; move it in.
                    cand = [(abs(a[i][t]), i, t) for i in range(t + 1, self.m) if a[i][t]]
                    cand += [(abs(a[t][j]), t, j)
                             for j in range(t + 1, self.n) if a[t][j]]
                    _, i, j = min(cand)
                    self.swap_rows(t, i)
                    self.swap_columns(t, j)
                    continue
                bad = self._non_divisible_row(t)
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t

    def _non_divisible_row(self, t):
        p = self.a[t][t]
        if abs(p) == 1:
            return None
        for i in range(t + 1, self.m):
            row = self.a[i]
            for j in range(t + 1, self.n):
                if row[j] % p:
                    return i
        return None


def smith_normal_form(matrix, transforms=True):
    """Smith normal form of an integer matrix.

    Returns a SmithForm with left * matrix * right diagonal; the diagonal
    entries are positive and form a divisibility chain.
    """
    assert isinstance(matrix, IntMatrix), repr(matrix)
    red = _Reducer(matrix, transforms)
    rank = red.run()
    diagonal = [red.a[i][i] for i in range(rank)]
    if not transforms:
        return SmithForm(matrix.shape, diagonal)
    m, n = matrix.shape
    return SmithForm(matrix.shape, diagonal,
                     IntMatrix(red.u, m), IntMatrix(red.ui, m),
                     IntMatrix(red.v, n), IntMatrix(red.vi, n))


def rank_mod(matrix, p):
    """Rank of an integer matrix reduced mod the prime p."""
    snf = smith_normal_form(matrix, transforms=False)
    return sum(1 for d in snf.diagonal if d % p)


class FGAbelianGroup:
    """Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k.

    The invariant factors are normalized into a divisibility chain with no
    unit entries, so equality is group isomorphism.

    Usage::

        FGAbelianGroup(1, [2, 3])        # Z x Z/6
        FGAbelianGroup.cyclic(4)         # Z/4
        FGAbelianGroup.free(2)           # Z^2
    """

    __slots__ = ('rank', 'invariant_factors')

    def __init__(self, rank=0, torsion=()):
        if rank < 0:
            raise ValueError("Cannot have negative rank %r" % (rank,))
        self.rank = rank
        self.invariant_factors = _invariant_factors(torsion)

    @classmethod
    def free(cls, rank=1):
        return cls(rank)

    @classmethod
    def cyclic(cls, order):
        if order == 0:
            return cls(1)
        return cls(0, [order])

    @classmethod
    def trivial(cls):
        return cls(0)

    def elementary_divisors(self):
        """Prime powers of the torsion part, sorted by prime then size."""
        out = []
        for d in self.invariant_factors:
            out.extend(p ** e for p, e in factorint(d).items())
        return sorted(out, key=lambda q: (min(factorint(q)), q))

    def primes(self):
        return sorted({p for d in self.invariant_factors for p in factorint(d)})

    def localize(self, p):
        """The p-local group: same rank, p-primary torsion only."""
        return FGAbelianGroup(self.rank, [p ** e for d in self.invariant_factors
                                          for q, e in factorint(d).items() if q == p])

    def torsion_order(self):
        return functools.reduce(operator.mul, self.invariant_factors, 1)

    def is_trivial(self):
        return self.rank == 0 and not self.invariant_factors

    def __add__(self, other):
        if not isinstance(other, FGAbelianGroup):
            return NotImplemented
        return FGAbelianGroup(self.rank + other.rank,
                              self.invariant_factors + other.invariant_factors)

    def __eq__(self, other):
        if not isinstance(other, FGAbelianGroup):
            return NotImplemented
        return self.rank == other.rank and \
            self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash((self.rank, self.invariant_factors))

    def __repr__(self):
        return 'FGAbelianGroup(%d, %r)' % (self.rank, list(self.invariant_factors))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append('Z')
        elif self.rank > 1:
            parts.append('Z^%d' % self.rank)
        parts.extend('Z/%d' % d for d in self.invariant_factors)
        return ' x '.join(parts) if parts else '0'

    def to_json(self):
        return {'rank': self.rank, 'invariant_factors': list(self.invariant_factors)}

    @classmethod
    def from_json(cls, data):
        return cls(data['rank'], data['invariant_factors'])


def _invariant_factors(orders):
    """Normalize arbitrary cyclic orders into an invariant-factor chain."""
    powers = {}
    for d in orders:
        if d <= 0:
            raise ValueError("Cannot use %r as a torsion order" % (d,))
        for p, e in factorint(d).items():
            powers.setdefault(p, []).append(p ** e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    chain = [1] * length
    for qs in powers.values():
        qs.sort(reverse=True)
        for i, q in enumerate(qs):
            chain[i] *= q
    return tuple(sorted(chain))


class LatticeQuotient:
    """A presented subquotient L/D of Z^dim.

    ``basis`` spans the lattice L (linearly independent vectors);
    ``relations`` are vectors of L generating D.  The quotient is put in
    Smith form, giving cyclic generators (torsion first, then free) and a
    coordinate function from L onto the normalized coordinates.

    When ``projection`` is given it must be an integer matrix P with
    P * b_i = e_i for the basis vectors; otherwise one is derived.
    """

    __slots__ = ('dim', 'basis', 'group', 'orders', 'generators',
                 '_solve', '_mix', '_offset')

    def __init__(self, dim, basis, relations=(), projection=None):
        self.dim = dim
        self.basis = [list(b) for b in basis]
        if projection is not None:
            self._solve = _ProjectionSolver(projection, self.basis)
        else:
            self._solve = _SmithSolver(dim, self.basis)
        rel = [self._solve(r) for r in relations]
        ell = len(self.basis)
        snf = smith_normal_form(IntMatrix.from_columns(rel, ell) if rel
                                else IntMatrix.zeros(ell, 0))
        diag = snf.diagonal
        self._mix = snf.left
        # Components with d = 1 are dropped.
        self._offset = sum(1 for d in diag if d == 1)
        self.orders = [d for d in diag if d > 1] + [0] * (ell - len(diag))
        mix_inv = snf.left_inv
        self.generators = []
        for k in range(self._offset, ell):
            c = mix_inv.column(k)
            self.generators.append(_combine(self.basis, c, dim))
        self.group = FGAbelianGroup(ell - len(diag), [d for d in diag if d > 1])

    def coordinates(self, vector):
        """Normalized coordinates of an element of L (torsion entries reduced)."""
        c = self._solve(vector)
        w = self._mix.apply(c)[self._offset:]
        return [x % d if d else x for x, d in zip(w, self.orders)]

    def element(self, coords):
        """A representative vector in Z^dim for the given coordinates."""
        if len(coords) != len(self.generators):
            raise TypeError("Cannot use %r as coordinates of %s" % (coords, self.group))
        return _combine(self.generators, coords, self.dim)

    def contains(self, vector):
        try:
            self._solve(vector)
        except EqHomotopyError:
            return False
        return True

    def normalize(self, coords):
        return [x % d if d else x for x, d in zip(coords, self.orders)]

    def is_zero(self, coords):
        return not any(self.normalize(coords))

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return '<LatticeQuotient %s in Z^%d>' % (self.group, self.dim)


def _combine(vectors, coefficients, dim):
    out = [0] * dim
    for v, c in zip(vectors, coefficients):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return out


class _ProjectionSolver:

    def __init__(self, projection, basis):
        self.projection = projection
        self.basis = basis

    def __call__(self, vector):
        c = self.projection.apply(vector)
        if _combine(self.basis, c, len(vector)) != list(vector):
            raise EqHomotopyError("Vector %r is not in the lattice" % (vector,))
        return c


class _SmithSolver:
    """Coordinates with respect to an arbitrary independent basis."""

    def __init__(self, dim, basis):
        self.dim = dim
        if basis:
            snf = smith_normal_form(IntMatrix.from_columns(basis, dim))
            if snf.rank != len(basis):
                raise EqHomotopyError("Cannot use dependent vectors as a lattice basis")
            self.snf = snf
        else:
            self.snf = None

    def __call__(self, vector):
        if self.snf is None:
            if any(vector):
                raise EqHomotopyError("Vector %r is not in the zero lattice" % (vector,))
            return []
        y = self.snf.left.apply(list(vector))
        c = []
        for i, d in enumerate(self.snf.diagonal):
            if y[i] % d:
                raise EqHomotopyError("Vector %r is not in the lattice" % (vector,))
            c.append(y[i] // d)
        if any(y[len(self.snf.diagonal):]):
            raise EqHomotopyError("Vector %r is not in the lattice" % (vector,))
        return self.snf.right.apply(c)


def homology_quotient(outgoing, incoming, dim):
    """ker(outgoing) / im(incoming) for integer matrices around Z^dim.

    ``outgoing`` has dim columns and ``incoming`` has dim rows.
    """
    if outgoing.ncols != dim or incoming.nrows != dim:
        raise TypeError("Cannot build homology at Z^%d from %r and %r"
                        % (dim, outgoing.shape, incoming.shape))
    snf = smith_normal_form(outgoing)
    basis = snf.kernel_basis()
    projection = IntMatrix(snf.right_inv.rows[snf.rank:], dim)
    return LatticeQuotient(dim, basis, incoming.columns(), projection=projection)


def induced_matrix(source, target, func):
    """Matrix of the map source -> target induced by ``func`` on ambient vectors."""
    cols = [target.coordinates(func(g)) for g in source.generators]
    return IntMatrix.from_columns(cols, len(target.generators))


def is_well_defined(matrix, source_orders, target_orders):
    """Whether an integer matrix defines a homomorphism between the presented groups."""
    for j, d in enumerate(source_orders):
        if not d:
            continue
        for i, e in enumerate(target_orders):
            x = matrix.rows[i][j] * d
            if (e and x % e) or (not e and x):
                return False
    return True


def map_kernel(matrix, source_orders, target_orders):
    """Kernel of a homomorphism given in normalized coordinates.

    Returns a LatticeQuotient inside the source coordinate space Z^s.
    """
    k, s = matrix.shape
    torsion_rows = [i for i, e in enumerate(target_orders) if e]
    extra = IntMatrix([[target_orders[i] if i == r else 0 for r in torsion_rows]
                       for i in range(k)], len(torsion_rows))
    block = matrix.hstack(-extra) if torsion_rows else matrix
    snf = smith_normal_form(block)
    spanning = [v[:s] for v in snf.kernel_basis()]
    basis = _lattice_basis(spanning, s)
    relations = [[d if i == j else 0 for i in range(s)]
                 for j, d in enumerate(source_orders) if d]
    logger.debug('kernel of %dx%d map: lattice rank %d, %d relations',
                 k, s, len(basis), len(relations))
    return LatticeQuotient(s, basis, relations)


def map_cokernel(matrix, source_orders, target_orders):
    """Cokernel of a homomorphism, inside the target coordinate space Z^k."""
    k = matrix.nrows
    basis = IntMatrix.identity(k).rows
    relations = [[e if i == j else 0 for i in range(k)]
                 for j, e in enumerate(target_orders) if e]
    relations += matrix.columns()
    return LatticeQuotient(k, basis, relations, projection=IntMatrix.identity(k))


def _lattice_basis(vectors, dim):
    """An independent basis of the lattice spanned by ``vectors``."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    snf = smith_normal_form(IntMatrix.from_columns(vectors, dim))
    ui = snf.left_inv
    return [[d * x for x in ui.column(i)] for i, d in enumerate(snf.diagonal)]


def lattice_span_dimension(vectors, p):
    """Dimension over F_p of the span of the given integer vectors."""
    vectors = [v for v in vectors if any(x % p for x in v)]
    if not vectors:
        return 0
    return rank_mod(IntMatrix(vectors), p)


def cartesian_vectors(orders):
    """All coordinate vectors of a finite presented group (small groups only)."""
    if any(d == 0 for d in orders):
        raise ValueError("Cannot enumerate an infinite group")
    return [list(c) for c in itertools.product(*[range(d) for d in orders])]
