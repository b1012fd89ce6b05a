from unittest import TestCase, main

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from eqhomotopy._cache import clear_caches
from eqhomotopy.abelian import FGAbelianGroup, IntMatrix
from eqhomotopy.cellhom import (ChainComplex, bockstein_consistency,
                                burnside_coefficient_homology, cohomology, conj_chain_map,
                                homology, k4_cocycle_check, k4_dimension_sequences,
                                k4_f2_cycle_check, k4_generator_check, level_res, level_tr,
                                model_sylow, orbit_complex, sphere_complex, sphere_model,
                                tau_action_check, tau_sign)
from eqhomotopy.errors import ComplexError, GradingError
from eqhomotopy.group_core import subgroup_lattice


def domain_rank(matrix, domain):
    m, n = matrix.shape
    if not m or not n:
        return 0
    return DomainMatrix.from_list_sympy(m, n, matrix.tolist()).convert_to(domain).rank()


class BaseTestCase(TestCase):

    def assertHomology(self, C, expected, msg=None):
        got = {d: str(g) for d, g in C.homology().items()}
        if got != expected:
            message = 'homology %r != %r' % (got, expected)
            if msg is not None:
                message += ' : %s' % msg
            raise self.failureException(message)

    def assertReport(self, report):
        if not report.ok:
            raise self.failureException('%r: %s' % (report, '; '.join(report.issues)))
        if not report.checked:
            raise self.failureException('%r checked nothing' % (report,))

    def tearDown(self):
        clear_caches()


class ChainComplexTests(BaseTestCase):

    def test_shape_mismatch(self):
        with self.assertRaises(ComplexError):
            ChainComplex({0: ['a'], 1: ['b', 'c']}, {1: IntMatrix([[1]])})

    def test_square_zero(self):
        with self.assertRaises(ComplexError):
            ChainComplex({0: ['a'], 1: ['b'], 2: ['c']},
                         {1: IntMatrix([[1]]), 2: IntMatrix([[1]])})

    def test_interval(self):
        C = ChainComplex({0: ['a', 'b'], 1: ['ab']}, {1: IntMatrix([[1], [-1]])})
        self.assertHomology(C, {0: 'Z', 1: '0'})
        self.assertEqual(C.reduce(3).homology(), {0: 1, 1: 0})
        self.assertEqual(C.cohomology()[0], FGAbelianGroup(1))
        self.assertEqual(homology(C), C.homology())
        self.assertEqual(cohomology(C.reduce(2)), {0: 1, 1: 0})
        self.assertEqual(C.to_json()['degrees']['1']['boundary'], [[1], [-1]])


class SphereTests(BaseTestCase):

    def test_c2_spheres(self):
        self.assertHomology(sphere_complex('C2', 2), {0: 'Z/2', 1: '0', 2: 'Z'})
        self.assertHomology(sphere_complex('C2', 3), {0: 'Z/2', 1: '0', 2: 'Z/2', 3: '0'})
        self.assertEqual(sphere_complex('C2', 2, 'F_2').homology(), {0: 1, 1: 1, 2: 1})

    def test_cp_spheres(self):
        for p in (3, 5):
            for n in (1, 2, 3):
                expected = {d: ('Z/%d' % p if d % 2 == 0 else '0') for d in range(2 * n)}
                expected[2 * n] = 'Z'
                with self.subTest(p=p, n=n):
                    self.assertHomology(sphere_complex('C%d' % p, n), expected)

    def test_zero_sphere(self):
        self.assertHomology(sphere_complex('K4', 0), {0: 'Z'})
        self.assertHomology(sphere_complex('C2', 0), {0: 'Z'})

    def test_k4_low_degrees(self):
        self.assertHomology(sphere_complex('K4', 1),
                            {0: 'Z/2', 1: 'Z/2 x Z/2', 2: '0', 3: 'Z'})

    def test_orbit_space(self):
        # cochains on S^{2s}/C2
        C = orbit_complex('C2', 2)
        self.assertEqual(C.cohomology()[2], FGAbelianGroup(1))

    def test_bad_models(self):
        for catalog in ('C4', 'C6', 'D6', 'A5'):
            with self.subTest(catalog=catalog):
                with self.assertRaises(GradingError):
                    sphere_model(catalog, 1)
        with self.assertRaises(GradingError):
            sphere_model('C2', -1)

    def test_model_sylow(self):
        self.assertEqual(model_sylow(sphere_model('K4', 1)).order, 4)
        self.assertEqual(model_sylow(sphere_model('C5', 1)).order, 5)
        self.assertEqual(model_sylow(sphere_model('C2', 1)).order, 2)


class LevelMapTests(BaseTestCase):

    def test_transfer_after_restriction(self):
        X = sphere_model('C2', 2)
        G = X.ambient
        e = subgroup_lattice(G)['e'].representative
        R = level_res(X, G, e, 2)
        T = level_tr(X, e, G, 2)
        self.assertEqual((T * R).tolist(), [[2]])

    def test_maps_need_subgroups(self):
        X = sphere_model('C2', 1)
        e = subgroup_lattice(X.ambient)['e'].representative
        with self.assertRaises(ComplexError):
            level_res(X, e, X.ambient, 0)
        with self.assertRaises(ComplexError):
            level_tr(X, X.ambient, e, 0)

    def test_reflection(self):
        X = sphere_model('C3', 1)
        lattice = subgroup_lattice(X.ambient)
        reflection = lattice['C2'].representative.generators[0]
        rotation = lattice['C3'].representative.generators[0]
        maps = conj_chain_map('C3', 1, reflection)
        self.assertEqual([maps[d].tolist() for d in (0, 1, 2)], [[[1]], [[1]], [[-1]]])
        maps = conj_chain_map('C3', 1, rotation)
        self.assertEqual([maps[d].tolist() for d in (0, 1, 2)], [[[1]], [[1]], [[1]]])
        with self.assertRaises(ComplexError):
            conj_chain_map('C3', 1, (1, 0))

    def test_tau_sign(self):
        self.assertEqual([tau_sign(t) for t in range(6)], [1, 1, -1, -1, 1, 1])

    def test_tau_action(self):
        for p in (3, 5):
            for n in range(1, 6):
                with self.subTest(p=p, n=n):
                    self.assertReport(tau_action_check(p, n))

    def test_burnside_coefficients(self):
        self.assertEqual(burnside_coefficient_homology(sphere_model('C2', 2)),
                         {0: 1, 1: 0, 2: 1})


class K4SphereTests(BaseTestCase):

    def test_sequences(self):
        self.assertEqual(k4_dimension_sequences(1), ([1, 3, 2, 1], [1, 2, 0]))
        f2, _ = k4_dimension_sequences(2)
        self.assertEqual(f2, [1, 3, 5, 4, 3, 2, 1])

    def test_sequences_match_homology(self):
        for n in (1, 2):
            f2, z = k4_dimension_sequences(n)
            C = sphere_complex('K4', n)
            H = C.homology()
            with self.subTest(n=n):
                self.assertEqual([C.reduce(2).homology()[d] for d in range(3 * n + 1)], f2)
                self.assertEqual([len(H[d].invariant_factors) for d in range(3 * n)], z)
                self.assertEqual(H[3 * n], FGAbelianGroup(1))

    def test_rank_oracle(self):
        for n in (1, 2, 3):
            C = sphere_complex('K4', n)
            H = C.homology()
            even = {d: sum(1 for f in H[d].invariant_factors if f % 2 == 0) for d in H}
            for d in C.degrees():
                dims = {}
                for name, domain in (('Q', QQ), ('F_2', GF(2)), ('F_3', GF(3))):
                    dims[name] = (C.rank(d) - domain_rank(C.boundary(d), domain)
                                  - domain_rank(C.boundary(d + 1), domain))
                with self.subTest(n=n, d=d):
                    self.assertEqual(dims['Q'], H[d].rank)
                    self.assertEqual(dims['F_3'], H[d].rank)
                    self.assertEqual(dims['F_2'], H[d].rank + even[d] + even.get(d - 1, 0))

    def test_bockstein(self):
        for n in (1, 2, 3):
            with self.subTest(n=n):
                self.assertReport(bockstein_consistency(n))

    def test_f2_cycles(self):
        for n in (1, 2):
            with self.subTest(n=n):
                self.assertReport(k4_f2_cycle_check(n))

    def test_generators(self):
        for n in (1, 2):
            with self.subTest(n=n):
                self.assertReport(k4_generator_check(n))

    def test_cocycles(self):
        self.assertReport(k4_cocycle_check(1))


if __name__ == '__main__':
    main()
