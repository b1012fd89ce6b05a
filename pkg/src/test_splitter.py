from unittest import TestCase, main

from eqhomotopy._cache import clear_caches
from eqhomotopy.abelian import FGAbelianGroup
from eqhomotopy.errors import GlueError, GradingError, UnknownGroupError
from eqhomotopy.group_core import make_group
from eqhomotopy.reps import VirtualRep, parse_grading
from eqhomotopy.splitter import (LocalizedResult, SylowModel, a5_two_local_transport,
                                 compute_homotopy, d2p_by_reduction, glue,
                                 localization_coherence, localized_homotopy,
                                 prime_sphere_homotopy, sylow_model)


def grading(group, text):
    G = make_group(group)
    return G, parse_grading(G, text)


class BaseTestCase(TestCase):

    def assertHomotopy(self, group, text, expected, msg=None):
        G, V = grading(group, text)
        got = str(compute_homotopy(G, V))
        if got != expected:
            message = 'pi^%s_{%s} is %s, not %s' % (group, text, got, expected)
            if msg is not None:
                message += ' : %s' % msg
            raise self.failureException(message)

    def tearDown(self):
        clear_caches()


class WorkedExampleTests(BaseTestCase):

    def test_c2(self):
        self.assertHomotopy('C2', '-3 + 3s', 'Z/2')
        self.assertHomotopy('C2', '0', 'Z')

    def test_d6(self):
        self.assertHomotopy('D6', '1 + s - g', 'Z')
        self.assertHomotopy('D6', '-s', 'Z/2')
        self.assertHomotopy('D6', '-g', 'Z/3')

    def test_k4(self):
        for text, expected in (('3 - V', 'Z'), ('-V', 'Z/2'), ('1 - V', 'Z/2 x Z/2'),
                               ('2 - V', '0'), ('V - 3', 'Z')):
            with self.subTest(grading=text):
                self.assertHomotopy('K4', text, expected)

    def test_a5(self):
        self.assertHomotopy('A5', '0', 'Z')
        self.assertHomotopy('A5', 'V3 + V4 - V5 - 2', 'Z')
        self.assertHomotopy('A5', '3 - V3 - V4', 'Z/30')

    def test_point_group(self):
        self.assertHomotopy('C1', '0', 'Z')
        self.assertHomotopy('C1', '2', '0')


class LocalizationTests(BaseTestCase):

    def test_local_parts(self):
        G, V = grading('A5', '3 - V3 - V4')
        self.assertEqual([str(localized_homotopy(G, V, p).group) for p in (2, 3, 5)],
                         ['Z/2', 'Z/3', 'Z/5'])

    def test_prime_not_dividing(self):
        G, V = grading('D6', '1 + s - g')
        self.assertEqual(localized_homotopy(G, V, 5).group, FGAbelianGroup(1))
        G, V = grading('D6', '1 - s')
        self.assertEqual(localized_homotopy(G, V, 5).group, FGAbelianGroup(0))

    def test_sylow_model(self):
        G, V = grading('A5', '3 - V3 - V4')
        model = sylow_model(G, V, 2)
        self.assertEqual((model.trivial_coefficient, model.coefficient), (2, -2))
        self.assertFalse(model.cohomological)
        self.assertEqual(model.degree, 2)
        self.assertEqual(model.sylow.order, 4)
        self.assertEqual(model.normalizer.order, 12)
        G, V = grading('A5', 'V3 + V4 - V5 - 2')
        model = sylow_model(G, V, 2)
        self.assertTrue(model.cohomological)
        self.assertEqual(model.degree, 3)

    def test_model_errors(self):
        G, V = grading('A5', '0')
        with self.assertRaises(UnknownGroupError):
            SylowModel(G, V, 7)
        K4 = make_group('K4')
        with self.assertRaises(GradingError):
            localized_homotopy(K4, VirtualRep(K4, {'V1': 1}), 2)

    def test_witnesses(self):
        G, V = grading('A5', '3 - V3 - V4')
        for p in (2, 3, 5):
            level = localized_homotopy(G, V, p).level
            with self.subTest(p=p):
                self.assertEqual(len(level.witnesses), len(level.orders))
                self.assertTrue(level.verify().ok)
                n = len(level.orders)
                for k, w in enumerate(level.witnesses):
                    self.assertEqual(level.coordinates(w), [int(i == k) for i in range(n)])

    def test_coherence(self):
        for group, text in (('A5', '3 - V3 - V4'), ('A5', 'V3 + V4 - V5 - 2'),
                            ('D10', '2 - s + g'), ('A4', '1 - V3')):
            with self.subTest(group=group, grading=text):
                report = localization_coherence(*grading(group, text))
                self.assertTrue(report.ok, report.issues)


class GlueTests(BaseTestCase):

    def local(self, p, rank, torsion=()):
        return LocalizedResult(p, FGAbelianGroup(rank, torsion), [], None)

    def test_glue(self):
        self.assertEqual(str(glue([self.local(2, 0, [2]), self.local(3, 0, [3])])), 'Z/6')
        self.assertEqual(str(glue([self.local(2, 1), self.local(5, 1, [5])])), 'Z x Z/5')

    def test_errors(self):
        with self.assertRaises(GlueError):
            glue([])
        with self.assertRaises(GlueError):
            glue([self.local(2, 1), self.local(3, 0)])
        with self.assertRaises(GlueError):
            glue([self.local(2, 0, [6])])


class CrossCheckTests(BaseTestCase):

    def test_prime_spheres(self):
        self.assertEqual(str(prime_sphere_homotopy('C2', -3, 3)), 'Z/2')
        self.assertEqual(str(prime_sphere_homotopy('C2', 2, -2)), 'Z')
        self.assertEqual(str(prime_sphere_homotopy('C3', 0, -1)), 'Z/3')

    def test_dihedral_reduction(self):
        for k, m, n in ((1, 1, -1), (0, -1, 0), (0, 0, -1), (1, -2, 1)):
            G = make_group('D6')
            V = VirtualRep(G, {'1': k, 's': m, 'g': n})
            with self.subTest(grading=str(V)):
                self.assertEqual(d2p_by_reduction(3, k, m, n), compute_homotopy(G, V))

    def test_a5_transport(self):
        G, V = grading('A5', '1 - V3 + V5')
        self.assertEqual(a5_two_local_transport(1, -1, 0, 1),
                         localized_homotopy(G, V, 2).group)


if __name__ == '__main__':
    main()
