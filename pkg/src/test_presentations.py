from unittest import TestCase, main

from eqhomotopy._cache import clear_caches
from eqhomotopy.errors import GradingError
from eqhomotopy.group_core import make_group
from eqhomotopy.presentations import (PRESENTATIONS, Generator, SummandFamily,
                                      exponent_bound, graded_piece_of_presentation,
                                      k4_negative_piece, k4_positive_piece, presentation)
from eqhomotopy.reps import VirtualRep, parse_grading


class BaseTestCase(TestCase):

    def assertPiece(self, name, V, expected, p=None, msg=None):
        piece = graded_piece_of_presentation(name, V, p)
        if str(piece.group) != expected:
            message = '%s at %s is %s, not %s (monomials %r)' % (
                name, V, piece.group, expected, piece.labels)
            if msg is not None:
                message += ' : %s' % msg
            raise self.failureException(message)
        return piece

    def tearDown(self):
        clear_caches()


class CyclicTests(BaseTestCase):

    def test_c2(self):
        self.assertEqual(self.assertPiece('c2', (0, 0), 'Z').labels, [('1', 0)])
        self.assertEqual(self.assertPiece('c2', (0, -1), 'Z/2').labels, [('a_s', 2)])
        self.assertPiece('c2', (-3, 3), 'Z/2')

    def test_c2_from_grading(self):
        C2 = make_group('C2')
        self.assertPiece('c2', parse_grading(C2, '-3 + 3*s'), 'Z/2')

    def test_cp(self):
        C3 = make_group('C3')
        self.assertPiece('cp', VirtualRep(C3, {}), 'Z')
        self.assertPiece('cp', parse_grading(C3, '-l'), 'Z/3')
        self.assertPiece('cp', (0, -1), 'Z/5', p=5)

    def test_need_odd_prime(self):
        for p in (None, 2, 9):
            with self.subTest(p=p):
                with self.assertRaises(GradingError):
                    presentation('cp', p)
        with self.assertRaises(GradingError):
            presentation('dihedral', 4)


class DihedralTests(BaseTestCase):

    def test_d6(self):
        D6 = make_group('D6')
        self.assertPiece('dihedral', parse_grading(D6, '1 + s - g'), 'Z')
        self.assertPiece('dihedral', parse_grading(D6, '-s'), 'Z/2')
        self.assertPiece('dihedral', parse_grading(D6, '-g'), 'Z/3')
        self.assertPiece('dihedral', VirtualRep(D6, {}), 'Z')


class A5Tests(BaseTestCase):

    def test_zero(self):
        A5 = make_group('A5')
        for name in ('a5-3local', 'a5-5local'):
            with self.subTest(name=name):
                self.assertPiece(name, VirtualRep(A5, {}), 'Z')


class K4Tests(BaseTestCase):

    def test_cones(self):
        K4 = make_group('K4')
        for text, expected in (('3 - V', 'Z'), ('-V', 'Z/2'), ('1 - V', 'Z/2 x Z/2'),
                               ('2 - V', '0'), ('V - 3', 'Z'), ('0', 'Z')):
            for name in ('k4-positive', 'k4-negative'):
                with self.subTest(grading=text, name=name):
                    self.assertPiece(name, parse_grading(K4, text), expected)

    def test_coordinates(self):
        self.assertEqual(str(graded_piece_of_presentation('k4-positive', (3, -1)).group), 'Z')

    def test_cone_bounds(self):
        with self.assertRaises(GradingError):
            k4_positive_piece(0, -1)
        with self.assertRaises(GradingError):
            k4_negative_piece(0, 0)

    def test_unequal_coefficients(self):
        V = VirtualRep(make_group('K4'), {'V1': 1})
        with self.assertRaises(GradingError):
            graded_piece_of_presentation('k4-positive', V)


class PresentationTests(BaseTestCase):

    def test_catalog(self):
        self.assertEqual(len(PRESENTATIONS), 7)
        self.assertEqual(exponent_bound(2), 9)
        with self.assertRaises(GradingError):
            presentation('s3')

    def test_wrong_coordinates(self):
        with self.assertRaises(GradingError):
            presentation('c2').piece((1, 2, 3))

    def test_monomial_order(self):
        family = SummandFamily([Generator('x', (1,), 2), Generator('y', (2,), 0)],
                               ['N', 'N'], order=4)
        self.assertEqual(family.monomial_order([0, 0]), 4)
        self.assertEqual(family.monomial_order([1, 0]), 2)
        self.assertEqual(family.monomial_order([0, 3]), 4)
        free = SummandFamily([Generator('x', (1,), 3)], ['N'])
        self.assertEqual(free.monomial_order([0]), 0)
        self.assertEqual(free.monomial_order([2]), 3)


if __name__ == '__main__':
    main()
