from unittest import TestCase, main

from hypothesis import given, settings, strategies as st

from eqhomotopy._cache import clear_caches
from eqhomotopy.errors import GradingError, SubgroupError
from eqhomotopy.group_core import make_group, subgroup_lattice
from eqhomotopy.reps import (VirtualRep, catalog, d2p_grade_transport, fixed_dim,
                             format_grading, group_kind, orientation_sign, parse_grading,
                             restrict)


class BaseTestCase(TestCase):

    def assertGrading(self, V, text, msg=None):
        if format_grading(V) != text:
            message = '%r is not %r' % (format_grading(V), text)
            if msg is not None:
                message += ' : %s' % msg
            raise self.failureException(message)

    def tearDown(self):
        clear_caches()


class CatalogTests(BaseTestCase):

    def test_kinds(self):
        for name, kind in (('C1', 'e'), ('C2', 'C2'), ('C7', 'Cp'), ('K4', 'K4'),
                           ('D10', 'D'), ('A4', 'A4'), ('A5', 'A5')):
            with self.subTest(group=name):
                self.assertEqual(group_kind(make_group(name)), kind)

    def test_dimensions(self):
        for name, dims in (('C2', {'1': 1, 's': 1}),
                           ('C5', {'1': 1, 'l': 2}),
                           ('K4', {'1': 1, 'V1': 1, 'V2': 1, 'V3': 1}),
                           ('D6', {'1': 1, 's': 1, 'g': 2}),
                           ('D14', {'1': 1, 's': 1, 'g': 2}),
                           ('A4', {'1': 1, 'V2': 2, 'V3': 3}),
                           ('A5', {'1': 1, 'V3': 3, 'V4': 4, 'V5': 5})):
            with self.subTest(group=name):
                self.assertEqual(catalog(make_group(name)).dims, dims)

    def test_fixed_dimensions(self):
        A5 = make_group('A5')
        lattice = subgroup_lattice(A5)
        V3 = VirtualRep(A5, {'V3': 1})
        self.assertEqual(fixed_dim(V3, lattice['C5']), 1)
        self.assertEqual(fixed_dim(V3, lattice['C2']), 1)
        self.assertEqual(fixed_dim(V3, lattice['K4']), 0)
        self.assertEqual(fixed_dim(VirtualRep(A5, {'V4': 1}), lattice['A4']), 1)
        for c in lattice:
            self.assertEqual(fixed_dim(VirtualRep(A5, {'1': 1}), c), 1)

    def test_fixed_dim_needs_subgroup(self):
        V = VirtualRep(make_group('D6'), {'s': 1})
        with self.assertRaises(SubgroupError):
            fixed_dim(V, make_group('A4'))

    def test_orientation(self):
        D6 = make_group('D6')
        lattice = subgroup_lattice(D6)
        reflection = lattice['C2'].representative.generators[0]
        rotation = lattice['C3'].representative.generators[0]
        s = VirtualRep(D6, {'s': 1})
        self.assertEqual(orientation_sign(s, reflection), -1)
        self.assertEqual(orientation_sign(s, rotation), 1)
        self.assertEqual(orientation_sign(2 * s, reflection), 1)
        A5 = make_group('A5')
        V3 = VirtualRep(A5, {'V3': 1})
        for g in A5.generators:
            self.assertEqual(orientation_sign(V3, g), 1)


class RestrictionTests(BaseTestCase):

    def test_tables(self):
        A5 = make_group('A5')
        lattice = subgroup_lattice(A5)
        V4 = VirtualRep(A5, {'V4': 1})
        self.assertGrading(restrict(V4, lattice['A4']), '1 + V3')
        self.assertGrading(restrict(V4, lattice['D10']), '2*g')
        self.assertGrading(restrict(V4, lattice['D6']), '1 + s + g')
        self.assertGrading(restrict(V4, lattice['K4']), '1 + V')
        self.assertGrading(restrict(V4, lattice['e']), '4')
        self.assertIs(restrict(V4, A5), V4)

    def test_compatible_with_fixed_points(self):
        for name in ('K4', 'D6', 'D10', 'A4', 'A5'):
            G = make_group(name)
            cat = catalog(G)
            for irrep in cat.names:
                V = VirtualRep(G, {irrep: 1})
                for c in subgroup_lattice(G):
                    W = restrict(V, c)
                    for K in subgroup_lattice(c.representative).subgroups():
                        with self.subTest(group=name, irrep=irrep, H=c.name):
                            self.assertEqual(fixed_dim(W, K), fixed_dim(V, K))

    def test_not_a_subgroup(self):
        with self.assertRaises(SubgroupError):
            restrict(VirtualRep(make_group('D6'), {'s': 1}), make_group('K4'))


class GradingTests(BaseTestCase):

    def test_parse(self):
        A5 = make_group('A5')
        self.assertEqual(parse_grading(A5, '3 - V3 - V4').coefficients, (3, -1, -1, 0))
        self.assertEqual(parse_grading(A5, '2*V5').coefficients, (0, 0, 0, 2))
        D6 = make_group('D6')
        self.assertEqual(parse_grading(D6, '1 + σ - 2 gamma'), VirtualRep(D6, [1, 1, -2]))
        self.assertEqual(parse_grading(D6, '-s'), VirtualRep(D6, {'s': -1}))
        self.assertEqual(parse_grading(make_group('C5'), '1+lambda')['l'], 1)

    def test_k4_shorthand(self):
        K4 = make_group('K4')
        V = parse_grading(K4, '3 - V')
        self.assertEqual(V.coefficients, (3, -1, -1, -1))
        self.assertGrading(V, '3 - V')
        self.assertGrading(parse_grading(K4, 'V1 - V2'), 'V1 - V2')

    def test_bad_gradings(self):
        D6 = make_group('D6')
        for text in ('', 'x', '2*', '1 + + s', '-3 + -2*s', 's V1'):
            with self.subTest(text=text):
                with self.assertRaises(GradingError):
                    parse_grading(D6, text)
        with self.assertRaises(GradingError):
            VirtualRep(D6, {'V3': 1})
        with self.assertRaises(GradingError):
            VirtualRep(D6, [1, 2])

    def test_format(self):
        D6 = make_group('D6')
        self.assertGrading(VirtualRep(D6, {'1': -2, 's': 1}), '-2 + s')
        self.assertGrading(VirtualRep(D6, {'g': -1}), '-g')
        self.assertGrading(VirtualRep(D6, {'g': 2}), '2*g')
        self.assertGrading(VirtualRep(D6, {}), '0')

    @settings(deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=4, max_size=4))
    def test_format_parses_back(self, coeffs):
        A5 = make_group('A5')
        V = VirtualRep(A5, coeffs)
        self.assertEqual(parse_grading(A5, format_grading(V)), V)

    def test_arithmetic(self):
        D6 = make_group('D6')
        V = VirtualRep(D6, [1, 1, -1])
        self.assertEqual(V.dim, 0)
        self.assertEqual((V + 2).trivial, 3)
        self.assertEqual((2 * V)['g'], -2)
        self.assertGrading(V - V, '0')
        with self.assertRaises(GradingError):
            V + VirtualRep(make_group('D10'), [1, 0, 0])


class TransportTests(BaseTestCase):

    def test_sides(self):
        self.assertEqual(tuple(d2p_grade_transport(1, 1, 1, 'C2')), (2, 2, True))
        self.assertEqual(tuple(d2p_grade_transport(1, 1, 1, 'Cp')), (2, 1, True))
        self.assertFalse(d2p_grade_transport(0, 1, 0, 'Cp').nonzero)
        with self.assertRaises(GradingError):
            d2p_grade_transport(0, 0, 0, 'D')


if __name__ == '__main__':
    main()
