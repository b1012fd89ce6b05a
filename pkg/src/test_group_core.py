from unittest import TestCase, main

from hypothesis import given, strategies as st

from eqhomotopy import group_core
from eqhomotopy._cache import clear_caches
from eqhomotopy.errors import GroupTooLargeError, SubgroupError, UnknownGroupError
from eqhomotopy.group_core import (PermGroup, compose, conjugate, double_coset_orbits,
                                   element_order, embedding_witness, group_to_json,
                                   identity, inverse, lattice_to_json, make_group, normalizer,
                                   omega_p, parse_group_id, structure_name, subgroup_lattice,
                                   sylow)


class BaseTestCase(TestCase):

    def assertLatticeShape(self, G, names, msg=None):
        got = subgroup_lattice(G).names()
        if got != list(names):
            message = 'lattice of %r is %r, not %r' % (G, got, list(names))
            if msg is not None:
                message += ' : %s' % msg
            raise self.failureException(message)

    def tearDown(self):
        clear_caches()


class PermutationTests(BaseTestCase):

    def test_compose_applies_right_first(self):
        g = (1, 2, 0)
        h = (1, 0, 2)
        self.assertEqual(compose(g, h), (2, 1, 0))
        self.assertEqual(compose(h, g), (0, 2, 1))

    @given(st.permutations(range(5)), st.permutations(range(5)))
    def test_inverse_and_conjugate(self, g, h):
        g, h = tuple(g), tuple(h)
        self.assertEqual(compose(g, inverse(g)), identity(5))
        self.assertEqual(element_order(conjugate(h, g)), element_order(g))

    def test_element_order(self):
        self.assertEqual(element_order((1, 2, 3, 4, 0)), 5)
        self.assertEqual(element_order(identity(3)), 1)


class CatalogTests(BaseTestCase):

    def test_parse_group_id(self):
        self.assertEqual(parse_group_id('D_10'), ('D', 10))
        self.assertEqual(parse_group_id('a5'), ('A', 5))
        with self.assertRaises(UnknownGroupError):
            parse_group_id('S3')

    def test_orders(self):
        for name, order in (('C1', 1), ('C2', 2), ('C7', 7), ('K4', 4), ('D6', 6),
                            ('D_14', 14), ('A4', 12), ('A5', 60)):
            with self.subTest(name=name):
                self.assertEqual(make_group(name).order, order)

    def test_unknown_groups(self):
        for name in ('D4', 'D8', 'A6', 'K8', 'X3'):
            with self.subTest(name=name):
                with self.assertRaises(UnknownGroupError):
                    make_group(name)

    def test_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            make_group('D4')

    def test_catalog_cache(self):
        G = make_group('A5')
        self.assertIs(make_group('A5'), G)
        clear_caches()
        self.assertIsNot(make_group('A5'), G)
        self.assertEqual(make_group('A5').order, 60)

    def test_structure_name(self):
        A5 = make_group('A5')
        self.assertEqual(structure_name(A5), 'A5')
        self.assertEqual(structure_name(sylow(A5, 2).representative), 'K4')

    def test_bad_permutation(self):
        with self.assertRaises(ValueError):
            PermGroup(3, [(0, 0, 1)])


class LatticeTests(BaseTestCase):

    def test_shapes(self):
        self.assertLatticeShape(make_group('K4'), ['e', 'H1', 'H2', 'H3', 'K4'])
        self.assertLatticeShape(make_group('D6'), ['e', 'C2', 'C3', 'D6'])
        self.assertLatticeShape(make_group('D10'), ['e', 'C2', 'C5', 'D10'])
        self.assertLatticeShape(make_group('A4'), ['e', 'C2', 'C3', 'K4', 'A4'])

    def test_a5(self):
        lattice = subgroup_lattice(make_group('A5'))
        self.assertEqual(sorted(lattice.names()),
                         sorted(['e', 'C2', 'C3', 'K4', 'C5', 'D6', 'D10', 'A4', 'A5']))
        self.assertEqual(lattice.names()[0], 'e')
        self.assertEqual(lattice.names()[-1], 'A5')
        self.assertEqual(len(lattice.subgroups()), 59)
        members = {c.name: len(c.members) for c in lattice}
        self.assertEqual(members, {'e': 1, 'C2': 15, 'C3': 10, 'K4': 5, 'C5': 6, 'D6': 10,
                                   'D10': 6, 'A4': 5, 'A5': 1})
        weyl = {c.name: c.weyl_order for c in lattice}
        self.assertEqual(weyl, {'e': 60, 'C2': 2, 'C3': 2, 'K4': 3, 'C5': 2, 'D6': 1,
                                'D10': 1, 'A4': 1, 'A5': 1})

    def test_k4_order_two_classes(self):
        lattice = subgroup_lattice(make_group('K4'))
        gens = [tuple(sorted(lattice['H%d' % i].representative.elements))[1]
                for i in (1, 2, 3)]
        self.assertEqual(gens, [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)])

    def test_subconjugacy(self):
        lattice = subgroup_lattice(make_group('A5'))
        self.assertTrue(lattice.le(lattice['C2'], lattice['D10']))
        self.assertTrue(lattice.le(lattice['K4'], lattice['A4']))
        self.assertFalse(lattice.le(lattice['C3'], lattice['D10']))
        self.assertFalse(lattice.le(lattice['K4'], lattice['D6']))
        for c in lattice:
            self.assertTrue(lattice.le(lattice['e'], c))
            self.assertTrue(lattice.le(c, lattice['A5']))

    def test_witnesses(self):
        lattice = subgroup_lattice(make_group('A4'))
        for c in lattice:
            for M in c.members:
                self.assertEqual(c.representative.conjugate(c.witnesses[M]), M)
                self.assertIs(lattice.class_of(M), c)

    def test_lookup_errors(self):
        lattice = subgroup_lattice(make_group('D6'))
        with self.assertRaises(SubgroupError):
            lattice['A4']
        with self.assertRaises(SubgroupError):
            lattice.class_of(make_group('A4'))

    def test_size_limit(self):
        old = group_core.MAX_GROUP_ORDER
        group_core.MAX_GROUP_ORDER = 10
        try:
            with self.assertRaises(GroupTooLargeError):
                subgroup_lattice(make_group('A4'))
        finally:
            group_core.MAX_GROUP_ORDER = old

    def test_json(self):
        data = lattice_to_json(subgroup_lattice(make_group('D10')))
        self.assertEqual([c['name'] for c in data['classes']], ['e', 'C2', 'C5', 'D10'])
        self.assertEqual(group_to_json(make_group('D10'))['order'], 10)


class SubgroupTests(BaseTestCase):

    def test_sylow(self):
        A5 = make_group('A5')
        self.assertEqual(sylow(A5, 2).name, 'K4')
        self.assertEqual(sylow(A5, 3).name, 'C3')
        self.assertEqual(sylow(A5, 5).name, 'C5')
        self.assertEqual(sylow(A5, 7).name, 'e')

    def test_normalizer(self):
        A5 = make_group('A5')
        P = sylow(A5, 2).representative
        self.assertEqual(structure_name(normalizer(A5, P)), 'A4')
        P = sylow(A5, 5).representative
        self.assertEqual(structure_name(normalizer(A5, P)), 'D10')

    def test_omega(self):
        A4 = make_group('A4')
        self.assertEqual(structure_name(omega_p(A4, 3)), 'K4')
        self.assertEqual(omega_p(A4, 2), A4)
        self.assertEqual(omega_p(make_group('A5'), 2), make_group('A5'))
        self.assertEqual(omega_p(make_group('D10'), 2).order, 5)

    def test_double_cosets(self):
        A5 = make_group('A5')
        lattice = subgroup_lattice(A5)
        K4 = lattice['K4'].representative
        A4 = normalizer(A5, K4)
        orbits = double_coset_orbits(A5, K4, A4)
        self.assertEqual(sorted(Q.order for Q, _ in orbits), [1, 4])
        for Q, g in orbits:
            self.assertEqual(Q, K4.intersection(A4.conjugate(g)))

    def test_double_coset_sizes(self):
        G = make_group('A4')
        lattice = subgroup_lattice(G)
        for P in lattice.subgroups():
            for c in lattice:
                H = c.representative
                orbits = double_coset_orbits(G, P, H)
                self.assertEqual(sum(P.order // Q.order for Q, _ in orbits),
                                 G.order // H.order)

    def test_double_cosets_need_subgroups(self):
        with self.assertRaises(SubgroupError):
            double_coset_orbits(make_group('D6'), make_group('C2'), make_group('D6'))

    def test_embedding_witness(self):
        A5 = make_group('A5')
        lattice = subgroup_lattice(A5)
        for K in lattice:
            for H in lattice:
                w = embedding_witness(A5, K.representative, H.representative)
                if lattice.le(K, H):
                    self.assertTrue(K.representative.conjugate(w) <= H.representative)
                else:
                    self.assertIsNone(w)

    def test_subgroup_generation(self):
        A4 = make_group('A4')
        g = sorted(A4.elements)[1]
        self.assertEqual(A4.subgroup([g]).order, element_order(g))
        with self.assertRaises(SubgroupError):
            A4.subgroup([(1, 0, 2, 3)])


if __name__ == '__main__':
    main()
