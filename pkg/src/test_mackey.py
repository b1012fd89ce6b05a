from unittest import TestCase, main

from eqhomotopy._cache import clear_caches
from eqhomotopy.abelian import IntMatrix
from eqhomotopy.errors import SubgroupError
from eqhomotopy.group_core import make_group
from eqhomotopy.mackey import (assemble, burnside_functor, check_all, check_cohomological,
                               check_double_coset, check_functoriality, check_naturality,
                               check_sylow_isomorphism, check_transfer_oracle, check_weyl,
                               constant_functor, dual_constant_functor,
                               equivalent_up_to_signs, lewis_diagram,
                               top_level_via_transfers, zero_functor)


class BaseTestCase(TestCase):

    def assertLevels(self, M, expected, msg=None):
        got = {n: str(M.value(n)) for n in M.names()}
        if got != expected:
            message = 'levels of %r are %r, not %r' % (M, got, expected)
            if msg is not None:
                message += ' : %s' % msg
            raise self.failureException(message)

    def assertReport(self, report):
        if not report.ok:
            raise self.failureException('%r: %s' % (report, '; '.join(report.issues)))

    def tearDown(self):
        clear_caches()


class TemplateTests(BaseTestCase):

    def test_constant(self):
        M = constant_functor(make_group('A4'))
        self.assertLevels(M, {n: 'Z' for n in ('e', 'C2', 'C3', 'K4', 'A4')})
        self.assertEqual(M.tr('e', 'A4').tolist(), [[12]])
        self.assertEqual(M.res('A4', 'C3').tolist(), [[1]])
        for check in (check_cohomological, check_weyl, check_functoriality,
                      check_naturality, check_sylow_isomorphism, check_transfer_oracle):
            with self.subTest(check=check.__name__):
                self.assertReport(check(M))

    def test_dual_constant(self):
        M = dual_constant_functor(make_group('D10'))
        self.assertEqual(M.res('D10', 'e').tolist(), [[10]])
        self.assertEqual(M.tr('C2', 'D10').tolist(), [[1]])
        self.assertReport(check_cohomological(M))
        self.assertFalse(equivalent_up_to_signs(M, constant_functor(make_group('D10'))))

    def test_burnside_is_not_cohomological(self):
        M = burnside_functor(make_group('D6'))
        self.assertEqual(M.orders('D6'), (0, 0, 0, 0))
        self.assertEqual(M.orders('C2'), (0, 0))
        self.assertFalse(check_cohomological(M).ok)

    def test_zero(self):
        M = zero_functor(make_group('K4'))
        self.assertLevels(M, {n: '0' for n in ('e', 'H1', 'H2', 'H3', 'K4')})
        self.assertReport(check_all(M))

    def test_identity_and_missing_maps(self):
        M = constant_functor(make_group('K4'))
        self.assertEqual(M.res('K4', 'K4'), IntMatrix.identity(1))
        with self.assertRaises(SubgroupError):
            M.res('e', 'K4')
        with self.assertRaises(SubgroupError):
            M.tr('H1', 'H2')

    def test_transfers_at_sylow(self):
        M = constant_functor(make_group('A4'))
        self.assertEqual(str(top_level_via_transfers(M, 2)), 'Z')
        self.assertEqual(M.local(2).sylow.order, 4)
        with self.assertRaises(SubgroupError):
            zero_functor(make_group('A4')).local(2)


class AssembleTests(BaseTestCase):

    def test_k4_templates(self):
        K4 = make_group('K4')
        self.assertTrue(equivalent_up_to_signs(assemble(K4, 'V - 3'),
                                               dual_constant_functor(K4)))
        self.assertTrue(equivalent_up_to_signs(assemble(K4, '3 - V'), constant_functor(K4)))

    def test_a5_torsion(self):
        M = assemble('A5', '3 - V3 - V4')
        self.assertLevels(M, {'e': '0', 'C2': 'Z/2', 'C3': 'Z/3', 'K4': 'Z/2 x Z/2 x Z/2',
                              'C5': 'Z/5', 'D6': 'Z/6', 'D10': 'Z/10', 'A4': 'Z/6',
                              'A5': 'Z/30'})
        self.assertReport(check_transfer_oracle(M))
        self.assertEqual(M.tr('K4', 'A4').tolist(), [[1, 1, 1], [0, 0, 0]])
        self.assertEqual(M.res('A4', 'K4').tolist(), [[1, 0], [1, 0], [1, 0]])
        self.assertTrue(M.tr('C2', 'K4').reduce(2).is_zero())
        identity = IntMatrix.identity(3)
        moved = 0
        for g in M.weyl_generators('K4'):
            C = M.conj('K4', g).reduce(2)
            with self.subTest(g=g):
                self.assertEqual(C.shape, (3, 3))
                self.assertEqual(sorted(map(sum, C.rows)), [1, 1, 1])
                self.assertEqual(sorted(map(sum, C.columns())), [1, 1, 1])
                self.assertEqual((C * C * C).reduce(2), identity)
            moved += C != identity
        self.assertGreater(moved, 0)

    def test_a5_free(self):
        M = assemble('A5', 'V3 + V4 - V5 - 2')
        self.assertLevels(M, {n: 'Z' for n in M.names()})
        res = {H: abs(M.res('A5', H).rows[0][0]) for H in ('D6', 'A4', 'D10')}
        tr = {H: abs(M.tr(H, 'A5').rows[0][0]) for H in ('D6', 'A4', 'D10')}
        self.assertEqual(res, {'D6': 10, 'A4': 5, 'D10': 2})
        self.assertEqual(tr, {'D6': 1, 'A4': 1, 'D10': 3})

    def test_point_group(self):
        M = assemble('C1', '0')
        self.assertLevels(M, {'e': 'Z'})

    def test_small_groups(self):
        for group, text in (('D6', '-g'), ('D6', '1 + s - g'), ('K4', '1 - V')):
            M = assemble(group, text)
            with self.subTest(group=group, grading=text):
                self.assertReport(check_all(M))

    def test_double_coset_at_sylow(self):
        M = assemble('A4', '1 - V3')
        for p in (2, 3):
            with self.subTest(p=p):
                self.assertReport(check_double_coset(M, p))


class RenderingTests(BaseTestCase):

    def test_lewis_diagram(self):
        text = lewis_diagram(assemble('D6', '-g'))
        lines = text.splitlines()
        self.assertEqual(lines[0], 'pi_{-g} on D6')
        self.assertEqual(lines[1].split(), ['D6', 'Z/3'])
        self.assertIn('res', lines)
        self.assertIn('tr', lines)
        self.assertIn('conj', lines)

    def test_json(self):
        data = assemble('K4', '3 - V').to_json()
        self.assertEqual([level['name'] for level in data['levels']],
                         ['e', 'H1', 'H2', 'H3', 'K4'])
        self.assertEqual(len(data['res']), 7)
        self.assertEqual(data['name'], 'pi_{3 - V}')


if __name__ == '__main__':
    main()
