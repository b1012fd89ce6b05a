import contextlib
import io
import json
from unittest import TestCase, main

from eqhomotopy import cli
from eqhomotopy._cache import clear_caches
from eqhomotopy.cli import VerifyCase, full_suite, anchor_suite, run, run_case


class BaseTestCase(TestCase):

    def run_cli(self, *argv):
        out = io.StringIO()
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            status = run(list(argv), out)
        return status, out.getvalue(), err.getvalue()

    def tearDown(self):
        clear_caches()


class ComputeTests(BaseTestCase):

    def test_point(self):
        status, out, _ = self.run_cli('compute', '--group', 'A5', '--grading', '0')
        self.assertEqual(status, 0)
        self.assertEqual(out.split(',')[0].strip(), 'Z')

    def test_generators(self):
        status, out, _ = self.run_cli('compute', '--group', 'C2', '--grading=-s')
        self.assertEqual(status, 0)
        self.assertEqual(out.strip(), 'Z/2, generator a_s')

    def test_json(self):
        status, out, _ = self.run_cli('compute', '--group', 'D6', '--grading=-g', '--json')
        self.assertEqual(status, 0)
        data = json.loads(out)
        self.assertEqual(data['text'], 'Z/3')
        self.assertEqual(data['schema'], cli.SCHEMA_VERSION)
        self.assertEqual(data['grading'], '-g')

    def test_prime(self):
        status, out, _ = self.run_cli('compute', '--group', 'A5', '--grading', '3-V3-V4',
                                      '--prime', '5')
        self.assertEqual(status, 0)
        self.assertEqual(out.split(',')[0].strip(), 'Z/5')

    def test_errors(self):
        status, _, err = self.run_cli('compute', '--group', 'S3', '--grading', '0')
        self.assertEqual(status, 1)
        self.assertTrue(err.startswith('error: '))
        status, _, err = self.run_cli('compute', '--group', 'D6', '--grading', 'V3')
        self.assertEqual(status, 1)

    def test_usage(self):
        status, _, _ = self.run_cli('compute', '--group', 'D6')
        self.assertNotEqual(status, 0)
        status, _, _ = self.run_cli()
        self.assertNotEqual(status, 0)


class OtherCommandTests(BaseTestCase):

    def test_mackey(self):
        status, out, _ = self.run_cli('mackey', '--group', 'D6', '--grading=-g', '--check')
        self.assertEqual(status, 0)
        self.assertTrue(out.splitlines()[0].startswith('pi_{-g} on D6'))
        self.assertIn('checks: ', out)

    def test_mackey_json(self):
        status, out, _ = self.run_cli('mackey', '--group', 'K4', '--grading', '3-V', '--json')
        self.assertEqual(status, 0)
        self.assertEqual(len(json.loads(out)['levels']), 5)

    def test_cellhom(self):
        status, out, _ = self.run_cli('cellhom', '--catalog', 'C2', '--n', '2')
        self.assertEqual(status, 0)
        self.assertEqual(out.splitlines(), ['H_0 = Z/2', 'H_1 = 0', 'H_2 = Z'])
        status, out, _ = self.run_cli('cellhom', '--catalog', 'C2', '--n', '2',
                                      '--coeff', '2')
        self.assertEqual(out.splitlines()[0], 'H_0 = F_2^1')
        status, out, _ = self.run_cli('cellhom', '--catalog', 'K4', '--n', '1', '--json',
                                      '--emit-complex')
        data = json.loads(out)
        self.assertEqual(data['groups']['3'], {'rank': 1, 'invariant_factors': []})
        self.assertIn('complex', data)

    def test_cellhom_bad_coefficients(self):
        status, _, _ = self.run_cli('cellhom', '--catalog', 'C2', '--n', '1', '--coeff', '4')
        self.assertEqual(status, 1)

    def test_families(self):
        status, out, _ = self.run_cli('families', '--group', 'D6')
        self.assertEqual(status, 0)
        self.assertEqual(len(out.splitlines()), 6)
        self.assertIn('{e, C2}  S={3}  c_e=-1/3, c_C2=1', out.splitlines())

    def test_marks(self):
        status, out, _ = self.run_cli('marks', '--group', 'C2', '--json')
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)['marks'], [[2, 1], [0, 1]])


class VerifyTests(BaseTestCase):

    def test_suites(self):
        ids = [case.id for case in anchor_suite()]
        self.assertEqual(len(ids), len(set(ids)))
        full = full_suite()
        self.assertGreater(len(full), len(ids))
        self.assertEqual([case.id for case in full[:len(ids)]], ids)
        self.assertEqual(len({case.id for case in full}), len(full))

    def test_run_case(self):
        ok, expected, got = run_case(VerifyCase('x', 'D6', '-s', 'Z/2', 'example'))
        self.assertTrue(ok)
        self.assertEqual(got, 'Z/2')
        ok, _, got = run_case(VerifyCase('y', 'D6', '-s', 'Z/3', 'example'))
        self.assertFalse(ok)
        ok, _, got = run_case(VerifyCase('z', 'D6', 'nonsense', 'Z', 'example'))
        self.assertFalse(ok)
        self.assertTrue(got.startswith('GradingError'))

    def test_families_case(self):
        ok, _, _ = run_case(VerifyCase('f', 'D10', None, None, 'derived', 'families'))
        self.assertTrue(ok)


if __name__ == '__main__':
    main()
