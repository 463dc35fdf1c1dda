"""Tests of the pwcanon command."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

from contextlib import redirect_stderr, redirect_stdout
import io
import json
import os
import tempfile
import unittest
from unittest import mock

import spruce.piecewise as pw
from spruce.piecewise import testing as pw_testing
from spruce.piecewise.scripts import pwcanon


ABS_TEXT = 'pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x }'


class PwcanonTestCase(unittest.TestCase):

    def __init__(self, *args, **kwargs):
        super(PwcanonTestCase, self).__init__(*args, **kwargs)
        self._tmpdir = None

    def run_main(self, *argv, stdin=''):
        stdout = io.StringIO()
        stderr = io.StringIO()
        with mock.patch('sys.stdin', io.StringIO(stdin)), \
                 redirect_stdout(stdout), redirect_stderr(stderr):
            status = pwcanon.main(list(argv))
        return status, stdout.getvalue(), stderr.getvalue()

    def setUp(self):
        super(PwcanonTestCase, self).setUp()
        self._tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmpdir.cleanup)

    def write_file(self, name, text):
        path = os.path.join(self._tmpdir.name, name)
        with open(path, 'w', encoding='utf-8') as file_:
            file_.write(text)
        return path

    def write_operator(self, name, p):
        return self.write_file(name, pw.pformat(p))


class TestCanon(PwcanonTestCase):

    def test_collapses_to_zero(self):
        path = self.write_file('sq.pw', 'pw{x<0: x*x; x=0: 0;'
                                        ' otherwise: x*x} - x^2')
        self.assertEqual(self.run_main('canon', path), (0, '0\n', ''))

    def test_stdin(self):
        status, out, _ = self.run_main('canon', stdin=ABS_TEXT)
        self.assertEqual(status, 0)
        self.assertEqual(out.strip(), ABS_TEXT)

    def test_nested(self):
        status, out, _ = self.run_main(
            'canon', '-',
            stdin='pw { x < 3 : pw { x < 1 : x^2 - 3 ; x = 1 : -5'
                  ' ; otherwise : x^3 - 7*x^2 + 16*x - 12 } ; x = 3 : 3'
                  ' ; otherwise : pw { x < 0 : -x ; x = 0 : 0'
                  ' ; otherwise : x } }')
        self.assertEqual(status, 0)
        self.assertEqual(out.strip(),
                         'pw { x < 1 : x^2 - 3 ; x = 1 : -5'
                         ' ; x < 3 : x^3 - 7*x^2 + 16*x - 12 ; x = 3 : 3'
                         ' ; otherwise : x }')

    def test_pseudo(self):
        text = 'pw { x < 0 : 0 ; x = 0 : x^2 ; otherwise : 0 }'
        self.assertEqual(self.run_main('canon', '--pseudo', stdin=text)[1],
                         'pw { x < 0 : 0 ; x = 0 : 0 ; otherwise : 0 }\n')
        self.assertEqual(self.run_main('canon', stdin=text)[1], '0\n')
        self.assertEqual(self.run_main('canon', '--pseudo',
                                       stdin='pw { x < 0 : 1 ; x = 0 : 1'
                                             ' ; otherwise : 1 }')[1],
                         '1\n')

    def test_json(self):
        status, out, _ = self.run_main('canon', '--json', stdin=ABS_TEXT)
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out),
                         {'breakpoints': ['0'], 'pieces': ['-x', '0', 'x']})

    def test_domain_option(self):
        self.assertEqual(self.run_main('--domain', 'rational', 'canon',
                                       stdin='(x^2 - 1)/(x - 1)')[1],
                         'x + 1\n')

    def test_domain_environment(self):
        with mock.patch.dict(os.environ, {'PWCANON_DOMAIN': 'rational'}):
            status, out, _ = self.run_main('canon', stdin='1/(x - 1)')
        self.assertEqual((status, out), (0, '1 / (x - 1)\n'))


class TestEval(PwcanonTestCase):

    def test_abs(self):
        self.assertEqual(self.run_main('eval', '--at', '-5', stdin=ABS_TEXT),
                         (0, '5\n', ''))

    def test_fraction(self):
        self.assertEqual(self.run_main('eval', '--at=-5/2',
                                       stdin=ABS_TEXT)[1],
                         '5/2\n')

    def test_undefined(self):
        self.assertEqual(self.run_main('--domain', 'rational', 'eval',
                                       '--at', '1', stdin='1/(x - 1)')[1],
                         'undef\n')

    def test_invalid_point(self):
        status, out, err = self.run_main('eval', '--at', '0.5',
                                         stdin=ABS_TEXT)
        self.assertEqual(status, 2)
        self.assertEqual(out, '')
        self.assertTrue(err.startswith('pwcanon: error: '))


class TestEquiv(PwcanonTestCase):

    def test_equivalent(self):
        path1 = self.write_file('a.pw', ABS_TEXT)
        path2 = self.write_file('b.pw', 'pw { x < 0 : -x ; otherwise : x }')
        self.assertEqual(self.run_main('equiv', path1, path2),
                         (0, 'true\n', ''))

    def test_different(self):
        path1 = self.write_file('a.pw', ABS_TEXT)
        path2 = self.write_file('b.pw', 'x')
        self.assertEqual(self.run_main('equiv', path1, path2),
                         (1, 'false\n', ''))

    def test_abs_squared_minus_x_squared(self):
        path1 = self.write_file('a.pw',
                                '({0}) * ({0}) - x^2'.format(ABS_TEXT))
        path2 = self.write_file('b.pw', '0')
        self.assertEqual(self.run_main('equiv', path1, path2),
                         (0, 'true\n', ''))

    def test_spurious_point(self):
        path1 = self.write_file('a.pw', 'pw { x < 0 : 0 ; x = 0 : x^2 ;'
                                         ' otherwise : 0 }')
        path2 = self.write_file('b.pw', '0')
        self.assertEqual(self.run_main('equiv', path1, path2),
                         (0, 'true\n', ''))

    def test_delta(self):
        path1 = self.write_operator('a.pw', pw_testing.DELTA0)
        path2 = self.write_file('b.pw', '0')
        self.assertEqual(self.run_main('equiv', path1, path2),
                         (1, 'false\n', ''))

    def test_abs_and_neg_abs(self):
        path1 = self.write_operator('a.pw', pw_testing.ABS)
        path2 = self.write_operator('b.pw', pw_testing.NEG_ABS)
        self.assertEqual(self.run_main('equiv', path1, path2),
                         (1, 'false\n', ''))


class TestRefine(PwcanonTestCase):

    def test_abs(self):
        self.assertEqual(
            self.run_main('refine', '--points', '-1', stdin=ABS_TEXT)[1],
            'pw { x < -1 : -x ; x = -1 : 1 ; x < 0 : -x ; x = 0 : 0'
            ' ; otherwise : x }\n')

    def test_json(self):
        status, out, _ = self.run_main('refine', '--points=1/2,-1', '--json',
                                       stdin=ABS_TEXT)
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out),
                         {'breakpoints': ['-1', '0', '1/2'],
                          'pieces': ['-x', '-x', '-x', '0', 'x', 'x', 'x']})


class TestBench(PwcanonTestCase):

    def test_json(self):
        status, out, _ = self.run_main('bench', '--breakpoints', '1000',
                                       '--reps', '5', '--json')
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(report['canonicalize_calls'], 2001)
        self.assertEqual(report['seed'], 0)
        self.assertEqual(len(report['times']), 5)
        self.assertLessEqual(report['max_comparisons'],
                             report['comparison_bound'])

    def test_text(self):
        status, out, _ = self.run_main('bench', '--breakpoints', '10',
                                       '--reps', '2', '--seed', '7')
        self.assertEqual(status, 0)
        self.assertIn('seed: 7', out)
        self.assertIn('canonicalize calls: 21', out)

    def test_invalid(self):
        status, _, err = self.run_main('bench', '--breakpoints', '10',
                                       '--reps', '0')
        self.assertEqual(status, 2)
        self.assertIn('reps', err)


class TestErrors(PwcanonTestCase):

    def test_syntax_error(self):
        status, out, err = self.run_main('canon', stdin='x +')
        self.assertEqual(status, 2)
        self.assertEqual(out, '')
        self.assertIn('syntax error', err)

    def test_non_monotone(self):
        status, _, err = self.run_main(
            'canon', stdin='pw { x = 0 : 1 ; x < 0 : 0 ; otherwise : 0 }')
        self.assertEqual(status, 2)
        self.assertIn('not strictly increasing', err)

    def test_not_in_domain(self):
        self.assertEqual(self.run_main('canon', stdin='1/x')[0], 2)

    def test_missing_file(self):
        self.assertEqual(self.run_main('canon',
                                       os.path.join(self._tmpdir.name,
                                                    'missing.pw'))[0],
                         2)

    def test_unknown_domain(self):
        self.assertEqual(self.run_main('--domain', 'spam', 'canon',
                                       stdin='x')[0],
                         2)


if __name__ == '__main__':
    unittest.main()
