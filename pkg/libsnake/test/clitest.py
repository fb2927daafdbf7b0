import io
import os
import json
import shutil
import tempfile
import unittest

from libsnake.locals import EXIT_OK, EXIT_INVALID, EXIT_USAGE
from libsnake.path import records_path
from libsnake.loader import SequenceLoader
from libsnake.hypercube import format_sequence, parse_sequence
from libsnake.cli import run

A4 = records_path('a4.seq')


class CliTest(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def write_file(self, name, text):
        filename = os.path.join(self.directory, name)
        with io.open(filename, 'w', encoding='utf-8') as file:
            file.write(text)
        return filename

    def run_cli(self, argv, stdin=''):
        self.out = io.StringIO()
        self.err = io.StringIO()
        return run(argv, stdout=self.out, stderr=self.err,
                   stdin=io.StringIO(stdin))


class VerifyTest(CliTest):

    def test_record_coil(self):
        code = self.run_cli(['verify', '--kind', 'coil', '--dim', '10', A4])
        self.assertEqual(code, EXIT_OK)
        self.assertIn('valid, length 366', self.out.getvalue())

    def test_mutated_record(self):
        seq = list(SequenceLoader().load(A4))
        seq[1] = 0
        filename = self.write_file('a4-mutated.seq', format_sequence(seq))
        code = self.run_cli(['verify', '--kind', 'coil', '--dim', '10',
                             filename])
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('invalid', self.out.getvalue())

    def test_strict(self):
        code = self.run_cli(['verify', '--kind', 'coil', '--dim', '10',
                             '--strict', A4])
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('NotClosed', self.out.getvalue())

    def test_bogus_flag(self):
        self.assertEqual(self.run_cli(['verify', '--bogus-flag', 'x']),
                         EXIT_USAGE)
        self.assertEqual(self.out.getvalue(), '')
        self.assertIn('error', self.err.getvalue())

    def test_no_command(self):
        self.assertEqual(self.run_cli([]), EXIT_USAGE)

    def test_json(self):
        code = self.run_cli(['verify', '--kind', 'snake', '--dim', '2',
                             '--format', 'json', '-'], stdin='0,1,0\n')
        self.assertEqual(code, EXIT_INVALID)
        report = json.loads(self.out.getvalue())
        self.assertEqual(list(report), ['kind', 'dimension', 'length',
                                        'valid', 'violations'])
        self.assertEqual(report['violations'],
                         [{'positions': [0, 3], 'reason': 'ChordAdjacency'}])

    def test_json_is_clean_when_verbose(self):
        code = self.run_cli(['-vv', 'verify', '--kind', 'coil', '--dim',
                             '10', '--format', 'json', A4])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(self.out.getvalue())['valid'])

    def test_stdin(self):
        code = self.run_cli(['verify', '--kind', 'coil', '--dim', '2'],
                            stdin='0 1 0 1')
        self.assertEqual(code, EXIT_OK)

    def test_missing_file(self):
        missing = os.path.join(self.directory, 'missing.seq')
        code = self.run_cli(['verify', '--kind', 'snake', '--dim', '3',
                             missing])
        self.assertEqual(code, EXIT_USAGE)
        self.assertNotEqual(self.err.getvalue(), '')

    def test_unparseable(self):
        filename = self.write_file('bad.seq', '0,x,2')
        code = self.run_cli(['verify', '--kind', 'snake', '--dim', '3',
                             filename])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn('token 1', self.err.getvalue())

    def test_bad_dimension(self):
        code = self.run_cli(['verify', '--kind', 'snake', '--dim', '0'],
                            stdin='0')
        self.assertEqual(code, EXIT_USAGE)

    def test_file_read_on_every_run(self):
        filename = self.write_file('x.seq', '0,1,0')
        argv = ['verify', '--kind', 'snake', '--dim', '2', filename]
        self.assertEqual(self.run_cli(argv), EXIT_INVALID)
        self.write_file('x.seq', '0,1')
        self.assertEqual(self.run_cli(argv), EXIT_OK)

    def test_closing_reported(self):
        code = self.run_cli(['verify', '--kind', 'coil', '--dim', '2'],
                            stdin='0,1,0')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('closing transition 1 added', self.out.getvalue())
        self.run_cli(['verify', '--kind', 'coil', '--dim', '2',
                      '--format', 'json'], stdin='0,1,0')
        report = json.loads(self.out.getvalue())
        self.assertTrue(report['closing_added'])
        self.assertEqual(report['length'], 4)

    def test_closed_coil_not_reported(self):
        self.run_cli(['verify', '--kind', 'coil', '--dim', '2',
                      '--format', 'json'], stdin='0,1,0,1')
        self.assertFalse(json.loads(self.out.getvalue())['closing_added'])
        self.run_cli(['verify', '--kind', 'coil', '--dim', '2'],
                     stdin='0,1,0,1')
        self.assertNotIn('added', self.out.getvalue())

    def test_out_of_range_is_invalid(self):
        code = self.run_cli(['verify', '--kind', 'coil', '--dim', '2'],
                            stdin='0,1,0,2')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('DimensionOutOfRange', self.out.getvalue())


class CommandsTest(CliTest):

    def test_walk(self):
        code = self.run_cli(['walk', '--dim', '10'], stdin='0,1,2,3,0')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(self.out.getvalue().split(),
                         ['0', '1', '3', '7', '15', '14'])

    def test_walk_start(self):
        self.run_cli(['walk', '--dim', '3', '--start', '5'], stdin='0')
        self.assertEqual(self.out.getvalue().split(), ['5', '4'])

    def test_exact(self):
        code = self.run_cli(['exact', '--kind', 'snake', '--dim', '4'])
        self.assertEqual(code, EXIT_OK)
        self.assertIn('best_length: 7', self.out.getvalue())
        self.assertIn('status: proven', self.out.getvalue())

    def test_exact_budget(self):
        code = self.run_cli(['exact', '--kind', 'coil', '--dim', '6',
                             '--max-nodes', '50', '--format', 'json'])
        self.assertEqual(code, EXIT_OK)
        result = json.loads(self.out.getvalue())
        self.assertEqual(result['status'], 'budget-exhausted')

    def test_exact_bad_budget(self):
        code = self.run_cli(['exact', '--kind', 'coil', '--dim', '3',
                             '--max-nodes', '0'])
        self.assertEqual(code, EXIT_USAGE)

    def test_search(self):
        argv = ['search', '--kind', 'coil', '--dim', '3', '--beam', '8',
                '--seed', '1']
        code = self.run_cli(argv)
        self.assertEqual(code, EXIT_OK)
        first = self.out.getvalue()
        self.assertIn('best_length: 6', first)
        self.run_cli(argv)
        self.assertEqual(self.out.getvalue(), first)

    def test_search_json(self):
        code = self.run_cli(['search', '--kind', 'snake', '--dim', '4',
                             '--seed', '3', '--temp', '0', '--format',
                             'json'])
        self.assertEqual(code, EXIT_OK)
        outcome = json.loads(self.out.getvalue())
        self.assertEqual(len(outcome['sequence']), outcome['best_length'])

    def test_search_bad_seed(self):
        code = self.run_cli(['search', '--kind', 'snake', '--dim', '4',
                             '--seed', '-1'])
        self.assertEqual(code, EXIT_USAGE)

    def test_records(self):
        self.assertEqual(self.run_cli(['records']), EXIT_OK)
        lines = self.out.getvalue().splitlines()
        self.assertEqual(len(lines), 21)
        self.assertIn('2687', lines[13])
        self.assertIn('(362 MDWP15)', lines[10])

    def test_records_check(self):
        self.assertEqual(self.run_cli(['records', '--check']), EXIT_OK)
        self.assertIn('all checks passed', self.out.getvalue())

    def test_convert_to_vertices(self):
        code = self.run_cli(['convert', '--to', 'vertices', '--dim', '3'],
                            stdin='0,1,2')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(self.out.getvalue().split(), ['0', '1', '3', '7'])

    def test_convert_to_binary(self):
        self.run_cli(['convert', '--from', 'transitions', '--to', 'binary',
                      '--dim', '3'], stdin='0,1')
        self.assertEqual(self.out.getvalue().split(), ['000', '001', '011'])

    def test_convert_from_vertices(self):
        code = self.run_cli(['convert', '--from', 'vertices', '--to',
                             'transitions'], stdin='0\n1\n3\n7\n')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(parse_sequence(self.out.getvalue()), (0, 1, 2))

    def test_convert_not_a_walk(self):
        code = self.run_cli(['convert', '--from', 'vertices', '--to',
                             'transitions'], stdin='0 3')
        self.assertEqual(code, EXIT_INVALID)

    def test_convert_needs_dimension(self):
        code = self.run_cli(['convert', '--to', 'vertices'], stdin='0')
        self.assertEqual(code, EXIT_USAGE)


if __name__ == '__main__':
    unittest.main()
