import unittest

from libsnake.locals import (SNAKE, COIL, REPEATED_VERTEX, CHORD_ADJACENCY,
                             NOT_CLOSED, DIMENSION_OUT_OF_RANGE, TOO_SHORT)
from libsnake.error import (NonIntegerToken, DimensionOutOfRange,
                            InvalidPermutation, InvalidDimension,
                            InvalidVertex, NotAWalk)
from libsnake.config import validation_config
from libsnake.loader import SequenceLoader
from libsnake.path import records_path
from libsnake.hypercube import (parse_sequence, format_sequence,
                                format_vertex, is_adjacent, walk,
                                transitions_from_walk, close_coil,
                                apply_dimension_permutation,
                                canonical_relabel, reverse_sequence,
                                rotate_sequence, transition_counts,
                                validate_snake, validate_coil, validate,
                                Violation, ValidationReport, Hypercube,
                                hypercube, vertex_parity)


def reasons(report):
    return [v.reason for v in report.violations]


class ParseSequenceTest(unittest.TestCase):

    def test_commas(self):
        self.assertEqual(parse_sequence('0,1,2'), (0, 1, 2))

    def test_mixed_separators(self):
        self.assertEqual(parse_sequence('0,1,\n2,3'), (0, 1, 2, 3))
        self.assertEqual(parse_sequence(' 0 ,\t1,,2\n\n'), (0, 1, 2))

    def test_empty(self):
        self.assertEqual(parse_sequence(''), ())
        self.assertEqual(parse_sequence(' ,\n'), ())

    def test_non_integer_token(self):
        with self.assertRaises(NonIntegerToken) as caught:
            parse_sequence('0,x,2')
        self.assertEqual(caught.exception.position, 1)
        self.assertEqual(caught.exception.token, 'x')

    def test_position_ignores_empty_tokens(self):
        with self.assertRaises(NonIntegerToken) as caught:
            parse_sequence(',,0,,1,-2')
        self.assertEqual(caught.exception.position, 2)

    def test_format(self):
        self.assertEqual(format_sequence((0, 1, 2)), '0,1,2')
        self.assertEqual(format_sequence((0, 1), ' '), '0 1')
        self.assertEqual(parse_sequence(format_sequence((3, 0, 12))),
                         (3, 0, 12))


class WalkTest(unittest.TestCase):

    def test_walk(self):
        self.assertEqual(walk([0, 1, 2, 3, 0], 10), [0, 1, 3, 7, 15, 14])

    def test_start(self):
        self.assertEqual(walk([0], 3, 5), [5, 4])

    def test_empty(self):
        self.assertEqual(walk([], 4), [0])

    def test_out_of_range(self):
        with self.assertRaises(DimensionOutOfRange) as caught:
            walk([0, 1, 3], 3)
        self.assertEqual(caught.exception.position, 2)

    def test_bad_arguments(self):
        self.assertRaises(InvalidDimension, walk, [0], 0)
        self.assertRaises(InvalidDimension, walk, [0], 32)
        self.assertRaises(InvalidVertex, walk, [0], 3, 8)

    def test_adjacent(self):
        self.assertTrue(is_adjacent(0, 4))
        self.assertTrue(is_adjacent(5, 7))
        self.assertFalse(is_adjacent(3, 3))
        self.assertFalse(is_adjacent(0, 3))

    def test_transitions_from_walk(self):
        self.assertEqual(transitions_from_walk([0, 1, 3, 7, 15, 14]),
                         (0, 1, 2, 3, 0))
        self.assertEqual(transitions_from_walk([6]), ())
        with self.assertRaises(NotAWalk) as caught:
            transitions_from_walk([0, 1, 2])
        self.assertEqual(caught.exception.position, 1)

    def test_format_vertex(self):
        self.assertEqual(format_vertex(5, 4), '0101')
        self.assertEqual(format_vertex(0, 1), '0')


class SnakeValidationTest(unittest.TestCase):

    def test_single_edge(self):
        report = validate_snake([0], 1)
        self.assertTrue(report.valid)
        self.assertEqual(report.length, 1)
        self.assertEqual(report.kind, SNAKE)

    def test_empty_is_a_snake(self):
        self.assertTrue(validate_snake([], 3).valid)

    def test_chord(self):
        report = validate_snake([0, 1, 0], 2)
        self.assertFalse(report.valid)
        self.assertEqual(report.violations,
                         (Violation((0, 3), CHORD_ADJACENCY),))

    def test_repeated_vertex(self):
        report = validate_snake([0, 0], 2)
        self.assertEqual(reasons(report), [REPEATED_VERTEX])
        self.assertEqual(report.violations[0].positions, (0, 2))

    def test_out_of_range_stops(self):
        report = validate_snake([0, 0, 5], 3)
        self.assertEqual(report.violations,
                         (Violation((2, 3), DIMENSION_OUT_OF_RANGE),))

    def test_longest_snakes(self):
        self.assertTrue(validate_snake([0, 1, 2, 0, 3, 1, 0], 4).valid)
        self.assertTrue(validate_snake([0, 1, 2], 3).valid)
        self.assertEqual(reasons(validate_snake([0, 1, 2, 1], 3)),
                         [CHORD_ADJACENCY])

    def test_record(self):
        seq = SequenceLoader().load(records_path('a1.seq'))
        report = validate_snake(seq, 11)
        self.assertTrue(report.valid)
        self.assertEqual(report.length, 712)

    def test_violation_cap(self):
        old = validation_config.max_violations
        validation_config.config(max_violations=3)
        try:
            report = validate_snake([0] * 20, 1)
        finally:
            validation_config.config(max_violations=old)
        self.assertEqual(len(report.violations), 3)

    def test_default_cap(self):
        report = validate_snake([0, 1] * 200, 2)
        self.assertEqual(len(report.violations), 100)


class CoilValidationTest(unittest.TestCase):

    def test_square(self):
        report = validate_coil([0, 1, 0, 1], 2)
        self.assertTrue(report.valid)
        self.assertEqual(report.length, 4)
        self.assertEqual(report.kind, COIL)

    def test_hexagon(self):
        self.assertTrue(validate_coil([0, 1, 2, 0, 1, 2], 3).valid)

    def test_not_closed(self):
        report = validate_coil([0, 1, 2], 3)
        self.assertFalse(report.valid)
        self.assertIn(NOT_CLOSED, reasons(report))

    def test_order(self):
        self.assertEqual(reasons(validate_coil([0, 1], 2)),
                         [TOO_SHORT, NOT_CLOSED])
        self.assertEqual(reasons(validate_coil([0, 0], 2)),
                         [TOO_SHORT])

    def test_out_of_range_only(self):
        self.assertEqual(reasons(validate_coil([0, 4], 2)),
                         [DIMENSION_OUT_OF_RANGE])

    def test_chord(self):
        # Hamiltonian cycle of Q3: it has chords
        report = validate_coil([0, 1, 0, 2, 0, 1, 0, 2], 3)
        self.assertFalse(report.valid)
        self.assertIn(CHORD_ADJACENCY, reasons(report))

    def test_repeated_vertex(self):
        report = validate_coil([0, 1, 1, 0, 0, 0], 2)
        self.assertIn(REPEATED_VERTEX, reasons(report))

    def test_coil_is_not_a_snake(self):
        self.assertFalse(validate_snake([0, 1, 0, 1], 2).valid)

    def test_dispatch(self):
        self.assertEqual(validate([0, 1, 0, 1], 2, COIL).kind, COIL)
        self.assertEqual(validate([0, 1, 0, 1], 2, SNAKE).kind, SNAKE)

    def test_close_coil(self):
        self.assertEqual(close_coil([0, 1, 0], 2), (0, 1, 0, 1))
        self.assertEqual(close_coil([0, 1, 0, 1], 2), (0, 1, 0, 1))
        self.assertEqual(close_coil([0, 1], 3), (0, 1))
        self.assertRaises(DimensionOutOfRange, close_coil, [0, 3], 2)

    def test_record_needs_closing(self):
        seq = SequenceLoader().load(records_path('a4.seq'))
        self.assertEqual(len(seq), 365)
        self.assertEqual(reasons(validate_coil(seq, 10)), [NOT_CLOSED])
        report = validate_coil(close_coil(seq, 10), 10)
        self.assertTrue(report.valid)
        self.assertEqual(report.length, 366)


class ReportTest(unittest.TestCase):

    def test_to_dict(self):
        report = validate_snake([0, 1, 0], 2)
        d = report.to_dict()
        self.assertEqual(list(d), ['kind', 'dimension', 'length', 'valid',
                                   'violations'])
        self.assertEqual(d['violations'],
                         [{'positions': [0, 3], 'reason': CHORD_ADJACENCY}])
        self.assertFalse(d['valid'])

    def test_summary(self):
        self.assertEqual(validate_coil([0, 1, 0, 1], 2).summary(),
                         'coil in Q2: valid, length 4')
        self.assertEqual(ValidationReport(SNAKE, 3, 2, ()).summary(),
                         'snake in Q3: valid, length 2')


class SymmetryTest(unittest.TestCase):

    def test_permutation(self):
        self.assertEqual(apply_dimension_permutation([0, 1, 2], [2, 0, 1]),
                         (2, 0, 1))
        self.assertEqual(apply_dimension_permutation([0, 1], {0: 1, 1: 0}),
                         (1, 0))

    def test_bad_permutations(self):
        self.assertRaises(InvalidPermutation, apply_dimension_permutation,
                          [0, 1], [0, 0])
        self.assertRaises(InvalidPermutation, apply_dimension_permutation,
                          [0, 2], [1, 0])
        self.assertRaises(InvalidPermutation, apply_dimension_permutation,
                          [0], {0: 1, 2: 0})

    def test_canonical_relabel(self):
        self.assertEqual(canonical_relabel([3, 1, 3, 0]), (0, 1, 0, 2))
        self.assertEqual(canonical_relabel(()), ())
        seq = (5, 2, 5, 7, 2)
        self.assertEqual(canonical_relabel(canonical_relabel(seq)),
                         canonical_relabel(seq))

    def test_reverse_and_rotate(self):
        self.assertEqual(reverse_sequence([0, 1, 2]), (2, 1, 0))
        self.assertEqual(rotate_sequence([0, 1, 2, 3], 1), (1, 2, 3, 0))
        self.assertEqual(rotate_sequence([0, 1, 2, 3], -1), (3, 0, 1, 2))
        self.assertEqual(rotate_sequence([], 3), ())

    def test_transition_counts(self):
        counts = transition_counts([0, 1, 0, 1, 2])
        self.assertEqual(counts[0], 2)
        self.assertEqual(counts[2], 1)
        self.assertEqual(counts[3], 0)


class HypercubeTest(unittest.TestCase):

    def test_neighbors(self):
        cube = Hypercube(3)
        self.assertEqual(sorted(cube.neighbors(0)), [1, 2, 4])
        self.assertEqual(cube.neighbor_mask(0), (1 << 1) | (1 << 2)
                         | (1 << 4))
        self.assertEqual(cube.size, 8)

    def test_shared(self):
        self.assertIs(hypercube(4), hypercube(4))

    def test_masks(self):
        cube = Hypercube(3)
        self.assertEqual(cube.full_mask, 0xff)
        even = [v for v in range(8) if cube.even_mask >> v & 1]
        self.assertEqual(even, [0, 3, 5, 6])
        self.assertEqual(cube.parity_counts(0xff), (4, 4))
        self.assertEqual(vertex_parity(7), 1)

    def test_set_neighborhood(self):
        for n in range(1, 6):
            cube = Hypercube(n)
            for v in range(cube.size):
                self.assertEqual(cube.set_neighborhood(1 << v),
                                 cube.neighbor_mask(v))
        cube = Hypercube(4)
        pair = (1 << 0) | (1 << 15)
        self.assertEqual(cube.set_neighborhood(pair),
                         cube.neighbor_mask(0) | cube.neighbor_mask(15))

    def test_reach(self):
        cube = Hypercube(3)
        # without 0, 1 and 2, vertex 3 is only reachable through 7
        allowed = cube.full_mask & ~((1 << 1) | (1 << 2) | (1 << 0))
        reached = cube.reach(1 << 0, allowed)
        self.assertEqual(reached, allowed)
        self.assertEqual(cube.reach(1 << 0, 1 << 3), 0)


if __name__ == '__main__':
    unittest.main()
