"""
The :mod:`cli` module is the ``libsnake`` command. Every subcommand reads
from files or standard input and writes its results to standard output;
diagnostics and log lines go to standard error.

Exit codes are EXIT_OK when the requested check passed, EXIT_INVALID when
the input is well formed but not what it should be, and EXIT_USAGE for
bad arguments, unreadable files and unparseable sequences.
"""

import sys
import json
import logging
import argparse

from libsnake.locals import (SNAKE, COIL, KINDS, EXIT_OK, EXIT_INVALID,
                             EXIT_USAGE, START)
from libsnake.error import (LibSnakeError, NonIntegerToken, InvalidDimension,
                            InvalidVertex, ConfigError, DimensionOutOfRange)
from libsnake.config import Budget, SearchConfig, search_defaults
from libsnake.util import check_dimension, check_vertex
from libsnake.loader import SequenceLoader
from libsnake.hypercube import (parse_sequence, format_sequence,
                                format_vertex, walk, transitions_from_walk,
                                close_coil, validate)
from libsnake.exact import optimal_length
from libsnake.beam import search, fitness_factory
from libsnake.records import bounds_table, check_records

logger = logging.getLogger(__name__)

# Raised for these, the exit code is EXIT_USAGE; other LibSnakeErrors are
# EXIT_INVALID
_USAGE_ERRORS = (NonIntegerToken, InvalidDimension, InvalidVertex,
                 ConfigError, OSError, UnicodeDecodeError)

# Not cached: a file may change between two run() calls
_loader = SequenceLoader([])


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise _UsageError('%s: error: %s' % (self.prog, message))


class _Command(object):

    """
    Holds the streams of one run() call and the handlers of every
    subcommand.
    """

    def __init__(self, stdin, stdout, stderr):
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr

    def write(self, *lines):
        for line in lines:
            self.stdout.write('%s\n' % line)

    def write_json(self, obj):
        json.dump(obj, self.stdout)
        self.stdout.write('\n')

    def read_sequence(self, filename):
        if filename is None or filename == '-':
            return parse_sequence(self.stdin.read())
        return _loader.load(filename)

    # Subcommands

    def verify(self, args):
        check_dimension(args.dim)
        seq = self.read_sequence(args.file)
        closing_added = False
        if args.kind == COIL and not args.strict:
            try:
                closed = close_coil(seq, args.dim)
            except DimensionOutOfRange:
                closed = seq
            closing_added = len(closed) > len(seq)
            seq = closed
        report = validate(seq, args.dim, args.kind)
        if args.format == 'json':
            result = report.to_dict()
            if args.kind == COIL:
                result['closing_added'] = closing_added
            self.write_json(result)
        else:
            self.write(report.summary())
            if closing_added:
                self.write('  closing transition %d added' % seq[-1])
            self.write(*('  %s' % v for v in report.violations))
        if report.valid:
            return EXIT_OK
        return EXIT_INVALID

    def walk(self, args):
        check_dimension(args.dim)
        check_vertex(args.start, args.dim)
        seq = self.read_sequence(args.file)
        self.write(*walk(seq, args.dim, args.start))
        return EXIT_OK

    def exact(self, args):
        limits = {}
        if args.max_nodes is not None:
            limits['max_nodes'] = args.max_nodes
        if args.max_seconds is not None:
            limits['max_seconds'] = args.max_seconds
        result = optimal_length(args.dim, args.kind, Budget(**limits))
        if args.format == 'json':
            self.write_json({'kind': result.kind,
                             'dimension': result.dimension,
                             'best_length': result.best_length,
                             'status': result.status,
                             'nodes': result.nodes,
                             'witness': list(result.witness)})
        else:
            self.write('best_length: %d' % result.best_length,
                       'status: %s' % result.status,
                       'nodes: %d' % result.nodes,
                       'witness: %s' % format_sequence(result.witness))
        return EXIT_OK

    def search(self, args):
        options = {}
        for key, value in (('beam_width', args.beam),
                           ('restarts', args.restarts),
                           ('temperature', args.temp),
                           ('max_seconds', args.max_seconds),
                           ('fitness', args.fitness)):
            if value is not None:
                options[key] = value
        config = SearchConfig(args.dim, args.kind, args.seed, **options)
        logger.info('running %r', config)
        outcome = search(config)
        if args.format == 'json':
            self.write_json({'kind': outcome.kind,
                             'dimension': args.dim,
                             'best_length': outcome.best_length,
                             'sequence': list(outcome.best),
                             'stats': outcome.stats})
        else:
            self.write('best_length: %d' % outcome.best_length,
                       'sequence: %s' % format_sequence(outcome.best))
        return EXIT_OK

    def records(self, args):
        if args.check:
            problems = check_records()
            for problem in problems:
                self.stderr.write('%s\n' % problem)
            if problems:
                self.write('%d check(s) failed' % len(problems))
                return EXIT_INVALID
            self.write('all checks passed')
            return EXIT_OK

        self.write('%3s  %-22s  %-22s' % ('n', SNAKE, COIL))
        for snake, coil in bounds_table().rows():
            self.write('%3d  %-22s  %-22s' % (snake.dimension,
                                               _format_entry(snake),
                                               _format_entry(coil)))
        return EXIT_OK

    def convert(self, args):
        if args.source == 'vertices':
            if args.to != 'transitions':
                raise _UsageError('vertices can only be converted to '
                                  'transitions')
            vertices = self.read_sequence(args.file)
            if args.dim is not None:
                check_dimension(args.dim)
                for v in vertices:
                    check_vertex(v, args.dim)
            self.write(format_sequence(transitions_from_walk(vertices)))
            return EXIT_OK

        if args.to == 'transitions':
            raise _UsageError('transitions can only be converted to '
                              'vertices or binary')
        if args.dim is None:
            raise _UsageError('--dim is required to convert transitions')
        check_dimension(args.dim)
        check_vertex(args.start, args.dim)
        vertices = walk(self.read_sequence(args.file), args.dim, args.start)
        if args.to == 'binary':
            self.write(*(format_vertex(v, args.dim) for v in vertices))
        else:
            self.write(*vertices)
        return EXIT_OK


def _format_entry(entry):
    text = '%d%s %s' % (entry.length, '*' if entry.optimal else '',
                        entry.source)
    if entry.previous is not None:
        text += ' (%d %s)' % entry.previous
    return text


def _build_parser():
    parser = _ArgumentParser(
        prog='libsnake',
        description='Snakes and coils in hypercubes: verify, search and '
                    'list records.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log to standard error (repeat for debug)')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def file_argument(command):
        command.add_argument('file', nargs='?', default=None, metavar='FILE',
                             help='sequence file, - or nothing for '
                                  'standard input')

    def format_argument(command):
        command.add_argument('--format', choices=['text', 'json'],
                             default='text')

    verify = commands.add_parser('verify', help='validate a snake or coil')
    verify.add_argument('--kind', choices=KINDS, required=True)
    verify.add_argument('--dim', type=int, required=True)
    verify.add_argument('--strict', action='store_true',
                        help='do not add a missing closing transition')
    format_argument(verify)
    file_argument(verify)

    walk_ = commands.add_parser('walk', help='print the walked vertices')
    walk_.add_argument('--dim', type=int, required=True)
    walk_.add_argument('--start', type=int, default=START)
    file_argument(walk_)

    exact = commands.add_parser('exact', help='exhaustive search')
    exact.add_argument('--kind', choices=KINDS, required=True)
    exact.add_argument('--dim', type=int, required=True)
    exact.add_argument('--max-nodes', type=int, default=None)
    exact.add_argument('--max-seconds', type=float, default=None)
    format_argument(exact)

    search_ = commands.add_parser('search', help='stochastic beam search')
    search_.add_argument('--kind', choices=KINDS, required=True)
    search_.add_argument('--dim', type=int, required=True)
    search_.add_argument('--seed', type=int, required=True)
    search_.add_argument('--beam', type=int, default=None,
                         help='beam width (default %d)'
                              % search_defaults.beam_width)
    search_.add_argument('--restarts', type=int, default=None)
    search_.add_argument('--temp', type=float, default=None,
                         help='selection temperature, 0 for truncation')
    search_.add_argument('--max-seconds', type=float, default=None)
    search_.add_argument('--fitness', choices=fitness_factory.ids(),
                         default=None)
    format_argument(search_)

    records = commands.add_parser('records', help='list the bounds table')
    records.add_argument('--check', action='store_true',
                         help='verify the corpus and the table')

    convert = commands.add_parser('convert', help='change representation')
    convert.add_argument('--from', dest='source',
                         choices=['transitions', 'vertices'],
                         default='transitions')
    convert.add_argument('--to', choices=['vertices', 'binary',
                                          'transitions'], required=True)
    convert.add_argument('--dim', type=int, default=None)
    convert.add_argument('--start', type=int, default=START)
    file_argument(convert)
    return parser


def _log_handler(stream, verbosity):
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: '
                                           '%(message)s'))
    package_logger = logging.getLogger('libsnake')
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO)
    return handler


def run(argv, stdout=None, stderr=None, stdin=None):
    """
    Run the command line *argv* (without the program name) and return its
    exit code. The streams default to the process' standard ones.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    stdin = stdin if stdin is not None else sys.stdin

    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as e:
        stderr.write('%s\n' % e)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    package_logger = logging.getLogger('libsnake')
    level = package_logger.level
    handler = None
    if args.verbose:
        handler = _log_handler(stderr, args.verbose)
    command = _Command(stdin, stdout, stderr)
    try:
        return getattr(command, args.command)(args)
    except _UsageError as e:
        stderr.write('libsnake %s: error: %s\n' % (args.command, e))
        return EXIT_USAGE
    except _USAGE_ERRORS as e:
        stderr.write('libsnake %s: %s\n' % (args.command, e))
        return EXIT_USAGE
    except LibSnakeError as e:
        stderr.write('libsnake %s: %s\n' % (args.command, e))
        return EXIT_INVALID
    finally:
        if handler is not None:
            package_logger.removeHandler(handler)
            package_logger.setLevel(level)


def main():
    sys.exit(run(sys.argv[1:]))
