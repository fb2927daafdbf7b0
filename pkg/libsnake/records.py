"""
The :mod:`records` module holds what is known about the longest snakes
and coils: the table of best lower bounds for dimensions 1 to 20, the
general coil bound for larger dimensions, and a corpus of record
sequences shipped as data files, which can be re-verified at any time.

Sources are citation keys; CORPUS_SOURCE marks the records whose sequences
are bundled in the corpus.
"""

import io
import logging
import functools
from dataclasses import dataclass

from libsnake.locals import (SNAKE, COIL, KINDS, CORPUS_SOURCE, TRIVIAL,
                             TABLE_MAX_DIMENSION, AK_MIN_DIMENSION)
from libsnake.error import (OutOfTable, PreconditionViolated, NotACoil,
                            CorpusError, LibSnakeError)
from libsnake.path import records_path
from libsnake.loader import SequenceLoader, InfiniteCache
from libsnake.hypercube import close_coil, validate, validate_coil

logger = logging.getLogger(__name__)

MANIFEST = 'manifest.txt'

# Rows of the bounds table: dimension, snake length and source, coil
# length and source
_TABLE = [
    (1, 1, TRIVIAL, 0, TRIVIAL),
    (2, 2, 'Da65', 4, 'Ka58'),
    (3, 4, 'Da65', 6, 'Ka58'),
    (4, 7, 'Da65', 8, 'Ka58'),
    (5, 13, 'Da65', 14, 'Ka58'),
    (6, 26, 'Da65', 26, 'Da65'),
    (7, 50, 'PRMK94', 48, 'Ko96'),
    (8, 98, 'OP15', 96, 'OP14'),
    (9, 190, 'Wy12', 188, 'Wy12'),
    (10, 370, 'Ki12', 366, CORPUS_SOURCE),
    (11, 712, CORPUS_SOURCE, 692, CORPUS_SOURCE),
    (12, 1373, CORPUS_SOURCE, 1344, CORPUS_SOURCE),
    (13, 2687, CORPUS_SOURCE, 2594, CORPUS_SOURCE),
    (14, 4932, 'AK91', 4934, 'AK91'),
    (15, 9866, 'AK91', 9868, 'AK91'),
    (16, 19738, 'AK91', 19740, 'AK91'),
    (17, 39478, 'AK91', 39480, 'AK91'),
    (18, 78958, 'AK91', 78960, 'AK91'),
    (19, 157898, 'AK91', 157900, 'AK91'),
    (20, 315798, 'AK91', 315800, 'AK91'),
]

# Records superseded by the bundled corpus
_PREVIOUS = {
    (10, COIL): (362, 'MDWP15'),
    (11, SNAKE): (707, 'MDWP15'),
    (11, COIL): (668, 'MDWP15'),
    (12, SNAKE): (1302, 'MDWP15'),
    (12, COIL): (1276, 'MDWP15'),
    (13, SNAKE): (2520, 'MDWP15'),
    (13, COIL): (2468, 'AK91'),
}

# Rows up to this dimension are proven optimal
OPTIMAL_MAX_DIMENSION = 8

# Rows from this dimension on derive their snake from their coil
DERIVED_SNAKE_MIN_DIMENSION = 14

_loader = SequenceLoader([InfiniteCache()])


@dataclass(frozen=True)
class RecordEntry:

    """
    A lower bound on the length of a longest snake or coil.

    :attr:`optimal`
        Whether the bound is known to be the exact maximum.

    :attr:`source`
        Citation key of the bound, CORPUS_SOURCE for bundled records and
        TRIVIAL for Q_1.

    :attr:`sequence`
        TransitionSequence reaching the bound, when bundled, else None.
        Coils are stored closed.

    :attr:`previous`
        (length, source) of the record this one superseded, or None.

    :attr:`label`
        Label of the corpus entry the sequence comes from, or None.
    """

    dimension: int
    kind: str
    length: int
    optimal: bool
    source: str
    sequence: tuple = None
    previous: tuple = None
    label: str = None


@dataclass(frozen=True)
class ManifestLine:

    label: str
    kind: str
    dimension: int
    claimed_length: int
    filename: str


# Corpus ####################################################

def load_manifest(filename=None):
    """
    Return the list of ManifestLines of the corpus manifest. Each
    non-blank line holds `label kind dimension claimed_length filename`;
    lines starting with # are comments.

    Raises CorpusError on a malformed line.
    """
    if filename is None:
        filename = records_path(MANIFEST)
    lines = []
    with io.open(filename, 'r', encoding='utf-8') as file:
        for number, line in enumerate(file, 1):
            fields = line.split()
            if not fields or fields[0].startswith('#'):
                continue
            if len(fields) != 5:
                raise CorpusError('%s:%d: expected 5 fields, got %d'
                                  % (filename, number, len(fields)))
            label, kind, dimension, length, name = fields
            if kind not in KINDS:
                raise CorpusError('%s:%d: unknown kind %r'
                                  % (filename, number, kind))
            try:
                lines.append(ManifestLine(label, kind, int(dimension),
                                          int(length), name))
            except ValueError:
                raise CorpusError('%s:%d: dimension and length must be '
                                  'integers' % (filename, number))
    return lines


def load_corpus():
    """
    Return the RecordEntries of the bundled corpus, in manifest order.
    Coil files omit their closing transition; it is added here.
    """
    entries = []
    for line in load_manifest():
        try:
            seq = _loader.load(records_path(line.filename))
        except (OSError, LibSnakeError) as e:
            raise CorpusError('corpus entry %s: %s' % (line.label, e))
        if line.kind == COIL:
            seq = close_coil(seq, line.dimension)
        logger.debug('corpus entry %s: %s of %d transitions in Q%d',
                     line.label, line.kind, len(seq), line.dimension)
        entries.append(RecordEntry(line.dimension, line.kind,
                                   line.claimed_length, False, CORPUS_SOURCE,
                                   seq,
                                   _PREVIOUS.get((line.dimension, line.kind)),
                                   line.label))
    return entries


def verify_corpus():
    """
    Validate every corpus sequence as the kind and dimension its manifest
    line claims, and return the ValidationReports in corpus order.
    """
    return [validate(entry.sequence, entry.dimension, entry.kind)
            for entry in load_corpus()]


def check_corpus():
    """
    Return the list of problems found in the corpus: invalid sequences
    and sequences whose length differs from the claimed one.
    """
    problems = []
    for entry, report in zip(load_corpus(), verify_corpus()):
        if not report.valid:
            problems.append('corpus entry %s: %s (%s)'
                            % (entry.label, report.summary(),
                               report.violations[0]))
        elif report.length != entry.length:
            problems.append('corpus entry %s: length %d, claimed %d'
                            % (entry.label, report.length, entry.length))
    return problems


# Bounds table ##############################################

class BoundsTable(object):

    """
    The best known lower bounds for dimensions 1 to TABLE_MAX_DIMENSION,
    one RecordEntry per dimension and kind. Corpus sequences are attached
    to the entries they reach.
    """

    def __init__(self, corpus=None):
        if corpus is None:
            corpus = load_corpus()
        sequences = dict(((entry.dimension, entry.kind), entry)
                         for entry in corpus)
        self.entries = {}
        for n, snake, snake_source, coil, coil_source in _TABLE:
            for kind, length, source in ((SNAKE, snake, snake_source),
                                         (COIL, coil, coil_source)):
                bundled = sequences.get((n, kind))
                if bundled is not None and bundled.length == length:
                    sequence, label = bundled.sequence, bundled.label
                else:
                    sequence, label = None, None
                self.entries[n, kind] = RecordEntry(
                    n, kind, length, n <= OPTIMAL_MAX_DIMENSION, source,
                    sequence, _PREVIOUS.get((n, kind)), label)

    def entry(self, n, kind):
        """
        Return the RecordEntry of dimension *n* and *kind*.

        Raises OutOfTable if *n* is outside the table.
        """
        if kind not in KINDS:
            raise LibSnakeError('unknown kind %r' % kind)
        try:
            return self.entries[n, kind]
        except (KeyError, TypeError):
            raise OutOfTable('no bound stored for n=%r, the table covers '
                             '1 to %d' % (n, TABLE_MAX_DIMENSION))

    def rows(self):
        """
        Return a list of (snake entry, coil entry) pairs by dimension.
        """
        return [(self.entries[n, SNAKE], self.entries[n, COIL])
                for n in range(1, TABLE_MAX_DIMENSION + 1)]

    def check(self):
        return check_table(self)

    def __len__(self):
        return len(self.entries)


@functools.lru_cache(maxsize=None)
def bounds_table():
    """
    Return the shared BoundsTable.
    """
    return BoundsTable()


def best_known(n, kind):
    """
    Return the RecordEntry of the best known bound for *kind* in Q_*n*,
    1 <= *n* <= 20. Raises OutOfTable otherwise; see ak_coil_bound() for
    larger dimensions.
    """
    return bounds_table().entry(n, kind)


def ak_coil_bound(n):
    """
    Return the general lower bound 77/256 * 2**n on the length of a
    longest coil, valid for *n* >= 21, in exact integer arithmetic.
    """
    if n < AK_MIN_DIMENSION:
        raise PreconditionViolated('the general coil bound holds for n >= %d,'
                                   ' not %d' % (AK_MIN_DIMENSION, n))
    return 77 << (n - 8)


def best_lower_bound(n, kind):
    """
    Return the best known lower bound for *kind* in Q_*n* as an integer,
    from the table up to dimension 20 and from ak_coil_bound() above.
    Beyond the table a snake is a coil with one vertex deleted.
    """
    if n <= TABLE_MAX_DIMENSION:
        return best_known(n, kind).length
    bound = ak_coil_bound(n)
    if kind == SNAKE:
        return bound - 2
    return bound


def coil_to_snake(seq, n):
    """
    Return the snake left by deleting the last vertex of the coil *seq*:
    its last two transitions are dropped, so the snake is two shorter.

    Raises NotACoil if *seq* is not a valid coil of Q_*n*.
    """
    report = validate_coil(seq, n)
    if not report.valid:
        raise NotACoil('not a coil of Q%d: %s' % (n, report.violations[0]))
    return tuple(seq)[:-2]


def check_table(table=None):
    """
    Return the list of inconsistencies of *table* (the shared one by
    default); an empty list means it is consistent.
    """
    if table is None:
        table = bounds_table()
    problems = []
    if len(table) != 2 * TABLE_MAX_DIMENSION:
        problems.append('table has %d entries, expected %d'
                        % (len(table), 2 * TABLE_MAX_DIMENSION))
    for snake, coil in table.rows():
        n = snake.dimension
        if n >= DERIVED_SNAKE_MIN_DIMENSION and \
           snake.length != coil.length - 2:
            problems.append('n=%d: snake %d is not coil %d minus 2'
                            % (n, snake.length, coil.length))
        if snake.length < coil.length - 2:
            problems.append('n=%d: snake %d is shorter than coil %d minus 2'
                            % (n, snake.length, coil.length))
        for entry in (snake, coil):
            if entry.optimal and n > OPTIMAL_MAX_DIMENSION:
                problems.append('n=%d: %s marked optimal' % (n, entry.kind))
            if entry.sequence is None:
                continue
            report = validate(entry.sequence, n, entry.kind)
            if not report.valid or report.length != entry.length:
                problems.append('n=%d: stored %s sequence is %s'
                                % (n, entry.kind, report.summary()))
    return problems


def check_records():
    """
    Return every problem found by check_corpus() and check_table().
    """
    return check_corpus() + check_table()
