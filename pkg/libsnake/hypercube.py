"""
The :mod:`hypercube` module is the core of LibSnake. It models the
n-dimensional hypercube Q_n, whose vertices are n-bit integers and whose
edges join vertices differing in exactly one bit, and the two objects
LibSnake is about:

    **snake**
        An induced path of Q_n. Its length is its number of edges.

    **coil**
        An induced cycle of Q_n. Its length is its number of edges, which
        equals its number of vertices.

Both are written as transition sequences: entry j is the dimension (bit
index, bit 0 least significant) flipped between walk vertices j and j+1.
The walk starts at vertex 0 unless told otherwise; validity does not
depend on the start, since XOR with a fixed vertex is an automorphism.

The validators never raise for a broken snake or coil. They return a
ValidationReport listing every violation found, up to
validation_config.max_violations.
"""

import re
import functools
from collections import Counter
from dataclasses import dataclass

from libsnake.locals import (SNAKE, COIL, REPEATED_VERTEX, CHORD_ADJACENCY,
                             NOT_CLOSED, DIMENSION_OUT_OF_RANGE, TOO_SHORT,
                             MIN_COIL_LENGTH)
from libsnake.error import (NonIntegerToken, DimensionOutOfRange,
                            InvalidPermutation, NotAWalk)
from libsnake.util import (check_dimension, check_vertex, popcount,
                           single_bit_index)
from libsnake.config import validation_config

_SEPARATORS = re.compile(r'[,\s]+')
_DECIMAL = re.compile(r'[0-9]+')


# Encoding ##################################################

def parse_sequence(text):
    """
    Return the TransitionSequence written in *text*.

    Tokens are base-10 non-negative integers separated by commas, spaces,
    tabs and newlines in any mix. Empty tokens are ignored.

    Raises NonIntegerToken with the index of the first bad token.
    """
    tokens = [token for token in _SEPARATORS.split(text) if token]
    result = []
    for position, token in enumerate(tokens):
        if not _DECIMAL.fullmatch(token):
            raise NonIntegerToken(position, token)
        result.append(int(token))
    return tuple(result)


def format_sequence(seq, separator=','):
    return separator.join(str(t) for t in seq)


def format_vertex(v, n):
    """
    Return *v* as an *n*-character binary code word, most significant bit
    first.
    """
    return format(v, '0%db' % n)


def is_adjacent(u, v):
    """
    Return whether *u* and *v* differ in exactly one bit.
    """
    x = u ^ v
    return x != 0 and x & (x - 1) == 0


def walk(seq, n, start=0):
    """
    Return the list of the len(*seq*) + 1 vertices visited when flipping,
    from *start*, the bits named by *seq* one after the other.

    Raises DimensionOutOfRange for an entry outside [0, *n*).
    """
    check_dimension(n)
    check_vertex(start, n)
    v = start
    vertices = [v]
    for position, t in enumerate(seq):
        if not 0 <= t < n:
            raise DimensionOutOfRange(position, t, n)
        v ^= 1 << t
        vertices.append(v)
    return vertices


def transitions_from_walk(vertices):
    """
    Return the TransitionSequence of a list of *vertices* in which every
    two consecutive ones are adjacent. Inverse of walk().

    Raises NotAWalk with the position of the first non-adjacent pair.
    """
    result = []
    for position in range(len(vertices) - 1):
        d = single_bit_index(vertices[position] ^ vertices[position + 1])
        if d is None:
            raise NotAWalk(position)
        result.append(d)
    return tuple(result)


def close_coil(seq, n):
    """
    Return *seq* completed with its closing transition.

    Coils are often written without the transition that leads back to the
    start. If the walk of *seq* ends next to its start, that transition is
    appended; otherwise *seq* is returned as given, and validate_coil()
    will tell what is wrong with it.
    """
    seq = tuple(seq)
    end = walk(seq, n)[-1]
    d = single_bit_index(end)
    if d is None:
        return seq
    return seq + (d,)


# Symmetries ################################################

def apply_dimension_permutation(seq, perm):
    """
    Return *seq* with every dimension d replaced by perm[d].

    *perm* is a sequence or a mapping defining a bijection on
    [0, len(perm)). Raises InvalidPermutation if it is not one, or if it
    does not cover some entry of *seq*.
    """
    if hasattr(perm, 'items'):
        try:
            perm = tuple(perm[d] for d in range(len(perm)))
        except KeyError as e:
            raise InvalidPermutation('permutation does not map %s' % e)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(perm))):
        raise InvalidPermutation('%r is not a bijection on [0, %d)'
                                 % (perm, len(perm)))
    result = []
    for t in seq:
        if not 0 <= t < len(perm):
            raise InvalidPermutation('dimension %d is outside the '
                                     'permutation domain' % t)
        result.append(perm[t])
    return tuple(result)


def canonical_relabel(seq):
    """
    Rename the dimensions of *seq* so that they appear, at their first
    occurrences, as 0, 1, 2...

    Sequences that are images of each other under a dimension permutation
    share the same canonical form.
    """
    mapping = {}
    result = []
    for t in seq:
        if t not in mapping:
            mapping[t] = len(mapping)
        result.append(mapping[t])
    return tuple(result)


def reverse_sequence(seq):
    """
    Return the transition sequence of the same walk run backwards.
    """
    return tuple(reversed(seq))


def rotate_sequence(seq, k):
    """
    Return a closed sequence started *k* transitions later.
    """
    seq = tuple(seq)
    if not seq:
        return seq
    k %= len(seq)
    return seq[k:] + seq[:k]


def transition_counts(seq):
    """
    Return a Counter of how many times each dimension occurs in *seq*.
    """
    return Counter(seq)


# Validation ################################################

@dataclass(frozen=True)
class Violation:

    """
    One defect of a claimed snake or coil.

    :attr:`positions`
        Pair (i, j) of walk vertex indices, i < j, where the defect is.

    :attr:`reason`
        One of the reason constants in libsnake.locals.
    """

    positions: tuple
    reason: str

    def to_dict(self):
        return {'positions': list(self.positions), 'reason': self.reason}

    def __str__(self):
        return '%s between positions %d and %d' % ((self.reason,)
                                                  + tuple(self.positions))


@dataclass(frozen=True)
class ValidationReport:

    """
    Verdict on a claimed snake or coil.

    :attr:`kind`
        SNAKE or COIL.

    :attr:`dimension`
        Dimension the sequence was validated in.

    :attr:`length`
        Number of transitions of the sequence, which is the length of the
        snake or coil if it is valid.

    :attr:`violations`
        Tuple of Violations, empty iff the sequence is valid.
    """

    kind: str
    dimension: int
    length: int
    violations: tuple = ()

    @property
    def valid(self):
        return not self.violations

    def to_dict(self):
        return {'kind': self.kind,
                'dimension': self.dimension,
                'length': self.length,
                'valid': self.valid,
                'violations': [v.to_dict() for v in self.violations]}

    def summary(self):
        if self.valid:
            verdict = 'valid'
        else:
            verdict = 'invalid'
        return '%s in Q%d: %s, length %d' % (self.kind, self.dimension,
                                              verdict, self.length)


class _Violations(list):

    def __init__(self):
        list.__init__(self)
        self.cap = validation_config.max_violations

    def add(self, i, j, reason):
        """
        Record a violation. Return False once the cap is reached.
        """
        if len(self) >= self.cap:
            return False
        self.append(Violation((i, j), reason))
        return len(self) < self.cap


def _check_range(seq, n, violations):
    found = False
    for position, t in enumerate(seq):
        if not 0 <= t < n:
            found = True
            if not violations.add(position, position + 1,
                                  DIMENSION_OUT_OF_RANGE):
                break
    return found


def _check_pairs(vertices, n, violations, ring=False):
    m = len(vertices)
    first = {}
    for j, v in enumerate(vertices):
        if v in first:
            if not violations.add(first[v], j, REPEATED_VERTEX):
                return
            continue
        for d in range(n):
            i = first.get(v ^ (1 << d))
            if i is None:
                continue
            distance = j - i
            if ring:
                distance = min(distance, m - distance)
            if distance >= 2 and not violations.add(i, j, CHORD_ADJACENCY):
                return
        first[v] = j


def validate_snake(seq, n):
    """
    Return the ValidationReport of *seq* as a snake of Q_*n*.

    The sequence is valid iff every entry is a dimension of Q_*n*, the
    walked vertices are pairwise distinct and no two of them more than one
    step apart are adjacent.
    """
    check_dimension(n)
    seq = tuple(seq)
    violations = _Violations()
    if not _check_range(seq, n, violations):
        _check_pairs(walk(seq, n), n, violations)
    return ValidationReport(SNAKE, n, len(seq), tuple(violations))


def validate_coil(seq, n):
    """
    Return the ValidationReport of *seq* as a coil of Q_*n*.

    The sequence is valid iff every entry is a dimension of Q_*n*, it has
    at least 4 transitions, its walk comes back to the start, the walked
    vertices (start counted once) are pairwise distinct and no two of them
    at cyclic distance 2 or more are adjacent.
    """
    check_dimension(n)
    seq = tuple(seq)
    violations = _Violations()
    if not _check_range(seq, n, violations):
        vertices = walk(seq, n)
        if len(seq) < MIN_COIL_LENGTH:
            violations.add(0, len(seq), TOO_SHORT)
        if vertices[-1] != vertices[0]:
            violations.add(0, len(seq), NOT_CLOSED)
        _check_pairs(vertices[:-1], n, violations, ring=True)
    return ValidationReport(COIL, n, len(seq), tuple(violations))


def validate(seq, n, kind):
    """
    Dispatch to validate_snake() or validate_coil() according to *kind*.
    """
    if kind == COIL:
        return validate_coil(seq, n)
    return validate_snake(seq, n)


# Hypercube #################################################

class Hypercube(object):

    """
    Neighbourhood queries on Q_*n*, with vertex sets written as bitmasks
    of 2**n bits (bit v set iff vertex v is in the set).

    Neighbour masks are cached per vertex. The whole-cube masks used by
    set_neighborhood() and reach() are built on first use and need 2**n
    bits each, so they are meant for small n only.

    :attr:`n`
        Dimension.

    :attr:`size`
        Number of vertices, 2**n.
    """

    def __init__(self, n):
        check_dimension(n)
        self.n = n
        self.size = 1 << n
        self._neighbor_masks = {}
        self._full_mask = None
        self._even_mask = None
        self._low_masks = None

    def neighbors(self, v):
        return [v ^ (1 << d) for d in range(self.n)]

    def neighbor_mask(self, v):
        mask = self._neighbor_masks.get(v)
        if mask is None:
            mask = 0
            for d in range(self.n):
                mask |= 1 << (v ^ (1 << d))
            self._neighbor_masks[v] = mask
        return mask

    def _build_masks(self):
        # even-weight vertices of Q_k+1 are those of Q_k plus the odd ones
        # of Q_k with the new top bit set
        even, size = 1, 1
        while size < self.size:
            odd = ~even & ((1 << size) - 1)
            even |= odd << size
            size <<= 1
        self._even_mask = even
        self._full_mask = (1 << self.size) - 1

        self._low_masks = []
        for d in range(self.n):
            step = 1 << d
            mask, length = (1 << step) - 1, 2 * step
            while length < self.size:
                mask |= mask << length
                length <<= 1
            self._low_masks.append(mask)

    def get_full_mask(self):
        if self._full_mask is None:
            self._build_masks()
        return self._full_mask

    full_mask = property(get_full_mask)

    def get_even_mask(self):
        if self._even_mask is None:
            self._build_masks()
        return self._even_mask

    even_mask = property(get_even_mask)

    def set_neighborhood(self, vertex_set):
        """
        Return the mask of all vertices adjacent to some vertex of
        *vertex_set*.
        """
        if self._low_masks is None:
            self._build_masks()
        result = 0
        for d, low in enumerate(self._low_masks):
            step = 1 << d
            result |= ((vertex_set & low) << step) | ((vertex_set >> step)
                                                      & low)
        return result

    def reach(self, source_set, allowed):
        """
        Return the mask of vertices of *allowed* reachable from
        *source_set* through vertices of *allowed*, sources excluded
        unless they are allowed and reached again.
        """
        frontier = self.set_neighborhood(source_set) & allowed
        reached = frontier
        while frontier:
            frontier = self.set_neighborhood(frontier) & allowed & ~reached
            reached |= frontier
        return reached

    def parity_counts(self, vertex_set):
        """
        Return the pair (even, odd) of vertex counts of *vertex_set* by
        parity of their weight.
        """
        even = popcount(vertex_set & self.even_mask)
        return even, popcount(vertex_set) - even

    def __repr__(self):
        return 'Q%d' % self.n


@functools.lru_cache(maxsize=None)
def hypercube(n):
    """
    Return the shared Hypercube object of dimension *n*.
    """
    return Hypercube(n)


def vertex_parity(v):
    return popcount(v) & 1
