"""
The :mod:`beam` module searches long snakes and coils with a seeded
stochastic beam search, for dimensions where exhaustive search is out of
reach.

A generation is a list of Candidates, all of the same length. Every step
extends each of them by every legal transition, scores the children,
drops dimension-symmetric twins and keeps *beam_width* of them, sampled
without replacement with probabilities proportional to exp(score / T).
Temperature 0 keeps the best ones.

Coils are harvested from the snake search: a coil candidate does not
block the neighbours of the start vertex, and once its head comes back
next to the start it is closed into a coil and leaves the beam.

Everything random comes from numpy Generators seeded with seed + run, so
a SearchConfig always produces the same result.
"""

import time
import logging
from dataclasses import dataclass

import numpy as np

from libsnake.locals import (COIL, START, LENGTH_WEIGHT,
                             DENSE_SET_MAX_DIMENSION)
from libsnake.error import Extinction, InvariantViolated
from libsnake.util import IdFactory, popcount, single_bit_index
from libsnake.hypercube import (hypercube, walk, is_adjacent,
                                canonical_relabel, validate_snake,
                                validate_coil)

logger = logging.getLogger(__name__)


class _DenseSets(object):

    """
    Vertex sets as bitmasks of 2**n bits.
    """

    empty = 0

    @staticmethod
    def add(vertex_set, v):
        return vertex_set | (1 << v)

    @staticmethod
    def add_neighbors(vertex_set, v, cube):
        return vertex_set | cube.neighbor_mask(v)

    @staticmethod
    def contains(vertex_set, v):
        return vertex_set >> v & 1

    @staticmethod
    def count_outside(vertex_set, other):
        return popcount(vertex_set & ~other)


class _SparseSets(object):

    """
    Vertex sets as frozensets, for dimensions where masks of 2**n bits
    would be too large.
    """

    empty = frozenset()

    @staticmethod
    def add(vertex_set, v):
        return vertex_set | {v}

    @staticmethod
    def add_neighbors(vertex_set, v, cube):
        return vertex_set.union(cube.neighbors(v))

    @staticmethod
    def contains(vertex_set, v):
        return v in vertex_set

    @staticmethod
    def count_outside(vertex_set, other):
        return len(vertex_set - other)


def _vertex_sets(n):
    if n is not None and n > DENSE_SET_MAX_DIMENSION:
        return _SparseSets
    return _DenseSets


class Candidate(object):

    """
    A partial snake in the beam.

    :attr:`seq`
        TransitionSequence tuple, walked from the start vertex.

    :attr:`head`
        Last vertex of the walk.

    :attr:`occupied`
        Set of the walked vertices.

    :attr:`blocked`
        Set of the neighbours of every walked vertex but the head. For
        coil candidates the start vertex's own neighbours are left out.

    :attr:`score`
        Fitness, as computed when the candidate was created.

    :attr:`coil`
        Whether the candidate is grown to be closed into a coil.

    Up to DENSE_SET_MAX_DIMENSION the vertex sets are bitmasks of 2**n
    bits; above it they are frozensets of vertices.
    """

    __slots__ = ['seq', 'head', 'occupied', 'blocked', 'score', 'coil']

    def __init__(self, seq, head, occupied, blocked, score=0, coil=False):
        self.seq = seq
        self.head = head
        self.occupied = occupied
        self.blocked = blocked
        self.score = score
        self.coil = coil

    @classmethod
    def empty(cls, coil=False, n=None):
        """
        Return the candidate with no transition. *n* selects the vertex
        set representation; without it the sets are bitmasks.
        """
        sets = _vertex_sets(n)
        return cls((), START, sets.add(sets.empty, START), sets.empty, 0,
                   coil)

    @classmethod
    def from_sequence(cls, seq, n, coil=False):
        """
        Rebuild a candidate from scratch, without checking that *seq* is a
        snake. The score is left at 0.
        """
        seq = tuple(seq)
        vertices = walk(seq, n, START)
        cube = hypercube(n)
        sets = _vertex_sets(n)
        occupied = sets.empty
        for v in vertices:
            occupied = sets.add(occupied, v)
        blocked = sets.empty
        for position, v in enumerate(vertices[:-1]):
            if coil and position == 0:
                continue
            blocked = sets.add_neighbors(blocked, v, cube)
        return cls(seq, vertices[-1], occupied, blocked, 0, coil)

    def _sets(self):
        if isinstance(self.occupied, frozenset):
            return _SparseSets
        return _DenseSets

    def is_terminal(self):
        """
        Return whether this coil candidate has come back next to the
        start, so it can only be closed.
        """
        return self.coil and len(self.seq) >= 3 and \
            is_adjacent(self.head, START)

    def legal_transitions(self, n):
        """
        Return the dimensions, in increasing order, along which the
        candidate can be extended.
        """
        if self.is_terminal():
            return []
        contains = self._sets().contains
        legal = []
        for d in range(n):
            v = self.head ^ (1 << d)
            if not contains(self.occupied, v) and \
               not contains(self.blocked, v):
                legal.append(d)
        return legal

    def waste(self):
        """
        Return the number of blocked vertices that are not on the walk.
        """
        return self._sets().count_outside(self.blocked, self.occupied)

    def extend(self, d, cube):
        sets = self._sets()
        v = self.head ^ (1 << d)
        if self.coil and self.head == START:
            blocked = self.blocked
        else:
            blocked = sets.add_neighbors(self.blocked, self.head, cube)
        return Candidate(self.seq + (d,), v, sets.add(self.occupied, v),
                         blocked, 0, self.coil)

    def check(self, n):
        """
        Raise InvariantViolated unless the candidate matches its sequence
        rebuilt from scratch and is a valid snake (or, when terminal,
        closes into a valid coil).
        """
        rebuilt = Candidate.from_sequence(self.seq, n, self.coil)
        if (rebuilt.head, rebuilt.occupied, rebuilt.blocked) != \
           (self.head, self.occupied, self.blocked):
            raise InvariantViolated('candidate %r is out of sync with its '
                                    'sequence' % (self.seq,))
        if self.is_terminal():
            if close_if_possible(self, n) is None:
                raise InvariantViolated('terminal candidate %r does not close'
                                        % (self.seq,))
        elif not validate_snake(self.seq, n).valid:
            raise InvariantViolated('candidate %r is not a snake'
                                    % (self.seq,))

    def __repr__(self):
        return 'Candidate(%r, score=%s)' % (self.seq, self.score)


# Fitness ###################################################

fitness_factory = IdFactory()


class Fitness(object):

    """
    *Abstract.*

    A Fitness scores candidates; higher is better. Register derived
    classes in fitness_factory to make them selectable by id.
    """

    def __call__(self, candidate, n):
        raise NotImplementedError('Fitness.__call__() is abstract')


@fitness_factory.register
class TightnessFitness(Fitness):

    """
    LENGTH_WEIGHT per transition, minus one per blocked vertex that is
    not on the walk: long snakes that waste few vertices score higher.
    """

    id = 'tightness'

    def __call__(self, candidate, n):
        return LENGTH_WEIGHT * len(candidate.seq) - \
            candidate.waste()


@fitness_factory.register
class LengthFitness(Fitness):

    id = 'length'

    def __call__(self, candidate, n):
        return LENGTH_WEIGHT * len(candidate.seq)


def fitness(candidate, n):
    """
    Return the default (tightness) fitness of *candidate* in Q_*n*.
    """
    return TightnessFitness()(candidate, n)


# Steps #####################################################

def close_if_possible(candidate, n):
    """
    Return the coil obtained by joining the head of *candidate* to the
    start, or None if they are not adjacent or the cycle would not be
    induced.
    """
    if len(candidate.seq) < 3:
        return None
    d = single_bit_index(candidate.head ^ START)
    if d is None:
        return None
    closed = candidate.seq + (d,)
    if validate_coil(closed, n).valid:
        return closed
    return None


def _sort_key(candidate):
    return (-candidate.score, canonical_relabel(candidate.seq),
            candidate.seq)


def expand(population, config):
    """
    Return the children of every candidate of *population*, scored,
    without dimension-symmetric twins and sorted by (score descending,
    canonical sequence ascending). Of twins, the lexicographically
    smallest sequence is kept, so the result does not depend on the order
    of *population*.
    """
    n = config.dimension
    cube = hypercube(n)
    score = fitness_factory.fabricate(config.fitness)
    twins = {}
    for parent in population:
        for d in parent.legal_transitions(n):
            child = parent.extend(d, cube)
            key = canonical_relabel(child.seq)
            kept = twins.get(key)
            if kept is None or child.seq < kept.seq:
                twins[key] = child

    children = list(twins.values())
    for child in children:
        child.score = score(child, n)
        if config.check_invariants:
            child.check(n)
    children.sort(key=_sort_key)
    return children


def select(children, config, rng):
    """
    Return *beam_width* survivors of the sorted *children*, in the same
    order. At temperature 0 these are the first ones; otherwise they are
    sampled without replacement with weights exp(score / temperature),
    using Gumbel keys drawn from *rng*.
    """
    width = config.beam_width
    if len(children) <= width:
        return list(children)
    if config.temperature == 0:
        return children[:width]
    scores = np.array([child.score for child in children], dtype=float)
    keys = scores / config.temperature + rng.gumbel(size=len(children))
    chosen = np.argsort(-keys, kind='stable')[:width]
    return [children[i] for i in sorted(chosen)]


def step_beam(population, config, rng, harvest=None):
    """
    Return the next generation of *population*.

    *rng* is a numpy Generator, or a seed to create one from. *harvest*,
    if given, is called with the sorted children before selection and
    returns the ones that may survive.

    Raises Extinction when no candidate can be extended.
    """
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    children = expand(population, config)
    if children and harvest is not None:
        children = harvest(children)
    if not children:
        raise Extinction('no candidate of %d can be extended'
                         % len(population))
    return select(children, config, rng)


# Search ####################################################

@dataclass(frozen=True)
class SearchOutcome:

    """
    Result of a search.

    :attr:`best`
        Longest snake or coil found, as a TransitionSequence. Empty if no
        coil was found.

    :attr:`stats`
        Dict with the total number of *steps* and *expansions* (children
        generated), the number of *restarts_used* and the elapsed
        *seconds*.
    """

    best: tuple
    best_length: int
    kind: str
    stats: dict


def search(config):
    """
    Run *config.restarts* + 1 beam searches and return the SearchOutcome
    of the longest snake or coil found by any of them.

    Run r starts from the empty candidate at the start vertex with a
    Generator seeded with config.seed + r and calls step_beam() until
    extinction. All runs share the wall-clock bound config.max_seconds.
    """
    n = config.dimension
    coil = config.kind == COIL
    started = time.monotonic()
    if config.max_seconds is not None:
        deadline = started + config.max_seconds
    else:
        deadline = None

    best = ()
    run_best = 0
    steps = expansions = restarts_used = 0

    def harvest(children):
        # terminal coil candidates are closed here and leave the beam
        nonlocal best, run_best, steps, expansions
        steps += 1
        expansions += len(children)
        if not coil:
            run_best = len(children[0].seq)
            if run_best > len(best):
                best = children[0].seq
            return children
        growing = []
        for child in children:
            if not child.is_terminal():
                growing.append(child)
                continue
            closed = close_if_possible(child, n)
            if closed is not None:
                run_best = max(run_best, len(closed))
                if len(closed) > len(best):
                    best = closed
        return growing

    for run in range(config.restarts + 1):
        if deadline is not None and time.monotonic() > deadline:
            break
        restarts_used = run
        rng = np.random.default_rng(config.seed + run)
        population = [Candidate.empty(coil, n)]
        run_best = 0
        while deadline is None or time.monotonic() <= deadline:
            try:
                population = step_beam(population, config, rng, harvest)
            except Extinction:
                break
            logger.debug('run %d step %d: %d survivors, best %d', run,
                         steps, len(population), run_best)
        logger.info('beam run %d (seed %d) in Q%d: best %s length %d', run,
                    config.seed + run, n, config.kind, run_best)

    seconds = time.monotonic() - started
    stats = {'steps': steps, 'expansions': expansions,
             'restarts_used': restarts_used, 'seconds': seconds}
    return SearchOutcome(best, len(best), config.kind, stats)
