"""
The :mod:`exact` module finds longest snakes and coils by exhaustive
depth-first search, which is feasible for small dimensions only (n <= 6
in minutes, n = 7 in much longer). Its results are the reference every
other module is tested against.

The search starts at vertex 0 and extends the path one transition at a
time, keeping two vertex bitmasks: the occupied vertices and the blocked
ones (neighbours of path vertices other than the head). A child is legal
iff it is neither. Dimensions are only introduced in increasing order,
which removes the n! relabelings of every object, and transitions are
tried in increasing order, so witnesses are deterministic.
"""

import time
import logging
from dataclasses import dataclass

from libsnake.locals import (SNAKE, COIL, KINDS, START, PROVEN,
                             BUDGET_EXHAUSTED, BRUTE_FORCE_MAX_DIMENSION)
from libsnake.error import InstanceTooLarge, ConfigError
from libsnake.config import Budget, solver_config
from libsnake.util import check_dimension, popcount, single_bit_index
from libsnake.hypercube import hypercube, vertex_parity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveResult:

    """
    Outcome of an exhaustive search.

    :attr:`best_length`
        Length of the longest object found.

    :attr:`witness`
        TransitionSequence of an object of that length (empty when no coil
        exists).

    :attr:`status`
        PROVEN if the search tree was exhausted, so no longer object
        exists, or BUDGET_EXHAUSTED if the budget ran out first.

    :attr:`nodes`
        Number of search-tree nodes visited.
    """

    kind: str
    dimension: int
    best_length: int
    witness: tuple
    status: str
    nodes: int = 0
    seconds: float = 0.0

    @property
    def proven(self):
        return self.status == PROVEN


class _OutOfBudget(Exception):
    pass


class ExhaustiveSearch(object):

    """
    One exhaustive search for the longest snake or coil of Q_*n*.

    *budget* is a Budget, or None for the default one. When *symmetry* is
    False every dimension may be tried at every step. *bound_pruning*
    defaults to solver_config.bound_pruning.

    Call calculate() to run it.
    """

    def __init__(self, n, kind, budget=None, symmetry=True,
                 bound_pruning=None):
        check_dimension(n)
        if kind not in KINDS:
            raise ConfigError('unknown kind %r' % kind)
        self.n = n
        self.kind = kind
        self.coil = kind == COIL
        self.budget = budget if budget is not None else Budget()
        self.symmetry = symmetry
        if bound_pruning is None:
            bound_pruning = solver_config.bound_pruning
        self.bound_pruning = bound_pruning and \
            n <= solver_config.bound_max_dimension
        self.cube = hypercube(n)

        self.start = START
        self.start_neighbors = self.cube.neighbor_mask(self.start)
        self.best = 0
        self.witness = ()
        self.nodes = 0
        self.path = []

    def calculate(self):
        """
        Run the search and return a SolveResult.
        """
        logger.info('exhaustive %s search in Q%d started (%r)',
                    self.kind, self.n, self.budget)
        self.started = time.monotonic()
        self.deadline = self.started + self.budget.max_seconds
        status = PROVEN
        try:
            self._search()
        except _OutOfBudget:
            status = BUDGET_EXHAUSTED
        seconds = time.monotonic() - self.started
        logger.info('exhaustive %s search in Q%d: length %d, %s, %d nodes, '
                    '%.1fs', self.kind, self.n, self.best, status,
                    self.nodes, seconds)
        return SolveResult(self.kind, self.n, self.best, self.witness,
                           status, self.nodes, seconds)

    def _search(self):
        n = self.n
        neighbor_mask = self.cube.neighbor_mask
        start_neighbors = self.start_neighbors
        path = self.path

        if not self._enter(self.start, 1 << self.start, 0):
            return
        # frame: head, occupied, blocked, dimensions used, next transition
        stack = [[self.start, 1 << self.start, 0, 0, 0]]
        while stack:
            frame = stack[-1]
            head, occupied, blocked, used, d = frame
            if self.symmetry:
                top = min(used + 1, n)
            else:
                top = n
            taken = occupied | blocked
            child = None
            while d < top:
                t = d
                d += 1
                v = head ^ (1 << t)
                bit = 1 << v
                if taken & bit:
                    continue
                if self.coil and bit & start_neighbors and len(path) >= 2:
                    self._record_coil(t, v)
                    continue
                if self.coil and head == self.start:
                    new_blocked = blocked
                else:
                    new_blocked = blocked | neighbor_mask(head)
                path.append(t)
                if self._enter(v, occupied | bit, new_blocked):
                    child = [v, occupied | bit, new_blocked,
                             max(used, t + 1), 0]
                    break
                path.pop()
            frame[4] = d
            if child is not None:
                stack.append(child)
            else:
                stack.pop()
                if path:
                    path.pop()

    def _record_coil(self, t, v):
        length = len(self.path) + 2
        if length > self.best:
            self.best = length
            closing = single_bit_index(v ^ self.start)
            self.witness = tuple(self.path) + (t, closing)
            logger.debug('coil of length %d found after %d nodes', length,
                         self.nodes)

    def _enter(self, head, occupied, blocked):
        """
        Count the node, record it if it is a new best snake and return
        whether it is worth expanding.
        """
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget()
        if self.nodes % solver_config.time_check_interval == 0:
            if time.monotonic() > self.deadline:
                raise _OutOfBudget()
            if self.nodes % solver_config.progress_interval < \
               solver_config.time_check_interval:
                logger.debug('%d nodes, best %d, depth %d', self.nodes,
                             self.best, len(self.path))

        depth = len(self.path)
        if not self.coil and depth > self.best:
            self.best = depth
            self.witness = tuple(self.path)
            logger.debug('snake of length %d found after %d nodes', depth,
                         self.nodes)

        if not self.bound_pruning:
            return True
        return self._upper_bound(head, occupied, blocked) > self.best

    def _upper_bound(self, head, occupied, blocked):
        """
        Return a bound on the length of any object extending the current
        path. Extra vertices alternate in parity, starting with the parity
        opposite to the head's.
        """
        cube = self.cube
        free = cube.full_mask & ~(occupied | blocked)
        bound = self._parity_bound(head, free)
        if bound > self.best:
            free = cube.reach(1 << head, free)
            bound = self._parity_bound(head, free)
        return bound

    def _parity_bound(self, head, free):
        even, odd = self.cube.parity_counts(free)
        if vertex_parity(head):
            opposite, same = even, odd
        else:
            opposite, same = odd, even
        extra = min(2 * opposite, 2 * same + 1)
        depth = len(self.path)
        if not self.coil:
            return depth + extra
        bound = depth + 1 + extra
        return bound - (bound & 1)


def optimal_snake_length(n, budget=None, symmetry=True):
    """
    Return the SolveResult of an exhaustive search for the longest snake
    of Q_*n*.
    """
    return ExhaustiveSearch(n, SNAKE, budget, symmetry).calculate()


def optimal_coil_length(n, budget=None, symmetry=True):
    """
    Return the SolveResult of an exhaustive search for the longest coil
    of Q_*n*. Q_1 has no coil: its result has length 0 and an empty
    witness.
    """
    check_dimension(n)
    if n == 1:
        return SolveResult(COIL, 1, 0, (), PROVEN)
    return ExhaustiveSearch(n, COIL, budget, symmetry).calculate()


def optimal_length(n, kind, budget=None):
    if kind == COIL:
        return optimal_coil_length(n, budget)
    return optimal_snake_length(n, budget)


def _induced_length(vertex_set, cube, kind):
    """
    Return the length of the path or cycle induced by *vertex_set*, or
    None if it induces something else.
    """
    k = popcount(vertex_set)
    first = single_bit_index(vertex_set & -vertex_set)
    if cube.reach(1 << first, vertex_set) | (1 << first) != vertex_set:
        return None
    degrees = [popcount(cube.neighbor_mask(v) & vertex_set)
               for v in range(cube.size) if vertex_set >> v & 1]
    if kind == SNAKE:
        if max(degrees) <= 2 and sum(degrees) == 2 * (k - 1):
            return k - 1
        return None
    if k >= 3 and all(degree == 2 for degree in degrees):
        return k
    return None


def brute_force_optimum(n, kind):
    """
    Return the length of the longest snake or coil of Q_*n* by testing
    every vertex subset, without any pruning beyond skipping subsets too
    small to improve. Only for *n* <= 4.
    """
    check_dimension(n)
    if n > BRUTE_FORCE_MAX_DIMENSION:
        raise InstanceTooLarge('brute force is limited to n <= %d, not %d'
                               % (BRUTE_FORCE_MAX_DIMENSION, n))
    cube = hypercube(n)
    best = 0
    for vertex_set in range(1, 1 << cube.size):
        k = popcount(vertex_set)
        if (kind == SNAKE and k - 1 <= best) or (kind == COIL and k <= best):
            continue
        length = _induced_length(vertex_set, cube, kind)
        if length is not None and length > best:
            best = length
    return best
