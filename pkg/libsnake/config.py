"""
The :mod:`config` module provides objects that configure several aspects
of LibSnake. The global objects are in the module scope, so they can be
accessed as libsnake.config.[object]. Their attributes are read by the
other modules every time they are needed, so changing them takes effect
on the next call.

The global configuration objects are:

    **validation_config**
        ValidationConfig object

    **solver_config**
        SolverConfig object

    **search_defaults**
        SearchDefaults object

The per-call parameter objects, :class:`Budget` and :class:`SearchConfig`,
are Configs as well.
"""

from libsnake.locals import KINDS
from libsnake.error import ConfigError
from libsnake.util import check_dimension


class Config(object):

    """
    The Config objects are basically attribute containers with a shortcut
    to set several attributes at once, the Config.config() method.

    Keyword arguments passed to the constructor are forwarded to config().
    """

    def __init__(self, **kv):
        self.config(**kv)

    def config(self, **kv):
        """
        Whatever keyword parameters are passed to config() will make that
        attribute be set to the desired value.

        Raises ConfigError for an unknown attribute or for a combination
        of values rejected by check().
        """
        for key in kv:
            if key.startswith('_') or not hasattr(self, key) \
               or callable(getattr(self, key)):
                raise ConfigError('config() does not take %s as parameter'
                                  % key)

        for key, value in kv.items():
            setattr(self, key, value)
        self.check()

    def check(self):
        """
        *Virtual.*

        Raise ConfigError if the current attribute values are not
        acceptable.
        """
        pass

    def as_dict(self):
        """
        Return a dict mapping every public attribute to its current value.
        """
        return dict((key, getattr(self, key)) for key in dir(self)
                    if not key.startswith('_')
                    and not callable(getattr(self, key)))


class ValidationConfig(Config):

    """
    The ValidationConfig contains attributes related to snake and coil
    validation.

    :attr:`max_violations`
        Maximum number of violations collected in one ValidationReport.
    """

    max_violations = 100

    def check(self):
        if self.max_violations < 1:
            raise ConfigError('max_violations must be positive')


class SolverConfig(Config):

    """
    The SolverConfig contains attributes related to the exhaustive
    search.

    :attr:`bound_pruning`
        Whether branches are cut when the free vertices reachable from the
        head cannot make the object longer than the best found so far.

    :attr:`bound_max_dimension`
        Highest dimension for which bound pruning is used. The bound works
        on vertex sets of 2**n bits, so it only pays for small n.

    :attr:`progress_interval`
        Number of search nodes between two progress log lines.

    :attr:`time_check_interval`
        Number of search nodes between two wall-clock budget checks.
    """

    bound_pruning = True
    bound_max_dimension = 16
    progress_interval = 1000000
    time_check_interval = 4096


class SearchDefaults(Config):

    """
    The SearchDefaults contains the values used by SearchConfig for any
    parameter not given explicitly.

    :attr:`beam_width`
        Number of candidates kept per generation.

    :attr:`restarts`
        Number of extra independent runs.

    :attr:`temperature`
        Softmax temperature of survivor selection. 0 means truncation.

    :attr:`max_seconds`
        Wall-clock bound of a whole search, all runs included.

    :attr:`fitness`
        Id of the fitness function, as registered in
        libsnake.beam.fitness_factory.

    :attr:`check_invariants`
        Whether every candidate is revalidated from scratch.
    """

    beam_width = 64
    restarts = 0
    temperature = 1.0
    max_seconds = 60.0
    fitness = 'tightness'
    check_invariants = False


class Budget(Config):

    """
    Resource bound of an exhaustive search.

    :attr:`max_nodes`
        Maximum number of search-tree nodes visited.

    :attr:`max_seconds`
        Wall-clock bound in seconds.
    """

    max_nodes = 10 ** 9
    max_seconds = 600.0

    def check(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ConfigError('Budget limits must be positive (got %s nodes,'
                              ' %s seconds)' % (self.max_nodes,
                                                self.max_seconds))

    def __repr__(self):
        return 'Budget(max_nodes=%s, max_seconds=%s)' % (self.max_nodes,
                                                        self.max_seconds)


class SearchConfig(Config):

    """
    Parameters of a stochastic beam search.

    *dimension*, *kind* and *seed* are required. Every other attribute
    defaults to the value in search_defaults at construction time.

    :attr:`dimension`
        Hypercube dimension n.

    :attr:`kind`
        SNAKE or COIL.

    :attr:`seed`
        64-bit unsigned seed. Run r of the search is seeded with seed + r.
    """

    dimension = None
    kind = None
    seed = None
    beam_width = None
    restarts = None
    temperature = None
    max_seconds = None
    fitness = None
    check_invariants = None

    def __init__(self, dimension, kind, seed, **kv):
        for key, value in search_defaults.as_dict().items():
            kv.setdefault(key, value)
        Config.__init__(self, dimension=dimension, kind=kind, seed=seed, **kv)

    def check(self):
        check_dimension(self.dimension)
        if self.kind not in KINDS:
            raise ConfigError('kind must be one of %s, not %r'
                              % (', '.join(KINDS), self.kind))
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) \
           or not 0 <= self.seed < 2 ** 64:
            raise ConfigError('seed must be a 64-bit unsigned integer')
        if self.beam_width < 1:
            raise ConfigError('beam_width must be at least 1')
        if self.restarts < 0:
            raise ConfigError('restarts must not be negative')
        if self.temperature < 0:
            raise ConfigError('temperature must not be negative')
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ConfigError('max_seconds must be positive')

    def __repr__(self):
        return 'SearchConfig(%s)' % ', '.join(
            '%s=%r' % item for item in sorted(self.as_dict().items()))


validation_config = ValidationConfig()
solver_config = SolverConfig()
search_defaults = SearchDefaults()
