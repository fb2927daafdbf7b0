"""
The :mod:`util` module has assorted functions and classes for various
purposes: argument checks shared by all modules, bit tricks and the
IdFactory registry.
"""

from libsnake.locals import MAX_DIMENSION
from libsnake.error import InvalidDimension, InvalidVertex, ConfigError


def check_dimension(n):
    """
    Raise InvalidDimension unless *n* is an integer in [1, MAX_DIMENSION].
    """
    if isinstance(n, bool) or not isinstance(n, int) \
       or not 1 <= n <= MAX_DIMENSION:
        raise InvalidDimension('dimension must be an integer between 1 and '
                               '%d, not %r' % (MAX_DIMENSION, n))


def check_vertex(v, n):
    """
    Raise InvalidVertex unless *v* is a vertex of the *n*-dimensional
    hypercube.
    """
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < 1 << n:
        raise InvalidVertex('%r is not a vertex of Q%d' % (v, n))


def popcount(x):
    """
    Return the number of set bits of the non-negative integer *x*.
    """
    return bin(x).count('1')


def single_bit_index(x):
    """
    Return d if *x* == 2**d, or None if *x* is not a power of two.
    """
    if x <= 0 or x & (x - 1):
        return None
    return x.bit_length() - 1


class IdFactory(object):

    """
    An IdFactory chooses from a set of classes and creates an instance
    of it based on the passed ID.
    """

    def __init__(self):
        self.classes = {}

    def register(self, _class):
        """
        Register a class-id pair.

        *_class* should be the class created when its id is passed
        to fabricate(). It should have id as a class attribute.

        Return *_class*, so register() can be used as a class decorator.
        """
        try:
            _class.id
        except AttributeError:
            raise ConfigError('A class must have an id attribute to be '
                              'registered.')
        if _class.id in self.classes:
            raise ConfigError('id %s already registered' % _class.id)
        self.classes[_class.id] = _class
        return _class

    def fabricate(self, id, *args):
        """
        Return a newly created instance of the class registered with the
        given *id*.

        If more arguments are passed, they will be forwarded to the
        class constructor.
        """
        try:
            _class = self.classes[id]
        except KeyError:
            raise ConfigError('unknown id %r, expected one of %s'
                              % (id, ', '.join(sorted(self.classes))))
        return _class(*args)

    def ids(self):
        return sorted(self.classes)

    def __repr__(self):
        return self.classes.__repr__()
