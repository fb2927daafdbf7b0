"""
The :mod:`error` module contains the exceptions raised by LibSnake.

Every exception derives from :class:`LibSnakeError`, which is itself a
ValueError, so callers that only care about bad input can catch that.
Semantic defects of a snake or coil are never raised: the validators
report them as violations instead.
"""


class LibSnakeError(ValueError):

    """
    Base class of all LibSnake exceptions.
    """


class PositionalError(LibSnakeError):

    """
    An error tied to a position in a sequence.

    :attr:`position`
        0-based index of the offending token, transition or vertex.
    """

    def __init__(self, position, message):
        LibSnakeError.__init__(self, message)
        self.position = position


class NonIntegerToken(PositionalError):

    def __init__(self, position, token):
        PositionalError.__init__(self, position,
                                 'token %d (%r) is not a non-negative '
                                 'base-10 integer' % (position, token))
        self.token = token


class DimensionOutOfRange(PositionalError):

    def __init__(self, position, transition, n):
        PositionalError.__init__(self, position,
                                 'transition %d is %d, outside [0, %d)'
                                 % (position, transition, n))


class NotAWalk(PositionalError):

    def __init__(self, position):
        PositionalError.__init__(self, position,
                                 'vertices %d and %d are not adjacent'
                                 % (position, position + 1))


class InvalidDimension(LibSnakeError):
    pass


class InvalidVertex(LibSnakeError):
    pass


class InvalidPermutation(LibSnakeError):
    pass


class InstanceTooLarge(LibSnakeError):
    pass


class Extinction(LibSnakeError):

    """
    Raised by a beam step when no candidate has a legal extension.
    """


class OutOfTable(LibSnakeError):
    pass


class PreconditionViolated(LibSnakeError):
    pass


class NotACoil(LibSnakeError):
    pass


class ConfigError(LibSnakeError):
    pass


class CorpusError(LibSnakeError):
    pass


class InvariantViolated(LibSnakeError):
    pass
