# Object kinds

SNAKE = 'snake'
COIL = 'coil'

KINDS = [SNAKE, COIL]

# Violation reasons

REPEATED_VERTEX = 'RepeatedVertex'
CHORD_ADJACENCY = 'ChordAdjacency'
NOT_CLOSED = 'NotClosed'
DIMENSION_OUT_OF_RANGE = 'DimensionOutOfRange'
TOO_SHORT = 'TooShort'

# Solver statuses

PROVEN = 'proven'
BUDGET_EXHAUSTED = 'budget-exhausted'

# Limits

MAX_DIMENSION = 31
MIN_COIL_LENGTH = 4
BRUTE_FORCE_MAX_DIMENSION = 4
TABLE_MAX_DIMENSION = 20
# Beam candidates keep vertex sets as 2**n-bit masks up to this dimension
# and as frozensets above it
DENSE_SET_MAX_DIMENSION = 20
AK_MIN_DIMENSION = 21

# Fitness scale: one transition outweighs any amount of blocked waste
LENGTH_WEIGHT = 100

# Record sources

CORPUS_SOURCE = 'this-paper'
TRIVIAL = 'trivial'

# CLI exit codes

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

# Every walk starts at the all-zeros vertex
START = 0
