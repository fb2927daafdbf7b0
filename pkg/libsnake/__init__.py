"""
LibSnake: snakes (induced paths) and coils (induced cycles) in
n-dimensional hypercubes.
"""

import logging

from libsnake import (locals, error, util, config, path, loader, hypercube,
                      exact, beam, records)

VERSION = '1.0'

logging.getLogger(__name__).addHandler(logging.NullHandler())
