"""Exact disposition counting, companion polynomials and their equations.

Polynomials are lists of fractions.Fraction, lowest degree first. Equations
are (U, V, W) triples of such lists for U Y'' + V Y' + W Y = 0.
"""

from ._core import *  # noqa: F401,F403
from ._core import ConsistencyError, DomainError, Digraph, ParseError, SizeError  # noqa: F401
