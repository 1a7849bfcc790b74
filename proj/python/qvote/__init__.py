"""Quantum voting constitutions: preference bases, state algebra, elections.

The heavy lifting lives in the compiled extension; this package re-exports
its public names.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
