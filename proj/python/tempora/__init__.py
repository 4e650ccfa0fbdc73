"""Temporal quantum correlations across pseudo-density matrices, process
matrices, consistent histories, signalling games and OTOCs.

Matrices are numpy complex arrays with big-endian tensor ordering.
"""

from ._tempora import *  # noqa: F401,F403
from ._tempora import (  # noqa: F401
    DimensionError,
    ImpossiblePostselection,
    SizeLimitExceeded,
    UndefinedCorrelation,
    ValidationError,
)

__version__ = "0.1.0"
