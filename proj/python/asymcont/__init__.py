"""Entanglement measures, mixing bounds and continuity certificates for bipartite states.

Density matrices are ``DensityMatrix(dim_a, dim_b, entries)`` with ``entries`` a complex
square array in A-major order (index ``i_a * dim_b + i_b``). Construction validates the state.
"""

from ._core import *  # noqa: F401,F403
from ._core import (
    BallNotCertified,
    DensityMatrix,
    DimensionMismatch,
    DomainError,
    Error,
    FormatError,
    InvalidState,
    MeasureValue,
    PureState,
    SizeLimitError,
    UndefinedRate,
)

__version__ = "0.1.0"
