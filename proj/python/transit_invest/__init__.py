"""Budget-constrained transit investment solvers.

Exact values are returned as ``fractions.Fraction``; infinite costs as ``math.inf``.
"""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    AgentCountError,
    InapplicableError,
    InvalidInstanceError,
    NtpInstance,
    PtpInstance,
    TooLargeError,
    TransitError,
)

__version__ = "0.1.0"
