"""Coprime witnesses, census formulas and prime-gap checks.

Thin wrapper over the C++ core; big values come back as Python ints.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomainError, Error, FalsificationError, ResourceError  # noqa: F401

__version__ = "0.1.0"
