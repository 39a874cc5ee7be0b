"""Fermionic steering, Bell signal and concurrence in a dilaton black hole."""

from ._core import *  # noqa: F401,F403
from ._core import (
    ArgumentError,
    RootNotFound,
    StructureError,
    ValidationError,
)

__version__ = "0.1.0"
