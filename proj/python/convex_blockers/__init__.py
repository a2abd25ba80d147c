"""Minimum blocking sets of simple perfect matchings in CK(2m)."""

from ._core import *  # noqa: F401,F403
from ._core import (
    InfeasibleError,
    InputError,
    ResourceError,
    StructureError,
)

__version__ = "0.1.0"
