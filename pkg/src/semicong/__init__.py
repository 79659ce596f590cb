"""Finite semirings: Green's relations, congruences and Rees matrix structure."""
from .core import *  # noqa: F401,F403
from .elements import *  # noqa: F401,F403
from .relations import *  # noqa: F401,F403
from .congruences import *  # noqa: F401,F403
from .structures import *  # noqa: F401,F403

__version__ = "0.1.0"
