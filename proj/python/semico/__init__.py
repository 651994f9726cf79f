"""Exact analysis of semicoherent system structure functions.

Components are numbered from 1. Truth tables are bit strings whose
character ``m`` is the value on the subset encoded by the set bits of ``m``.
"""

from ._semico import *  # noqa: F401,F403
from ._semico import __doc__  # noqa: F401

__version__ = "0.1.0"
