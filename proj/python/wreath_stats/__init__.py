"""Exact moments of statistics on conjugacy classes of colored permutation groups."""

from ._wreath_stats import *  # noqa: F401,F403
from ._wreath_stats import BudgetExceeded, ParseError, PreconditionError  # noqa: F401

__version__ = "0.1.0"
