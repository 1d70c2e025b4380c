"""Hankel truncations of jump symbols: log-determinants, trace powers and
their log N asymptotics."""

from ._hankelasym import *  # noqa: F401,F403
from ._hankelasym import __version__  # noqa: F401
