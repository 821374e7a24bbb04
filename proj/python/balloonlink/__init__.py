"""Link budget, EM exposure and CO2 model for tethered-balloon base stations."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
