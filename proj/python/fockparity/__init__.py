"""Two-mode Fock-space toolkit: entangled-state projection operators and
parity-measurement interferometry."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
