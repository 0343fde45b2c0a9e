"""Quantum discord and the entanglement structure of purifications.

Subpackages: ``core`` (dense multi-qubit linear algebra), ``qubit`` (discord,
entanglement measures, the rank-2 family), ``gaussian`` (pure three-mode
Gaussian states), ``experiments`` (scans, contours, fuzzing) and ``cli``.
"""

__version__ = "0.1.0"

from . import core, gaussian, qubit  # noqa: E402
from .errors import ConvergenceError  # noqa: E402
