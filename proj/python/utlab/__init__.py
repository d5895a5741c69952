"""Coefficient machinery for inverses of univalent functions.

Thin Python layer over the C++ core: series reversion, Schur parametrization
of Schwarz coefficients, class coefficient maps, Toeplitz functionals and the
bound search.
"""

from ._core import *  # noqa: F401,F403
from ._core import ClassId, FunctionalId

__all__ = [name for name in dir() if not name.startswith("_")]
