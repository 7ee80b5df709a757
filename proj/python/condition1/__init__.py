"""Prime-pair divisibility of binomial coefficients.

Thin wrapper over the compiled core. All operations live in
``condition1._core`` and are re-exported here.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
