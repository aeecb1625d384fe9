"""Graceful labelings of compound graphs built from alpha-labeled bases.

Thin re-export of the compiled core; see the _core docstrings for details.
"""

try:
    from ._core import *  # noqa: F401,F403
    from . import _core as _impl
except ImportError:  # in-tree builds put _core next to the sources
    from _core import *  # noqa: F401,F403
    import _core as _impl

__doc__ = _impl.__doc__
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
