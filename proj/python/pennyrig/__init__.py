"""Rigidity toolkit for contact graphs of unit spheres."""

from ._pennyrig import *  # noqa: F401,F403
from ._pennyrig import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
