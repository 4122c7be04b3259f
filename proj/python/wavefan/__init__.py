"""Viscous wave fan profiles for scalar Riemann problems."""

from ._wavefan import *  # noqa: F401,F403
from ._wavefan import __doc__  # noqa: F401

__version__ = "0.1.0"
