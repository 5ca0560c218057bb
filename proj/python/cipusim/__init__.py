"""Bit-exact model of a left-to-right (MSDF) composite inner-product unit
and the surrounding CNN accelerator tile, with an analytic performance
model."""

from cipusim._core import *  # noqa: F401,F403
from cipusim._core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
