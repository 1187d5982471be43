"""Fair division with externalities: exact certification, discrepancy-based
allocators, and hard-instance generators over a C++ core."""

try:
    from ._fdx import *  # noqa: F401,F403
    from ._fdx import __doc__ as _core_doc  # noqa: F401
except ImportError:  # development builds keep the module next to the package
    from _fdx import *  # noqa: F401,F403

__version__ = "0.1.0"
