"""Area-preserving disk maps with prescribed Calabi invariant and their Reeb
lifts: parameter selection, closed-form invariants, orbit class enumeration,
and end-to-end certification ledgers.

The module is a thin veneer over the compiled core; every quantity it
returns is closed form, with the independent numerical cross-checks living
in the core's own test suite.
"""

try:
    from ._diskflow import *  # noqa: F401,F403
    from . import _diskflow as _core
except ImportError:  # an uninstalled tree with the extension on sys.path
    from _diskflow import *  # noqa: F401,F403
    import _diskflow as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "1.0.0"
