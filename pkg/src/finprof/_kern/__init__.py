"""Kernel selection: compiled Cython union-find when available, else pure Python."""

try:
    from finprof._kern._ckern import BACKEND, classes, component_count
except ImportError:  # no compiled extension in this install
    from finprof._kern._pykern import BACKEND, classes, component_count

__all__ = ["BACKEND", "classes", "component_count"]
