"""Executable profunctor calculus over finite categories."""

__version__ = "0.1.0"
