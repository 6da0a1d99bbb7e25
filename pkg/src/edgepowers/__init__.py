"""Symbolic powers of edge ideals, linear-quotients certificates and conjecture sweeps."""

__version__ = "0.1.0"
