"""Exact verification engine for polynomial q-series identities."""

__version__ = "0.1.0"
