"""Limit shapes of restricted integer partitions."""

__version__ = "0.1.0"
