"""Bounds and exclusivity-principle checks for correlation experiments given as exclusivity graphs."""

__version__ = "0.1.0"
