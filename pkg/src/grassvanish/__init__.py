"""Partition combinatorics for line bundle cohomology and vanishing bounds."""

__version__ = "0.1.0"
