"""Exact spanning-tree and leaf enumeration over graph families, C-finite fitting and B-Z constants."""

__version__ = "0.1.0"
