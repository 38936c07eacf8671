"""Galois-equivariant McKay counts for groups of Lie type in defining characteristic."""

__version__ = "0.1.0"
