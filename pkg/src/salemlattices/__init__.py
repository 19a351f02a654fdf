"""Exact decision procedures and constructions for cocompact lattices in
simply-connected solvable Lie groups with bi-invariant metric of index 2."""

__version__ = "0.1.0"
