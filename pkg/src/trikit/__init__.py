"""Triangulation quivers, ribbon graphs, mutations and their algebras."""

__version__ = "0.1.0"
