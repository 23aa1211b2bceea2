"""Numerical inscription of prescribed triangles on C1 Jordan curves."""

__version__ = "1.0.0"
