"""Yiu's equilateral triangles in the Kiepert hyperbola, constructed and verified."""

__version__ = "0.1.0"
