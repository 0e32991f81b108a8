"""Orientation-reversing isometries of symmetric spaces, computed exactly."""

__version__ = "0.1.0"
