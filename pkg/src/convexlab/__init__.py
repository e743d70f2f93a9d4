"""Brunn-Minkowski and Bonnesen sumset bounds for explicit convex bodies."""
__version__ = "0.1.0"
