"""Exact computations with test configurations, building points and Kempf destabilizers."""

__version__ = "0.1.0"
