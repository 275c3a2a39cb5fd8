"""Lipschitz normal embedding of superisolated surface singularities."""

__version__ = "0.1.0"
