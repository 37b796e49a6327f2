"""Quantum polar codes for qudit-input channels."""

__version__ = "0.1.0"
