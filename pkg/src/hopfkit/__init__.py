"""Exact computer-algebra kernel for Hopf coactions on coalgebras."""

__version__ = "0.1.0"
