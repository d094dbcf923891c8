"""Quantum identification of incompletely defined linear and affine Boolean functions"""

__version__ = "0.1.0"
