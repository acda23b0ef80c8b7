"""Exact engine for interval families over GF(2), the nonabelian Fourier
transform on pairing modules, and the family parametrization of their
second and third bases."""

__version__ = "0.1.0"
