"""Exact construction and verification of swap-partition polynomial
representations of gl, sl, sp and so."""

__version__ = "0.1.0"
