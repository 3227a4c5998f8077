"""Skew RSK dynamics, affine bicrystal symmetries, and q-Whittaker identities."""

__version__ = "0.1.0"
