"""Exact computer algebra for concrete Hopf algebras, the quantum group az+b,
q-combinatorics, submultiplicative seminorms and envelope numerics."""

from .scalar import GaussianRational, QParam, ModulusClass, ZeroParameter, parse_scalar, format_scalar

__all__ = ["GaussianRational", "QParam", "ModulusClass", "ZeroParameter", "parse_scalar", "format_scalar"]
__version__ = "0.1.0"
