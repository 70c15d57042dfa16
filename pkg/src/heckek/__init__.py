"""Weyl groups, elliptic representations and K-theory ranks of affine Hecke algebras."""
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
