"""Ext groups between dual Weyl modules for GL2, with certifiers and transfer tools."""
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
