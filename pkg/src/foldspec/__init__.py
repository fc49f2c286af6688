"""Spectral apparatus of 2-rep-tile domains: exact spectra, folding
structure, k-frames, nodal counts and Courant-sharpness verdicts."""

__version__ = "0.1.0"

from .algebra import AlgebraicValue
from .domains import box, triangle

__all__ = ["AlgebraicValue", "box", "triangle", "__version__"]
