"""Exact symbolic verification of the graded Hopf structure of GL_q(1|1) and Gr_q(1|1)."""

__version__ = "0.1.0"

from .coeff import LaurentPoly, q
from .freealg import Element, Presentation, normalize
from .presentations import gl_q, gr_q, mixed, presentation_by_id

__all__ = ["LaurentPoly", "q", "Element", "Presentation", "normalize",
           "gl_q", "gr_q", "mixed", "presentation_by_id", "__version__"]
