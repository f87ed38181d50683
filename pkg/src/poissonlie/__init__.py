"""Exact workbench for curvature and volume conditions on Riemannian Poisson-Lie groups.

The package decides, for a finite-dimensional Lie algebra equipped with a
1-cocycle and a scalar product, whether the associated simply connected
Poisson-Lie group carries a flat metric contravariant connection, vanishing
metacurvature and a Poisson tensor compatible with the Riemannian volume.
All algebraic verdicts are computed in exact rational arithmetic; the group
models in low dimension are additionally verified in floating point.
"""

__version__ = "0.1.0"
