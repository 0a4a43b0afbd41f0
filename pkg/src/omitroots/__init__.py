"""Hyperbolic metric of the plane punctured at the n-th roots of unity, and the
Landau, Schottky and Schwarz-type constants derived from it."""

from .bounds import BoundComparison, Winner, compare_bounds, hempel_landau_bound, landau_bound, schottky_bound, schwarz_bound
from .constants import RootConstants, covering_derivative, gamma_n, hempel_constant, r_n, root_constants, schwarz_factor
from .errors import OmitRootsError
from .metrics import DensityValue, circle_min, lambda_general, lambda_punctured, lower_bound
from .specfun import BranchedValue, HypergeometricParams, hyp2f1, log_gamma, phi1, phi2

__version__ = "0.1.0"
