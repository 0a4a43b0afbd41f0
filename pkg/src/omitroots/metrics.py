"""Hyperbolic densities on C minus {0, 1} (corner at 0) and on C minus S_n."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .constants import gamma_n, root_constants
from .errors import OptimizationError, PunctureError
from .specfun import check_index, phi1, phi2

NEAR_PUNCTURE = 1e-3
ROOT_EXCLUSION = 1e-12
LOCUS_TOL = 1e-9
SCAN_POINTS = 256
ANGLE_TOL = 1e-10

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class DensityValue:
    value: float
    at_equality_locus: bool = False
    near_puncture: bool = False

    def __float__(self) -> float:
        return self.value


def _denominator(n: int, w: complex) -> float:
    """K2/(2 K3) |phi2(w)|^2 + Re(phi1(w) phi2(conj w)) / K3."""
    rc = root_constants(n)
    p1 = phi1(n, w).value
    p2 = phi2(n, w).value
    # phi2(conj w) = conj(phi2(w)); on the cut both sides are the matching limits
    return rc.k2 / (2.0 * rc.k3) * (p2.real**2 + p2.imag**2) + (p1 * p2.conjugate()).real / rc.k3


def lambda_general(n: int, w: complex) -> DensityValue:
    """Density of the metric on C minus {0,1} with a corner of order 1-1/n at 0
    and cusps at 1 and infinity.

    On (1, inf) the value is the limit of the formula, which is approached
    through the upper-half-plane branch of phi1.
    """
    n = check_index(n)
    w = complex(w)
    if w == 0 or w == 1:
        raise PunctureError(f"w = {w} is a puncture of C minus {{0, 1}}")
    value = 1.0 / (abs(w) ** (1.0 - 1.0 / n) * abs(1.0 - w) * _denominator(n, w))
    return DensityValue(
        value,
        at_equality_locus=abs(w + 1.0) <= LOCUS_TOL,
        near_puncture=min(abs(w), abs(1.0 - w)) < NEAR_PUNCTURE,
    )


def _nearest_root(n: int, z: complex) -> complex:
    k = round(cmath.phase(z) * n / (2.0 * math.pi))
    return cmath.exp(2j * math.pi * k / n)


def lambda_punctured(n: int, z: complex) -> DensityValue:
    """Density of the hyperbolic metric on C minus the n-th roots of unity.

    Pulled back from :func:`lambda_general` under w = z^n; the factor
    n |z|^(n-1) cancels against |w|^(1-1/n), which keeps small |z| free of
    underflow.  At z = 0 the closed form 2 / |f_n'(0)| is returned.
    """
    n = check_index(n)
    z = complex(z)
    if z == 0:
        return DensityValue(root_constants(n).lambda_at_zero)
    dist = abs(z - _nearest_root(n, z))
    if dist <= ROOT_EXCLUSION:
        raise PunctureError(f"z = {z} is a puncture (root of unity of order {n})")
    w = z**n
    if w == 1:
        raise PunctureError(f"z = {z} is numerically a root of unity of order {n}")
    value = n / (abs(1.0 - w) * _denominator(n, w))
    return DensityValue(
        value,
        at_equality_locus=abs(w + 1.0) <= LOCUS_TOL * n,
        near_puncture=dist < NEAR_PUNCTURE,
    )


def lower_bound(n: int, z: complex) -> float:
    """Sharp lower bound for lambda_punctured(n, z), attained iff z^n = -1."""
    g = gamma_n(n)
    r = abs(complex(z))
    root = math.sqrt(1.0 + g * g)
    if r == 0.0:
        return 2.0 * (g + root) / (1.0 + 2.0 * g * g + 2.0 * g * root)
    if r <= 1.0:
        # r sinh(arcsinh g - log r) = (e^A - r^2 e^-A) / 2 = g + (1 - r^2) / (2 e^A)
        ea = g + root
        return 2.0 / (2.0 * g + (1.0 - r) * (1.0 + r) / ea)
    return 1.0 / (r * (g + math.log(r)))


def golden_section_min(f, lo: float, hi: float, tol: float = ANGLE_TOL, max_iter: int = 200) -> tuple[float, float]:
    """Minimise a unimodal f on [lo, hi]; returns (argmin, f(argmin))."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
    x = 0.5 * (lo + hi)
    return x, f(x)


def circle_min(n: int) -> tuple[float, float]:
    """Minimum of lambda_punctured over |z| = 1 on the arc between two roots.

    Coarse scan of the open arc (0, 2 pi/n), then golden-section refinement
    around the best scan point.  Returns (angle, density).
    """
    n = check_index(n)
    arc = 2.0 * math.pi / n
    step = arc / SCAN_POINTS
    angles = [(j + 0.5) * step for j in range(SCAN_POINTS)]

    def dens(theta: float) -> float:
        return lambda_punctured(n, cmath.exp(1j * theta)).value

    values = [dens(t) for t in angles]
    j = min(range(SCAN_POINTS), key=values.__getitem__)
    if j in (0, SCAN_POINTS - 1):
        raise OptimizationError(f"density minimum on the unit circle not bracketed (n={n})")
    return golden_section_min(dens, angles[j - 1], angles[j + 1])
