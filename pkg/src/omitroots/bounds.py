"""Landau-, Schottky- and Schwarz-type bounds for analytic maps of the unit disk
omitting the n-th roots of unity, and the comparison with Hempel's bound."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .constants import gamma_n, hempel_constant, r_n, schwarz_factor
from .errors import DomainError

TIE_TOL = 1e-12


class Winner(enum.IntEnum):
    HEMPEL_SHARPER = -1
    TIE = 0
    LANDAU_SHARPER = 1


class HempelBound(NamedTuple):
    value: float
    degenerate: bool


@dataclass(frozen=True)
class BoundComparison:
    a0: complex
    landau_bound: float
    hempel_bound: float
    winner: Winner
    hempel_degenerate: bool = False


def landau_bound(n: int, a0: complex) -> float:
    """Sharp upper bound for |f'(0)| given f(0) = a0.

    Depends on a0 only through |a0|.  Defined for every a0; an a0 in S_n is
    never attained by a function omitting S_n.
    """
    g = gamma_n(n)
    r = abs(complex(a0))
    root = math.sqrt(1.0 + g * g)
    if r == 0.0:
        return (1.0 + 2.0 * g * g + 2.0 * g * root) / (g + root)
    if r <= 1.0:
        # 2r sinh(arcsinh g - log r) = e^A - r^2 e^-A with e^A = g + sqrt(1+g^2);
        # e^A - e^-A = 2g, so the form below has no cancellation
        ea = g + root
        return 2.0 * g + (1.0 - r) * (1.0 + r) / ea
    return 2.0 * r * (g + math.log(r))


def schottky_bound(n: int, abs_f0: float, abs_z: float) -> float:
    """Upper bound for log|f(z)| in terms of |f(0)| and |z| < 1."""
    if not 0.0 <= abs_z < 1.0:
        raise DomainError(f"Schottky bound needs 0 <= |z| < 1, got {abs_z}")
    if abs_f0 < 0.0:
        raise DomainError(f"|f(0)| must be nonnegative, got {abs_f0}")
    g = gamma_n(n)
    log_plus = math.log(abs_f0) if abs_f0 > 1.0 else 0.0
    return (g + log_plus) * (1.0 + abs_z) / (1.0 - abs_z) - g


def schwarz_bound(n: int, abs_z: float) -> float:
    """Upper bound for |f(z)| when f(0) = 0, valid for |z| < R_n."""
    radius = r_n(n)
    if not 0.0 <= abs_z < radius:
        raise DomainError(f"Schwarz bound needs 0 <= |z| < R_{n} = {radius:.6g}, got |z| = {abs_z}")
    return schwarz_factor(n) * abs_z


def hempel_landau_bound(a0: complex) -> HempelBound:
    """Hempel's Landau bound for maps omitting {0, 1}, moved to maps omitting {1, -1}."""
    a0 = complex(a0)
    m = abs(a0 + 1.0)
    if m == 0.0:
        return HempelBound(0.0, True)
    return HempelBound(2.0 * m * (abs(math.log(m / 2.0)) + hempel_constant()), False)


def compare_bounds(a0: complex) -> BoundComparison:
    """Landau bound at n = 2 versus Hempel's bound at the same a0."""
    a0 = complex(a0)
    lb = landau_bound(2, a0)
    hb, degenerate = hempel_landau_bound(a0)
    diff = hb - lb
    if abs(diff) <= TIE_TOL:
        winner = Winner.TIE
    elif diff > 0:
        winner = Winner.LANDAU_SHARPER
    else:
        winner = Winner.HEMPEL_SHARPER
    return BoundComparison(a0, lb, hb, winner, degenerate)
